#include "plrs/seqcore.hpp"

#include <charconv>
#include <sstream>

#include "plrs/error.hpp"

namespace plrs {

CoefficientVector CoefficientVector::validate(std::span<const std::int64_t> raw) {
  if (raw.empty()) {
    throw ValidationError(ValidationCode::EmptyVector, 0, "coefficient vector is empty");
  }
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] < 0) {
      throw ValidationError(ValidationCode::NegativeCoefficient, i + 1,
                            "coefficient c_" + std::to_string(i + 1) + " is negative");
    }
  }
  if (raw.front() == 0) {
    throw ValidationError(ValidationCode::LeadingZero, 1, "first coefficient must be positive");
  }
  if (raw.back() == 0) {
    throw ValidationError(ValidationCode::TrailingZero, raw.size(),
                          "last coefficient must be positive");
  }
  return CoefficientVector(std::vector<std::uint64_t>(raw.begin(), raw.end()));
}

CoefficientVector CoefficientVector::parse(std::string_view text) {
  std::vector<std::int64_t> raw;
  std::size_t pos = 0;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '[')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == ']')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) return validate(raw);
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    auto token = trim(text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos));
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw Error("cannot parse coefficient '" + std::string(token) + "'");
    }
    raw.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return validate(raw);
}

std::string CoefficientVector::csv() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) out << ',';
    out << c_[i];
  }
  return out.str();
}

std::string CoefficientVector::str() const { return "[" + csv() + "]"; }

Sequence::Sequence(CoefficientVector cv) : cv_(std::move(cv)) {
  terms_.emplace_back(1);
  sums_.emplace_back(1);
}

void Sequence::extend_to(std::size_t n) {
  const std::size_t L = cv_.length();
  while (terms_.size() < n) {
    // Computing H_{m+1} from H_1..H_m.
    const std::size_t m = terms_.size();
    BigInt next = m < L ? BigInt(1) : BigInt(0);
    const std::size_t reach = std::min(m, L);
    for (std::size_t i = 1; i <= reach; ++i) {
      const auto ci = cv_.c(i);
      if (ci != 0) next += terms_[m - i] * ci;
    }
    sums_.push_back(sums_.back() + next);
    terms_.push_back(std::move(next));
  }
}

BigInt Sequence::term(std::size_t n) {
  if (n == 0) throw OutOfRange("term index is 1-based");
  extend_to(n);
  return terms_[n - 1];
}

std::vector<BigInt> Sequence::prefix(std::size_t n) {
  extend_to(n);
  return {terms_.begin(), terms_.begin() + static_cast<std::ptrdiff_t>(n)};
}

BigInt Sequence::partial_sum(std::size_t n) {
  if (n == 0) return 0;
  extend_to(n);
  return sums_[n - 1];
}

BigInt Sequence::brown_gap(std::size_t n) {
  if (n == 0) throw OutOfRange("gap index is 1-based");
  extend_to(n);
  return 1 + partial_sum(n - 1) - terms_[n - 1];
}

std::vector<BigInt> Sequence::brown_gaps(std::size_t n) {
  std::vector<BigInt> gaps;
  gaps.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) gaps.push_back(brown_gap(i));
  return gaps;
}

BigInt term(const CoefficientVector& cv, std::size_t n) { return Sequence(cv).term(n); }

std::vector<BigInt> terms_prefix(const CoefficientVector& cv, std::size_t n) {
  return Sequence(cv).prefix(n);
}

BigInt brown_gap(const CoefficientVector& cv, std::size_t n) { return Sequence(cv).brown_gap(n); }

}  // namespace plrs
