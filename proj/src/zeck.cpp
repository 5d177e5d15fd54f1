#include "plrs/zeck.hpp"

#include <algorithm>
#include <sstream>

#include "plrs/error.hpp"
#include "plrs/subset_sum.hpp"
#include "plrs/verdicts.hpp"

namespace plrs {

bool is_legal(const CoefficientVector& cv, const DigitString& s) {
  const auto& a = s.digits;
  const std::size_t m = a.size();
  const std::size_t L = cv.length();
  // tail_ok[p]: a[p..m) is legal or empty.
  std::vector<char> tail_ok(m + 1, 0);
  tail_ok[m] = 1;
  for (std::size_t p = m; p-- > 0;) {
    if (a[p] == 0) continue;
    const std::size_t len = m - p;
    // Condition 1: a short, exact prefix of the coefficients.
    bool exact = len < L;
    for (std::size_t i = 0; exact && i < len; ++i) exact = a[p + i] == cv.c(i + 1);
    if (exact) {
      tail_ok[p] = 1;
      continue;
    }
    // Condition 2: a_1..a_{s-1} = c_1..c_{s-1}, a_s < c_s, l zeros, legal rest.
    for (std::size_t s_idx = 1; s_idx <= std::min(L, len) && !tail_ok[p]; ++s_idx) {
      bool prefix = true;
      for (std::size_t i = 1; prefix && i < s_idx; ++i) prefix = a[p + i - 1] == cv.c(i);
      if (!prefix) break;
      if (a[p + s_idx - 1] >= cv.c(s_idx)) continue;
      for (std::size_t rest = p + s_idx; rest <= m; ++rest) {
        if (tail_ok[rest]) {
          tail_ok[p] = 1;
          break;
        }
        if (rest == m || a[rest] != 0) break;
      }
    }
  }
  return tail_ok[0] != 0;
}

BigInt value_of(const CoefficientVector& cv, const DigitString& s) {
  const std::size_t m = s.size();
  if (m == 0) return 0;
  Sequence seq(cv);
  BigInt total = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (s.digits[i] != 0) total += seq.term(m - i) * s.digits[i];
  }
  return total;
}

std::optional<std::size_t> LegalityAutomaton::next(std::size_t state, std::uint64_t d) const {
  const std::size_t L = cv_.length();
  const std::uint64_t want = cv_.c(state + 1);
  if (state == 0 && d == 0) return 0;
  if (d == want) {
    if (state + 1 == L) return std::nullopt;  // a full block is never legal
    return state + 1;
  }
  if (d < want) return 0;
  return std::nullopt;
}

bool LegalityAutomaton::accepts(const DigitString& s) const {
  if (!s.empty() && s.digits.front() == 0) return false;
  std::size_t state = 0;
  for (auto d : s.digits) {
    auto n = next(state, d);
    if (!n) return false;
    state = *n;
  }
  return true;
}

namespace {

struct Builder {
  const LegalityAutomaton& dfa;
  std::uint64_t max_digit;
  std::size_t m;
  std::vector<BigInt> weight;                // weight[pos] = H_{m - pos}
  std::vector<std::vector<BigInt>> best;     // best[r][q]: max value of r digits from state q
  std::vector<std::uint64_t> out;

  void fill_best(std::size_t states) {
    best.assign(m + 1, std::vector<BigInt>(states, 0));
    for (std::size_t r = 1; r <= m; ++r) {
      const BigInt& w = weight[m - r];
      for (std::size_t q = 0; q < states; ++q) {
        for (std::uint64_t d = 0; d <= max_digit; ++d) {
          if (auto nq = dfa.next(q, d)) {
            BigInt candidate = w * d + best[r - 1][*nq];
            if (candidate > best[r][q]) best[r][q] = std::move(candidate);
          }
        }
      }
    }
  }

  bool place(std::size_t pos, std::size_t state, const BigInt& remaining) {
    if (pos == m) return remaining == 0;
    const BigInt& w = weight[pos];
    const BigInt fit = remaining / w;
    std::uint64_t d = fit > max_digit ? max_digit : fit.convert_to<std::uint64_t>();
    const std::uint64_t low = pos == 0 ? 1 : 0;
    for (;; --d) {
      if (d < low) return false;
      if (auto nq = dfa.next(state, d)) {
        BigInt rest = remaining - w * d;
        if (rest <= best[m - pos - 1][*nq]) {
          out[pos] = d;
          if (place(pos + 1, *nq, rest)) return true;
        }
      }
      if (d == 0) return false;
    }
  }
};

}  // namespace

DigitString legal_decompose(const CoefficientVector& cv, const BigInt& n) {
  if (n < 0) throw OutOfRange("cannot decompose a negative integer");
  if (n == 0) return {};
  if (cv.is_degenerate()) {
    throw Error("the generator [1] admits no legal decomposition of a positive integer");
  }
  Sequence seq(cv);
  std::size_t top = 1;
  while (seq.term(top + 1) <= n) ++top;

  const LegalityAutomaton dfa(cv);
  const auto v = cv.values();
  const std::uint64_t max_digit = *std::max_element(v.begin(), v.end());
  for (std::size_t m = top; m >= 1; --m) {
    Builder b{dfa, max_digit, m, {}, {}, std::vector<std::uint64_t>(m, 0)};
    for (std::size_t pos = 0; pos < m; ++pos) b.weight.push_back(seq.term(m - pos));
    b.fill_best(dfa.states());
    if (b.place(0, 0, n)) return DigitString{std::move(b.out)};
  }
  throw Error("no legal decomposition found for " + n.str() + " under " + cv.str());
}

std::vector<DigitString> enumerate_legal(const CoefficientVector& cv, const BigInt& n,
                                         std::uint64_t cap) {
  if (n < 0) throw OutOfRange("cannot decompose a negative integer");
  if (n > cap) {
    throw CapError("brute-force enumeration capped at " + std::to_string(cap));
  }
  if (n == 0) return {DigitString{}};
  // No nonempty string is legal for [1]: condition 1 needs m < 1 and
  // condition 2 needs 0 < a_1 < 1.
  if (cv.is_degenerate()) return {};

  Sequence seq(cv);
  std::size_t longest = 1;
  while (seq.term(longest) <= n) ++longest;
  const auto v = cv.values();
  const std::uint64_t max_digit = *std::max_element(v.begin(), v.end());

  std::vector<DigitString> found;
  for (std::size_t m = 1; m <= longest; ++m) {
    std::vector<BigInt> w(m);
    std::vector<BigInt> tail_max(m + 1, 0);  // max value of positions pos..m-1
    for (std::size_t pos = 0; pos < m; ++pos) w[pos] = seq.term(m - pos);
    for (std::size_t pos = m; pos-- > 0;) tail_max[pos] = tail_max[pos + 1] + w[pos] * max_digit;
    std::vector<std::uint64_t> digits(m, 0);
    auto rec = [&](auto&& self, std::size_t pos, const BigInt& remaining) -> void {
      if (pos == m) {
        if (remaining == 0) {
          DigitString s{digits};
          if (is_legal(cv, s)) found.push_back(std::move(s));
        }
        return;
      }
      if (remaining > tail_max[pos]) return;
      for (std::uint64_t d = pos == 0 ? 1 : 0; d <= max_digit; ++d) {
        const BigInt used = w[pos] * d;
        if (used > remaining) break;
        digits[pos] = d;
        self(self, pos + 1, remaining - used);
      }
      digits[pos] = 0;
    };
    rec(rec, 0, n);
  }
  return found;
}

std::optional<DistinctDecomposition> distinct_decompose(const CoefficientVector& cv,
                                                        std::uint64_t n, std::uint64_t cap) {
  if (n == 0) throw OutOfRange("distinct decompositions are defined for positive integers");
  if (n > cap) throw CapError("distinct decomposition capped at " + std::to_string(cap));
  const auto terms = terms_up_to(cv, n);
  auto picked = subset_sum_trace(terms, n, cap);
  if (!picked) return std::nullopt;
  DistinctDecomposition out;
  for (auto j : *picked) out.indices.push_back(j + 1);
  return out;
}

std::string format_legal(const CoefficientVector& cv, const DigitString& s) {
  if (s.empty()) return "empty";
  const bool binary = std::all_of(s.digits.begin(), s.digits.end(), [](auto d) { return d <= 1; });
  Sequence seq(cv);
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto d = s.digits[i];
    if (d == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (!binary) out << d << "·";
    out << seq.term(s.size() - i);
  }
  return out.str();
}

std::string format_distinct(const CoefficientVector& cv, const DistinctDecomposition& d) {
  if (d.indices.empty()) return "empty";
  Sequence seq(cv);
  std::ostringstream out;
  for (auto it = d.indices.rbegin(); it != d.indices.rend(); ++it) {
    if (it != d.indices.rbegin()) out << " + ";
    out << seq.term(*it);
  }
  return out.str();
}

}  // namespace plrs
