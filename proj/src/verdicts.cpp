#include "plrs/verdicts.hpp"

#include <algorithm>

#include "plrs/error.hpp"
#include "plrs/families.hpp"

namespace plrs {

std::string_view rule_name(ProofRule rule) {
  switch (rule) {
    case ProofRule::AllPositive: return "AllPositive";
    case ProofRule::GeometricL1: return "GeometricL1";
    case ProofRule::FamilySingleOne: return "FamilySingleOne";
    case ProofRule::FamilyDoubleOne: return "FamilyDoubleOne";
    case ProofRule::FamilyGOnes: return "FamilyGOnes";
    case ProofRule::DecreaseLast: return "DecreaseLast";
    case ProofRule::MergeLast: return "MergeLast";
    case ProofRule::WeakWindow: return "WeakWindow";
  }
  return "?";
}

std::string_view kind_name(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Complete: return "Complete";
    case VerdictKind::Incomplete: return "Incomplete";
    case VerdictKind::ConjecturallyComplete: return "ConjecturallyComplete";
  }
  return "?";
}

const ProofTag* CompletenessVerdict::proof() const noexcept {
  if (auto* c = std::get_if<Complete>(&outcome)) return &c->proof;
  return nullptr;
}

std::size_t default_horizon(const CoefficientVector& cv) {
  return std::max<std::size_t>(2 * cv.length() - 1, 2);
}

std::size_t effective_horizon(const CoefficientVector& cv, const AnalysisConfig& config) {
  const auto floor = default_horizon(cv);
  if (config.horizon == 0) return floor;
  if (config.horizon < floor) {
    throw OutOfRange("horizon " + std::to_string(config.horizon) + " is below max(2L-1, 2) = " +
                     std::to_string(floor));
  }
  return config.horizon;
}

ScanResult brown_scan(Sequence& seq, std::size_t horizon) {
  ScanResult out;
  out.gaps.reserve(horizon);
  for (std::size_t n = 1; n <= horizon; ++n) {
    out.gaps.push_back(seq.brown_gap(n));
    if (!out.first_failure && out.gaps.back() < 0) out.first_failure = n;
  }
  return out;
}

ScanResult brown_scan(const CoefficientVector& cv, std::size_t horizon) {
  Sequence seq(cv);
  return brown_scan(seq, horizon);
}

bool weak_window_check(const CoefficientVector& cv) {
  const std::size_t L = cv.length();
  if (L == 1) return cv.c(1) <= 2;
  Sequence seq(cv);
  for (std::size_t n = 1; n <= 2 * L - 1; ++n) {
    const BigInt gap = seq.brown_gap(n);
    if (n < L ? gap < 0 : gap <= 0) return false;
  }
  return true;
}

namespace {

bool all_positive(const CoefficientVector& cv) {
  const auto v = cv.values();
  return std::all_of(v.begin(), v.end(), [](auto c) { return c > 0; });
}

// Shape [1, 0.., 1 at i, 0.., 0, N] with L >= 6 and 2 <= i <= L-2.
std::optional<std::size_t> corollary_position(const CoefficientVector& cv) {
  const std::size_t L = cv.length();
  if (L < 6 || cv.c(1) != 1 || cv.c(L - 1) != 0) return std::nullopt;
  std::optional<std::size_t> pos;
  for (std::size_t i = 2; i <= L - 2; ++i) {
    if (cv.c(i) == 0) continue;
    if (cv.c(i) != 1 || pos) return std::nullopt;
    pos = i;
  }
  return pos;
}

CoefficientVector with_last_merged(const CoefficientVector& cv) {
  const auto v = cv.values();
  std::vector<std::int64_t> raw(v.begin(), v.end() - 1);
  raw.back() += static_cast<std::int64_t>(v.back());
  return CoefficientVector::validate(raw);
}

// Scans past the horizon for a vector already known to be incomplete, so the
// verdict can carry a concrete first failure and witness.
std::optional<std::size_t> extend_scan(Sequence& seq, std::size_t from, std::size_t limit,
                                       std::vector<BigInt>& gaps) {
  for (std::size_t n = from; n <= limit; ++n) {
    gaps.push_back(seq.brown_gap(n));
    if (gaps.back() < 0) return n;
  }
  return std::nullopt;
}

CompletenessVerdict make_incomplete(CompletenessVerdict v, Sequence& seq, std::size_t n) {
  v.outcome = Incomplete{n, 1 + seq.partial_sum(n - 1)};
  return v;
}

}  // namespace

CompletenessVerdict classify(const CoefficientVector& cv, const AnalysisConfig& config) {
  const std::size_t L = cv.length();
  const std::size_t horizon = effective_horizon(cv, config);
  Sequence seq(cv);
  auto scan = brown_scan(seq, horizon);
  CompletenessVerdict verdict{cv, ConjecturallyComplete{horizon}, horizon, std::move(scan.gaps)};

  // (a) direct gap failure
  if (scan.first_failure) return make_incomplete(std::move(verdict), seq, *scan.first_failure);

  auto complete = [&](ProofTag tag) {
    verdict.outcome = Complete{std::move(tag)};
    return verdict;
  };
  bool known_incomplete = false;

  // (b) strictly positive coefficients
  if (all_positive(cv)) {
    bool ones_prefix = true;
    for (std::size_t i = 1; i < L; ++i) ones_prefix = ones_prefix && cv.c(i) == 1;
    if (ones_prefix && cv.c(L) <= 2) {
      if (L == 1 && cv.c(1) == 2) return complete({ProofRule::GeometricL1, {}, nullptr});
      return complete({ProofRule::AllPositive, {L}, nullptr});
    }
    known_incomplete = true;
  }

  // (c) closed-form families, then the shifted-one corollary
  if (!known_incomplete && config.use_family_rules) {
    if (auto fam = FamilySpec::match(cv)) {
      if (auto bound = fam->bound()) {
        if (fam->n <= bound->max_n) {
          switch (bound->rule) {
            case BoundRule::SingleOne:
              return complete({ProofRule::FamilySingleOne, {fam->k, bound->max_n}, nullptr});
            case BoundRule::DoubleOne:
              return complete({ProofRule::FamilyDoubleOne, {fam->k, bound->max_n}, nullptr});
            default:
              return complete({ProofRule::FamilyGOnes, {fam->g, fam->k, bound->max_n}, nullptr});
          }
        }
        known_incomplete = bound->exact;
      }
    }
    if (auto pos = corollary_position(cv)) {
      const auto bound = corollary_shift_bound(L, *pos);
      if (cv.c(L) <= bound.max_n) {
        return complete({ProofRule::DecreaseLast, {bound.max_n, *pos}, nullptr});
      }
    }
  }

  // Appending a positive coefficient to an incomplete vector keeps it
  // incomplete, so a proper prefix followed only by positive entries decides.
  if (!known_incomplete) {
    for (std::size_t j = L - 1; j >= 1; --j) {
      if (cv.c(j + 1) == 0) break;
      if (cv.c(j) == 0) continue;
      const auto v = cv.values();
      std::vector<std::int64_t> raw(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(j));
      AnalysisConfig sub = config;
      sub.horizon = 0;
      if (classify(CoefficientVector::validate(raw), sub).is_incomplete()) {
        known_incomplete = true;
        break;
      }
    }
  }

  if (known_incomplete) {
    const std::size_t limit = std::max<std::size_t>(16 * horizon, 256);
    if (auto n = extend_scan(seq, horizon + 1, limit, verdict.gaps)) {
      return make_incomplete(std::move(verdict), seq, *n);
    }
    verdict.gaps.resize(horizon);
  }

  // (d) merging the last two coefficients preserves incompleteness, so a
  // complete merged vector certifies this one.
  if (L >= 2) {
    const auto merged = with_last_merged(cv);
    const auto inner = classify(merged, config);
    if (const ProofTag* tag = inner.proof()) {
      return complete({ProofRule::MergeLast, {merged.c(merged.length())},
                       std::make_shared<const ProofTag>(*tag)});
    }
  }

  // (e) finitary sufficient criterion
  if (weak_window_check(cv)) {
    return complete({ProofRule::WeakWindow, {1, 2 * L - 1}, nullptr});
  }

  // (f)
  return verdict;
}

std::vector<BigInt> terms_up_to(const CoefficientVector& cv, std::size_t cap) {
  Sequence seq(cv);
  std::vector<BigInt> out;
  // Strictly increasing except for [1]; at most cap copies of 1 ever matter.
  for (std::size_t n = 1; out.size() < cap; ++n) {
    BigInt t = seq.term(n);
    if (t > cap) break;
    out.push_back(std::move(t));
  }
  return out;
}

OracleCheck is_complete_up_to(const CoefficientVector& cv, std::size_t cap,
                              std::size_t max_bits) {
  if (cap >= max_bits) {
    throw CapError("oracle cap " + std::to_string(cap) + " exceeds the bitmap budget");
  }
  const auto terms = terms_up_to(cv, cap);
  const auto reach = subset_sum_reachable(terms, cap, max_bits);
  const auto missing = reach.first_unreachable();
  return {!missing.has_value(), missing};
}

}  // namespace plrs
