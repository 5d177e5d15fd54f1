#include "plrs/families.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "plrs/error.hpp"

namespace plrs {

BigInt fib(std::size_t n) {
  if (n == 0) throw OutOfRange("Fibonacci index is 1-based");
  BigInt a = 1, b = 2;
  for (std::size_t i = 1; i < n; ++i) {
    BigInt c = a + b;
    a = std::move(b);
    b = std::move(c);
  }
  return a;
}

unsigned ceil_log2(std::uint64_t k) {
  if (k == 0) throw OutOfRange("log2 of zero");
  unsigned bits = 0;
  while ((std::uint64_t{1} << bits) < k) ++bits;
  return bits;
}

std::string_view bound_rule_name(BoundRule rule) {
  switch (rule) {
    case BoundRule::SingleOne: return "SingleOne";
    case BoundRule::DoubleOne: return "DoubleOne";
    case BoundRule::GOnesPlateau: return "GOnesPlateau";
    case BoundRule::GOnesRamp: return "GOnesRamp";
    case BoundRule::CorollaryShift: return "CorollaryShift";
  }
  return "?";
}

BoundResult max_n_single_one(std::uint64_t k) {
  if (k > (std::uint64_t{1} << 30)) throw OutOfRange("k too large");
  return {((k + 2) * (k + 3) + 3) / 4, BoundRule::SingleOne, true};
}

BoundResult max_n_double_one(std::uint64_t k) {
  const BigInt value = (fib(k + 6) - k - 5) / 4;
  const auto n = to_u64(value);
  if (!n) throw OutOfRange("bound exceeds 64 bits for k = " + std::to_string(k));
  return {*n, BoundRule::DoubleOne, true};
}

std::optional<BoundResult> max_n_g_ones(std::uint64_t g, std::uint64_t k) {
  if (g == 0 || k == 0) throw OutOfRange("g and k must be positive");
  if (k > 62) throw OutOfRange("k too large");
  if (g < k) return std::nullopt;
  const std::uint64_t top = std::uint64_t{1} << (k + 1);
  const std::uint64_t threshold = k + ceil_log2(k);
  // The two regimes share g = threshold, where ceil(k / 2^{g-k}) = 1.
  if (g >= threshold) return BoundResult{top - 1, BoundRule::GOnesPlateau, true};
  const std::uint64_t divisor = std::uint64_t{1} << (g - k);
  return BoundResult{top - (k + divisor - 1) / divisor, BoundRule::GOnesRamp, true};
}

BoundResult corollary_shift_bound(std::size_t L, std::size_t i) {
  if (L < 6) throw OutOfRange("shifted-one bound needs L >= 6");
  if (i < 2 || i > L - 2) throw OutOfRange("shift position must lie in {2, ..., L-2}");
  return {(L * (L + 1) + 3) / 4, BoundRule::CorollaryShift, false};
}

std::optional<FamilySpec> FamilySpec::match(const CoefficientVector& cv) {
  const auto v = cv.values();
  FamilySpec spec;
  spec.g = 0;
  std::size_t i = 0;
  const std::size_t prefix = v.size() - 1;
  while (i < prefix && v[i] == 1) ++i, ++spec.g;
  while (i < prefix && v[i] == 0) ++i, ++spec.k;
  if (i != prefix || spec.g == 0) return std::nullopt;
  spec.n = v.back();
  return spec;
}

CoefficientVector FamilySpec::to_vector() const {
  std::vector<std::int64_t> raw(g, 1);
  raw.insert(raw.end(), k, 0);
  raw.push_back(static_cast<std::int64_t>(n));
  return CoefficientVector::validate(raw);
}

std::optional<BoundResult> FamilySpec::bound() const {
  if (g == 1) return max_n_single_one(k);
  if (g == 2) return max_n_double_one(k);
  if (k == 0) return std::nullopt;
  return max_n_g_ones(g, k);
}

CoefficientVector corollary_vector(std::size_t L, std::size_t i, std::uint64_t n) {
  corollary_shift_bound(L, i);
  std::vector<std::int64_t> raw(L, 0);
  raw[0] = 1;
  raw[i - 1] = 1;
  raw[L - 1] = static_cast<std::int64_t>(n);
  return CoefficientVector::validate(raw);
}

std::vector<std::uint64_t> family_prefix(std::uint64_t g, std::uint64_t k) {
  std::vector<std::uint64_t> p(g, 1);
  p.insert(p.end(), k, 0);
  return p;
}

EmpiricalMax empirical_max_n(std::span<const std::uint64_t> prefix,
                             const AnalysisConfig& config) {
  if (prefix.empty() || prefix.front() == 0) {
    throw OutOfRange("prefix must be nonempty with a positive first coefficient");
  }
  const std::size_t L = prefix.size() + 1;
  if (L > 60) throw OutOfRange("prefix too long");

  std::vector<std::int64_t> raw(prefix.begin(), prefix.end());
  raw.push_back(1);
  auto verdict_for = [&](std::uint64_t n) {
    raw.back() = static_cast<std::int64_t>(n);
    return classify(CoefficientVector::validate(raw), config);
  };

  EmpiricalMax out;
  if (verdict_for(1).is_incomplete()) {
    out.provenance = "Incomplete";
    return out;
  }

  // A complete sequence has H_{L+1} <= 2^L, and H_{L+1} >= N, so 2^L + 1
  // always fails.
  const std::uint64_t ceiling = (std::uint64_t{1} << L) + 1;
  std::size_t zeros = 0;
  for (auto it = prefix.rbegin(); it != prefix.rend() && *it == 0; ++it) ++zeros;
  std::uint64_t lo = 1;
  std::uint64_t hi = std::min<std::uint64_t>(std::uint64_t{1} << std::min<std::size_t>(zeros + 2, 62),
                                             ceiling);
  while (hi < ceiling && verdict_for(hi).not_incomplete()) {
    lo = hi;
    hi = std::min(hi * 2, ceiling);
  }
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    (verdict_for(mid).not_incomplete() ? lo : hi) = mid;
  }
  out.max_n = lo;

  const auto at_max = verdict_for(lo);
  if (const ProofTag* tag = at_max.proof()) {
    out.provenance = std::string(rule_name(tag->rule));
  } else {
    out.provenance = std::string(kind_name(at_max.kind()));
  }
  // Decreasing the last coefficient preserves completeness, so the first
  // proven N found walking down bounds every smaller one.
  for (std::uint64_t n = lo; n >= 1; --n) {
    if ((n == lo ? at_max : verdict_for(n)).is_complete()) {
      out.proven_max_n = n;
      break;
    }
  }
  return out;
}

std::vector<FigureRow> figure1_table(Range k_range, Range g_range, const AnalysisConfig& config,
                                     unsigned jobs) {
  if (k_range.lo > k_range.hi || g_range.lo > g_range.hi || g_range.lo == 0) {
    throw OutOfRange("figure ranges must be nonempty with g >= 1");
  }
  std::vector<FigureRow> rows;
  for (auto k = k_range.lo; k <= k_range.hi; ++k) {
    for (auto g = g_range.lo; g <= g_range.hi; ++g) rows.push_back({k, g, 0, std::nullopt, {}});
  }
  std::atomic<std::size_t> next{0};
  std::mutex failure_mutex;
  std::exception_ptr failure;
  auto worker = [&] {
    try {
      for (std::size_t i = next++; i < rows.size(); i = next++) {
        auto& row = rows[i];
        const auto prefix = family_prefix(row.g, row.k);
        const auto emp = empirical_max_n(prefix, config);
        row.empirical_max_n = emp.max_n;
        row.provenance = emp.provenance;
        if (row.k >= 1) {
          if (auto b = max_n_g_ones(row.g, row.k)) row.closed_form_max_n = b->max_n;
        }
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = rows.size();
    }
  };
  const unsigned n_threads = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(rows.size())));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  if (failure) std::rethrow_exception(failure);
  return rows;
}

}  // namespace plrs
