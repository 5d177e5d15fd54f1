#pragma once

// Maximal last coefficients for the [1 x g, 0 x k, N] families.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "plrs/bigint.hpp"
#include "plrs/seqcore.hpp"
#include "plrs/verdicts.hpp"

namespace plrs {

/// Fibonacci numbers indexed F_1 = 1, F_2 = 2, F_n = F_{n-1} + F_{n-2}.
BigInt fib(std::size_t n);

/// ceil(log2 k) for k >= 1, with ceil(log2 1) = 0.
unsigned ceil_log2(std::uint64_t k);

enum class BoundRule { SingleOne, DoubleOne, GOnesPlateau, GOnesRamp, CorollaryShift };

std::string_view bound_rule_name(BoundRule rule);

struct BoundResult {
  std::uint64_t max_n;
  BoundRule rule;
  /// True when the family is complete exactly for 1 <= N <= max_n.
  bool exact;
};

/// [1, 0 x k, N]: ceil((k+2)(k+3)/4).
BoundResult max_n_single_one(std::uint64_t k);
/// [1, 1, 0 x k, N]: floor((F_{k+6} - k - 5)/4).
BoundResult max_n_double_one(std::uint64_t k);
/// [1 x g, 0 x k, N] for g >= k >= 1; empty for g < k.
std::optional<BoundResult> max_n_g_ones(std::uint64_t g, std::uint64_t k);
/// [1, 0.., 1 at position i, 0.., 0, N] with L >= 6, 2 <= i <= L-2:
/// ceil(L(L+1)/4) is complete (not claimed maximal). Throws OutOfRange.
BoundResult corollary_shift_bound(std::size_t L, std::size_t i);

struct FamilySpec {
  std::uint64_t g = 1;
  std::uint64_t k = 0;
  std::uint64_t n = 1;

  /// Recognizes [1 x g, 0 x k, N] with g >= 1 (the last entry is always N).
  static std::optional<FamilySpec> match(const CoefficientVector& cv);
  CoefficientVector to_vector() const;
  /// The proven bound covering this (g, k), if any theorem applies.
  std::optional<BoundResult> bound() const;
};

/// Vector with c_1 = 1, c_i = 1, all other interior entries 0, last entry n.
CoefficientVector corollary_vector(std::size_t L, std::size_t i, std::uint64_t n);

struct EmpiricalMax {
  /// Largest N whose verdict is not Incomplete (0 if even N = 1 fails).
  std::uint64_t max_n = 0;
  /// Largest N with a proven Complete verdict.
  std::uint64_t proven_max_n = 0;
  /// Proof rule (or verdict kind) at max_n.
  std::string provenance;
};

/// Largest last coefficient N keeping [prefix, N] complete, by binary search
/// over classify (downward closure in N makes the search valid).
EmpiricalMax empirical_max_n(std::span<const std::uint64_t> prefix,
                             const AnalysisConfig& config = {});

std::vector<std::uint64_t> family_prefix(std::uint64_t g, std::uint64_t k);

struct FigureRow {
  std::uint64_t k = 0;
  std::uint64_t g = 0;
  std::uint64_t empirical_max_n = 0;
  std::optional<std::uint64_t> closed_form_max_n;
  std::string provenance;

  friend bool operator==(const FigureRow&, const FigureRow&) = default;
};

struct Range {
  std::uint64_t lo = 1;
  std::uint64_t hi = 1;
};

/// One row per (k, g), ordered by k then g. Rows are computed on up to
/// `jobs` threads; the result does not depend on the thread count.
std::vector<FigureRow> figure1_table(Range k_range, Range g_range,
                                     const AnalysisConfig& config = {}, unsigned jobs = 1);

}  // namespace plrs
