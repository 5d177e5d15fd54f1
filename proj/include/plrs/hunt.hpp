#pragma once

// Exhaustive evidence gathering for the first-failure (2L-1) conjecture and
// the add-front-ones conjecture.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "plrs/error.hpp"
#include "plrs/seqcore.hpp"
#include "plrs/verdicts.hpp"

namespace plrs {

/// All vectors of length L with 0 <= c_i <= 2^i + beyond_cap, c_1 >= 1,
/// c_L >= 1, in lexicographic order, addressable by rank for sharding.
class VectorSpace {
 public:
  explicit VectorSpace(std::size_t L, std::uint64_t beyond_cap = 0);

  std::size_t length() const noexcept { return L_; }
  std::uint64_t size() const noexcept { return size_; }
  CoefficientVector at(std::uint64_t rank) const;

 private:
  std::size_t L_;
  std::vector<std::uint64_t> lo_, radix_;
  std::uint64_t size_ = 1;
};

std::vector<CoefficientVector> enumerate_vectors(std::size_t L);

struct CensusEntry {
  CoefficientVector vector;
  std::optional<std::size_t> first_failure;
  VerdictKind verdict;
  std::string proof_tag;  // rule name, or empty
};

struct CensusReport {
  std::size_t L = 0;
  std::size_t deep_horizon = 0;
  /// max(2L-1, 2): the conjectured latest first failure.
  std::size_t conjectured_bound = 0;
  bool cap_boundary_included = false;
  std::size_t max_first_failure = 0;
  std::vector<CoefficientVector> extremal_vectors;
  std::uint64_t vectors_scanned = 0;
  std::uint64_t failing_vectors = 0;
  /// Survivors of the deep scan that no proof rule certified.
  std::uint64_t equality_window_vectors = 0;
  std::vector<CoefficientVector> conjectural_survivors;
  /// Vectors first failing after conjectured_bound.
  std::vector<CoefficientVector> violations;
  std::vector<CensusEntry> entries;

  bool conjecture_holds() const noexcept { return violations.empty(); }
};

class ConjectureViolation : public Error {
 public:
  explicit ConjectureViolation(CensusReport report);
  const CensusReport& report() const noexcept { return report_; }

 private:
  CensusReport report_;
};

struct CensusOptions {
  /// 0 selects 4L.
  std::size_t deep_horizon = 0;
  unsigned jobs = 1;
  std::uint64_t shard_size = 512;
  /// Also scan c_i = 2^i + 1, the first values past the cap, which must fail
  /// by term i + 1. Covers L = 1, where no capped vector fails.
  bool include_cap_boundary = true;
  bool keep_entries = true;
  /// Completed shard ids, one per line; per-shard results are kept next to
  /// it in "<checkpoint>.partials" so a resumed run reports everything.
  std::optional<std::filesystem::path> checkpoint;
  AnalysisConfig config;
};

/// Scans every enumerated vector to the deep horizon. Throws
/// ConjectureViolation (carrying the full report) if any first failure
/// exceeds max(2L-1, 2). Results do not depend on jobs or shard order.
CensusReport first_failure_census(std::size_t L, const CensusOptions& options = {});

/// First Brown failure of [1 x k, 0, 4] (expected 2k + 3).
std::size_t check_fail_at_2l_minus_1(std::size_t k);

struct FrontOnesViolation {
  std::uint64_t g;
  std::uint64_t n;
};

struct FrontOnesReport {
  std::uint64_t k = 0;
  std::uint64_t g_max = 0;
  /// max_n_by_g[g - 1] = empirical max N for [1 x g, 0 x k, N], g = 1..g_max.
  std::vector<std::uint64_t> max_n_by_g;
  std::vector<FrontOnesViolation> violations;
};

/// For g < g_max and every N up to the empirical maximum for g, checks that
/// completeness of [1 x g, 0 x k, N] carries over to g + 1.
FrontOnesReport add_front_ones_scan(std::uint64_t k, std::uint64_t g_max,
                                    const AnalysisConfig& config = {});

}  // namespace plrs
