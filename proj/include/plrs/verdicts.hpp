#pragma once

// Completeness classification with proof provenance.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "plrs/bigint.hpp"
#include "plrs/seqcore.hpp"
#include "plrs/subset_sum.hpp"

namespace plrs {

enum class ProofRule {
  AllPositive,      // all c_i > 0: complete iff [1,...,1] or [1,...,1,2]
  GeometricL1,      // [2] generates 2^{n-1}
  FamilySingleOne,  // [1, 0 x k, N]
  FamilyDoubleOne,  // [1, 1, 0 x k, N]
  FamilyGOnes,      // [1 x g, 0 x k, N], g >= k
  DecreaseLast,     // a complete vector with a larger last coefficient exists
  MergeLast,        // [c_1, ..., c_{L-1} + c_L] is complete
  WeakWindow,       // B > 0 on [L, 2L-1], B >= 0 before
};

std::string_view rule_name(ProofRule rule);

struct ProofTag {
  ProofRule rule;
  /// Rule-specific parameters:
  ///   AllPositive {L}; GeometricL1 {}; FamilySingleOne/DoubleOne {k, N_max};
  ///   FamilyGOnes {g, k, N_max}; DecreaseLast {larger N, shifted position};
  ///   MergeLast {merged coefficient}; WeakWindow {1, 2L-1}.
  std::vector<std::uint64_t> params;
  /// The verdict this one was derived from (MergeLast only).
  std::shared_ptr<const ProofTag> basis;
};

struct Complete {
  ProofTag proof;
};

struct Incomplete {
  std::size_t first_failure;
  /// 1 + H_1 + ... + H_{first_failure-1}: the least positive integer with
  /// no distinct-terms representation.
  BigInt witness;
};

struct ConjecturallyComplete {
  std::size_t horizon;
};

enum class VerdictKind { Complete, Incomplete, ConjecturallyComplete };

std::string_view kind_name(VerdictKind kind);

struct CompletenessVerdict {
  CoefficientVector vector;
  std::variant<Complete, Incomplete, ConjecturallyComplete> outcome;
  /// Effective scan horizon.
  std::size_t horizon;
  /// B_{H,1..max(horizon, first_failure)}
  std::vector<BigInt> gaps;

  VerdictKind kind() const noexcept { return static_cast<VerdictKind>(outcome.index()); }
  bool is_complete() const noexcept { return kind() == VerdictKind::Complete; }
  bool is_incomplete() const noexcept { return kind() == VerdictKind::Incomplete; }
  /// Complete or ConjecturallyComplete.
  bool not_incomplete() const noexcept { return !is_incomplete(); }
  const ProofTag* proof() const noexcept;
};

struct AnalysisConfig {
  /// 0 selects the default max(2L-1, 2).
  std::size_t horizon = 0;
  /// Largest target for subset-sum cross-checks.
  std::size_t oracle_cap = 100000;
  std::size_t oracle_bits = kDefaultOracleBits;
  /// Disable to classify from gap scans, the merge rule and the weak window
  /// only (independent evidence for the family bounds).
  bool use_family_rules = true;
};

std::size_t default_horizon(const CoefficientVector& cv);
/// Throws OutOfRange when config.horizon is set below the default.
std::size_t effective_horizon(const CoefficientVector& cv, const AnalysisConfig& config);

struct ScanResult {
  std::optional<std::size_t> first_failure;
  std::vector<BigInt> gaps;  // B_{H,1..horizon}
};

ScanResult brown_scan(const CoefficientVector& cv, std::size_t horizon);
ScanResult brown_scan(Sequence& seq, std::size_t horizon);

/// Finitary sufficient criterion: B >= 0 for n < L and B > 0 for
/// L <= n <= 2L-1. For L = 1, true iff c_1 <= 2.
bool weak_window_check(const CoefficientVector& cv);

CompletenessVerdict classify(const CoefficientVector& cv, const AnalysisConfig& config = {});

struct OracleCheck {
  bool complete;
  std::optional<std::size_t> smallest_missing;
};

/// Subset-sum check of every target in [1, cap] against the terms <= cap.
OracleCheck is_complete_up_to(const CoefficientVector& cv, std::size_t cap,
                              std::size_t max_bits = kDefaultOracleBits);

/// Terms of cv that can take part in a distinct-terms sum <= cap.
std::vector<BigInt> terms_up_to(const CoefficientVector& cv, std::size_t cap);

}  // namespace plrs
