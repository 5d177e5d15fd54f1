#pragma once

// Bit-vector subset-sum reachability over distinct terms.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "plrs/bigint.hpp"

namespace plrs {

inline constexpr std::size_t kDefaultOracleBits = std::size_t{1} << 28;

/// Set of targets in [1, cap] expressible as a sum of distinct listed terms.
class Reachability {
 public:
  explicit Reachability(std::size_t cap);

  std::size_t cap() const noexcept { return cap_; }
  bool reachable(std::size_t m) const;
  /// Smallest m in [1, cap] that is not reachable.
  std::optional<std::size_t> first_unreachable() const;
  std::size_t count() const;

  /// Adds one more term (each term is used at most once). Returns false if
  /// the term exceeds cap and was ignored.
  bool add_term(std::size_t t);

 private:
  std::size_t cap_;
  std::vector<std::uint64_t> words_;  // bit m set <=> m reachable; bit 0 = empty sum
};

/// Throws CapError if cap + 1 exceeds max_bits.
Reachability subset_sum_reachable(std::span<const BigInt> terms, std::size_t cap,
                                  std::size_t max_bits = kDefaultOracleBits);

/// Positions (0-based, strictly increasing) of distinct terms summing to
/// target, or empty when none exists. Throws CapError above max_target.
std::optional<std::vector<std::size_t>> subset_sum_trace(std::span<const BigInt> terms,
                                                         std::size_t target,
                                                         std::size_t max_target);

}  // namespace plrs
