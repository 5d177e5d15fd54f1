#pragma once

// Coefficient vectors and the sequences they generate.
//
// A vector [c_1, ..., c_L] with c_1, c_L >= 1 generates
//   H_1 = 1,
//   H_{n+1} = c_1 H_n + ... + c_n H_1 + 1        for 1 <= n < L,
//   H_{n+1} = c_1 H_n + ... + c_L H_{n+1-L}      for n >= L.
// All indices in this library are 1-based.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "plrs/bigint.hpp"

namespace plrs {

class CoefficientVector {
 public:
  /// Throws ValidationError unless raw is nonempty, nonnegative, and has
  /// positive first and last entries.
  static CoefficientVector validate(std::span<const std::int64_t> raw);

  /// Parses "1,0,4" (whitespace tolerated) and validates.
  static CoefficientVector parse(std::string_view text);

  std::size_t length() const noexcept { return c_.size(); }
  /// 1-based access, c(1) .. c(L).
  std::uint64_t c(std::size_t i) const { return c_.at(i - 1); }
  std::span<const std::uint64_t> values() const noexcept { return c_; }

  /// "[1,0,4]"
  std::string str() const;
  /// "1,0,4", the form accepted by parse().
  std::string csv() const;

  bool is_degenerate() const noexcept { return c_.size() == 1 && c_[0] == 1; }

  friend bool operator==(const CoefficientVector&, const CoefficientVector&) = default;
  friend auto operator<=>(const CoefficientVector&, const CoefficientVector&) = default;

 private:
  explicit CoefficientVector(std::vector<std::uint64_t> c) : c_(std::move(c)) {}
  std::vector<std::uint64_t> c_;
};

inline CoefficientVector validate_coefficients(std::span<const std::int64_t> raw) {
  return CoefficientVector::validate(raw);
}

/// Lazily extended, memoized sequence of terms. Single writer: share
/// materialized prefixes, not the Sequence itself, across threads.
class Sequence {
 public:
  explicit Sequence(CoefficientVector cv);

  const CoefficientVector& generator() const noexcept { return cv_; }

  BigInt term(std::size_t n);
  /// [H_1, ..., H_n]
  std::vector<BigInt> prefix(std::size_t n);
  /// H_1 + ... + H_n (0 for n = 0).
  BigInt partial_sum(std::size_t n);
  /// B_{H,n} = 1 + H_1 + ... + H_{n-1} - H_n. May be negative.
  BigInt brown_gap(std::size_t n);
  /// [B_{H,1}, ..., B_{H,n}]
  std::vector<BigInt> brown_gaps(std::size_t n);

  std::size_t materialized() const noexcept { return terms_.size(); }

 private:
  void extend_to(std::size_t n);

  CoefficientVector cv_;
  std::vector<BigInt> terms_;
  std::vector<BigInt> sums_;
};

BigInt term(const CoefficientVector& cv, std::size_t n);
std::vector<BigInt> terms_prefix(const CoefficientVector& cv, std::size_t n);
BigInt brown_gap(const CoefficientVector& cv, std::size_t n);

}  // namespace plrs
