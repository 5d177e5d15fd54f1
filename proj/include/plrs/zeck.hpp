#pragma once

// Legal (generalized Zeckendorf) decompositions and distinct-terms sums.
//
// A digit string a_1 ... a_m is stored most significant first; a_i
// multiplies H_{m+1-i}.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "plrs/bigint.hpp"
#include "plrs/seqcore.hpp"

namespace plrs {

struct DigitString {
  std::vector<std::uint64_t> digits;

  std::size_t size() const noexcept { return digits.size(); }
  bool empty() const noexcept { return digits.empty(); }
  friend bool operator==(const DigitString&, const DigitString&) = default;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 200;
inline constexpr std::uint64_t kDefaultTraceCap = 1'000'000;

/// Block-structure legality, checked directly against the recursive
/// definition (prefix of c, one smaller digit, zeros, legal remainder).
bool is_legal(const CoefficientVector& cv, const DigitString& s);

BigInt value_of(const CoefficientVector& cv, const DigitString& s);

/// Tracks position inside the current block while reading digits left to
/// right. State j means the last j digits matched c_1..c_j; state 0 means
/// between blocks (after a closed block or inside a run of zeros).
class LegalityAutomaton {
 public:
  explicit LegalityAutomaton(CoefficientVector cv) : cv_(std::move(cv)) {}

  std::size_t states() const noexcept { return cv_.length(); }
  /// Next state after reading d, or empty if d is not allowed. Leading
  /// zeros are the caller's concern.
  std::optional<std::size_t> next(std::size_t state, std::uint64_t d) const;
  /// Every reachable state is accepting.
  bool accepts(const DigitString& s) const;

 private:
  CoefficientVector cv_;
};

/// The unique legal decomposition of n (empty for n = 0). Throws Error for
/// the degenerate generator [1], which has none for n > 0.
DigitString legal_decompose(const CoefficientVector& cv, const BigInt& n);

/// Brute-force: every digit string of value n with digits <= max c_i,
/// filtered by is_legal. Throws CapError for n > cap.
std::vector<DigitString> enumerate_legal(const CoefficientVector& cv, const BigInt& n,
                                         std::uint64_t cap = kDefaultEnumerationCap);

struct DistinctDecomposition {
  /// Strictly increasing 1-based term indices.
  std::vector<std::size_t> indices;
};

/// Distinct terms summing to n, if any. Throws CapError for n > cap.
std::optional<DistinctDecomposition> distinct_decompose(const CoefficientVector& cv,
                                                        std::uint64_t n,
                                                        std::uint64_t cap = kDefaultTraceCap);

/// "1·5 + 2·2"; "8 + 2" when every digit is 0 or 1; "empty" for 0.
std::string format_legal(const CoefficientVector& cv, const DigitString& s);
/// Largest term first: "8 + 2".
std::string format_distinct(const CoefficientVector& cv, const DistinctDecomposition& d);

}  // namespace plrs
