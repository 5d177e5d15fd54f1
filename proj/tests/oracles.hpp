#pragma once

// Test-only reference computations. Deliberately naive and independent of
// the library's Sequence, subset-sum and decomposition code.

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "plrs/bigint.hpp"

namespace oracle {

using plrs::BigInt;

/// H_1..H_n straight from the definition.
inline std::vector<BigInt> terms(const std::vector<std::int64_t>& c, std::size_t n) {
  const std::size_t L = c.size();
  std::vector<BigInt> h{1};
  while (h.size() < n) {
    const std::size_t m = h.size();  // next is H_{m+1}
    BigInt next = 0;
    for (std::size_t i = 1; i <= L && i <= m; ++i) next += BigInt(c[i - 1]) * h[m - i];
    if (m < L) next += 1;
    h.push_back(next);
  }
  h.resize(n);
  return h;
}

inline std::vector<BigInt> gaps(const std::vector<std::int64_t>& c, std::size_t n) {
  const auto h = terms(c, n);
  std::vector<BigInt> out;
  BigInt sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(1 + sum - h[i]);
    sum += h[i];
  }
  return out;
}

inline std::optional<std::size_t> first_failure(const std::vector<std::int64_t>& c, std::size_t n) {
  const auto g = gaps(c, n);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] < 0) return i + 1;
  }
  return std::nullopt;
}

/// Every positive sum of a nonempty subset, by walking all 2^n masks.
inline std::set<std::uint64_t> powerset_sums(const std::vector<std::uint64_t>& xs) {
  std::set<std::uint64_t> out;
  const std::size_t n = xs.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1U) s += xs[i];
    }
    out.insert(s);
  }
  return out;
}

inline std::vector<std::uint64_t> small_terms(const std::vector<std::int64_t>& c, std::size_t n) {
  std::vector<std::uint64_t> out;
  for (const auto& t : terms(c, n)) out.push_back(t.convert_to<std::uint64_t>());
  return out;
}

/// Largest N in [1, limit] with no gap failure through `depth` terms.
inline std::uint64_t max_last_by_scan(std::vector<std::int64_t> prefix, std::uint64_t limit,
                                      std::size_t depth) {
  prefix.push_back(0);
  std::uint64_t best = 0;
  for (std::uint64_t n = 1; n <= limit; ++n) {
    prefix.back() = static_cast<std::int64_t>(n);
    if (!first_failure(prefix, depth)) best = n;
  }
  return best;
}

/// All vectors of length L with entries in [0, max_c], c_1, c_L >= 1.
inline std::vector<std::vector<std::int64_t>> small_vectors(std::size_t L, std::int64_t max_c) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> v(L, 0);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == L) {
      if (v.front() >= 1 && v.back() >= 1) out.push_back(v);
      return;
    }
    for (std::int64_t x = 0; x <= max_c; ++x) {
      v[i] = x;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace oracle

namespace oracle {

/// Block-by-block reading of the legality rule, written as plain recursion.
inline bool legal(const std::vector<std::int64_t>& c, const std::vector<std::uint64_t>& a,
                  std::size_t from = 0) {
  const std::size_t L = c.size();
  const std::size_t m = a.size() - from;
  if (m == 0) return true;
  if (a[from] == 0) return false;
  // Condition 1: a short prefix of c itself.
  if (m < L) {
    bool same = true;
    for (std::size_t i = 0; i < m; ++i) same = same && a[from + i] == static_cast<std::uint64_t>(c[i]);
    if (same) return true;
  }
  // Condition 2: c_1..c_{s-1} matched, a_s < c_s, zeros, then a legal tail.
  for (std::size_t s = 1; s <= std::min(L, m); ++s) {
    bool prefix = true;
    for (std::size_t i = 0; i + 1 < s; ++i) prefix = prefix && a[from + i] == static_cast<std::uint64_t>(c[i]);
    if (!prefix) break;
    if (a[from + s - 1] >= static_cast<std::uint64_t>(c[s - 1])) continue;
    for (std::size_t l = 0; s + l <= m; ++l) {
      if (l > 0 && a[from + s + l - 1] != 0) break;
      if (legal(c, a, from + s + l)) return true;
    }
  }
  return false;
}

}  // namespace oracle
