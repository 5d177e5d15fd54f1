#include "plrs/subset_sum.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "plrs/error.hpp"

namespace plrs {

namespace {

std::size_t words_for(std::size_t cap) { return cap / 64 + 1; }

// dst |= src << t over bits [0, nbits), processing words high-to-low so the
// update can run in place (dst == src).
void or_shifted(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src,
                std::size_t t) {
  const std::size_t ws = t / 64;
  const unsigned bs = static_cast<unsigned>(t % 64);
  const std::size_t n = dst.size();
  for (std::size_t i = n; i-- > ws;) {
    std::uint64_t v = src[i - ws] << bs;
    if (bs != 0 && i - ws >= 1) v |= src[i - ws - 1] >> (64 - bs);
    dst[i] |= v;
  }
}

void mask_tail(std::vector<std::uint64_t>& words, std::size_t cap) {
  const unsigned used = static_cast<unsigned>((cap + 1) % 64);
  if (used != 0) words.back() &= (std::uint64_t{1} << used) - 1;
}

}  // namespace

Reachability::Reachability(std::size_t cap) : cap_(cap), words_(words_for(cap), 0) {
  words_[0] = 1;
}

bool Reachability::reachable(std::size_t m) const {
  if (m > cap_) return false;
  return (words_[m / 64] >> (m % 64)) & 1U;
}

std::optional<std::size_t> Reachability::first_unreachable() const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t missing = ~words_[i];
    if (missing == 0) continue;
    const std::size_t m = i * 64 + static_cast<std::size_t>(std::countr_zero(missing));
    if (m > cap_) return std::nullopt;
    return m;
  }
  return std::nullopt;
}

std::size_t Reachability::count() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total - 1;  // the empty sum
}

bool Reachability::add_term(std::size_t t) {
  if (t == 0 || t > cap_) return false;
  or_shifted(words_, words_, t);
  mask_tail(words_, cap_);
  return true;
}

Reachability subset_sum_reachable(std::span<const BigInt> terms, std::size_t cap,
                                  std::size_t max_bits) {
  if (cap == 0) throw OutOfRange("oracle cap must be positive");
  if (cap >= max_bits) {
    throw CapError("oracle cap " + std::to_string(cap) + " exceeds the bitmap budget of " +
                   std::to_string(max_bits) + " bits");
  }
  Reachability r(cap);
  for (const auto& t : terms) {
    if (t <= 0 || t > cap) continue;
    r.add_term(t.convert_to<std::size_t>());
  }
  return r;
}

std::optional<std::vector<std::size_t>> subset_sum_trace(std::span<const BigInt> terms,
                                                         std::size_t target,
                                                         std::size_t max_target) {
  if (target > max_target) {
    throw CapError("target " + std::to_string(target) + " exceeds the back-trace cap of " +
                   std::to_string(max_target));
  }
  if (target == 0) return std::vector<std::size_t>{};
  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  // via[s] = position of the term that first made s reachable; s - term was
  // reachable using earlier terms only, so following via[] terminates.
  std::vector<std::uint32_t> via(target + 1, kUnset);
  std::vector<std::uint64_t> reach(words_for(target), 0);
  std::vector<std::uint64_t> next;
  reach[0] = 1;
  for (std::size_t j = 0; j < terms.size(); ++j) {
    if (terms[j] <= 0 || terms[j] > target) continue;
    const auto t = terms[j].convert_to<std::size_t>();
    next = reach;
    or_shifted(next, reach, t);
    mask_tail(next, target);
    for (std::size_t w = 0; w < next.size(); ++w) {
      std::uint64_t fresh = next[w] & ~reach[w];
      while (fresh) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(fresh));
        via[w * 64 + bit] = static_cast<std::uint32_t>(j);
        fresh &= fresh - 1;
      }
    }
    reach.swap(next);
    if (via[target] != kUnset) break;
  }
  if (via[target] == kUnset) return std::nullopt;
  std::vector<std::size_t> picked;
  std::size_t s = target;
  while (s != 0) {
    const std::size_t j = via[s];
    picked.push_back(j);
    s -= terms[j].convert_to<std::size_t>();
  }
  std::reverse(picked.begin(), picked.end());
  return picked;
}

}  // namespace plrs
