#include <doctest.h>

#include "oracles.hpp"
#include "plrs/error.hpp"
#include "plrs/subset_sum.hpp"
#include "plrs/verdicts.hpp"
#include "plrs/zeck.hpp"

using namespace plrs;

namespace {
CoefficientVector cv(std::vector<std::int64_t> raw) { return CoefficientVector::validate(raw); }
DigitString ds(std::vector<std::uint64_t> d) { return DigitString{std::move(d)}; }

const std::vector<std::vector<std::int64_t>> kUniquenessSet = {{1, 1}, {1, 3}, {2, 1},
                                                              {1, 0, 4}, {3}, {1, 1, 2}};

// All digit strings of length <= max_len over [0, max_digit].
template <class F>
void for_each_string(std::size_t max_len, std::uint64_t max_digit, F&& f) {
  std::vector<std::uint64_t> d;
  auto rec = [&](auto&& self) -> void {
    f(d);
    if (d.size() == max_len) return;
    for (std::uint64_t x = 0; x <= max_digit; ++x) {
      d.push_back(x);
      self(self);
      d.pop_back();
    }
  };
  rec(rec);
}
}  // namespace

TEST_CASE("is_legal examples") {
  CHECK(is_legal(cv({1, 3}), ds({1, 2, 0})));
  CHECK_FALSE(is_legal(cv({1, 1}), ds({1, 1})));
  CHECK_FALSE(is_legal(cv({1, 1}), ds({0, 1})));
  CHECK_FALSE(is_legal(cv({2, 3}), ds({0, 1})));
  CHECK(is_legal(cv({1, 1}), ds({})));
  CHECK(is_legal(cv({1, 0, 4}), ds({1, 0})));
}

TEST_CASE("value_of examples") {
  CHECK(value_of(cv({1, 3}), ds({1, 2, 0})) == 9);
  CHECK(value_of(cv({1, 3}), ds({})) == 0);
  CHECK(value_of(cv({1, 1}), ds({1, 0, 0, 1, 0})) == 10);
}

TEST_CASE("legal_decompose examples") {
  CHECK(legal_decompose(cv({1, 3}), 9) == ds({1, 2, 0}));
  CHECK(legal_decompose(cv({1, 1}), 10) == ds({1, 0, 0, 1, 0}));
  CHECK(legal_decompose(cv({1, 0, 4}), 0).empty());
  CHECK_THROWS_AS(legal_decompose(cv({1}), 3), Error);
}

TEST_CASE("enumerate_legal examples") {
  CHECK(enumerate_legal(cv({1, 1}), 10) == std::vector<DigitString>{ds({1, 0, 0, 1, 0})});
  CHECK(enumerate_legal(cv({1, 3}), 9) == std::vector<DigitString>{ds({1, 2, 0})});
  CHECK(enumerate_legal(cv({2, 1}), 0) == std::vector<DigitString>{ds({})});
  CHECK_THROWS_AS(enumerate_legal(cv({1, 1}), 201), CapError);
  CHECK_NOTHROW(enumerate_legal(cv({1, 1}), 300, 300));
}

TEST_CASE("distinct_decompose examples") {
  CHECK_FALSE(distinct_decompose(cv({1, 3}), 9));
  const auto fib = distinct_decompose(cv({1, 1}), 10);
  REQUIRE(fib);
  BigInt total = 0;
  for (auto i : fib->indices) total += term(cv({1, 1}), i);
  CHECK(total == 10);
  const auto bin = distinct_decompose(cv({2}), 7);
  REQUIRE(bin);
  CHECK(bin->indices == std::vector<std::size_t>{1, 2, 3});
  CHECK(format_distinct(cv({2}), *bin) == "4 + 2 + 1");
  CHECK_THROWS_AS(distinct_decompose(cv({2}), 0), OutOfRange);
  CHECK_THROWS_AS(distinct_decompose(cv({2}), 11, 10), CapError);
}

TEST_CASE("format_legal") {
  CHECK(format_legal(cv({1, 3}), ds({1, 2, 0})) == "1·5 + 2·2");
  CHECK(format_legal(cv({1, 1}), ds({1, 0, 0, 1, 0})) == "8 + 2");
  CHECK(format_legal(cv({1, 1}), ds({})) == "empty");
}

TEST_CASE("is_legal agrees with the recursive reading of the rule") {
  for (std::size_t L = 1; L <= 3; ++L) {
    for (const auto& raw : oracle::small_vectors(L, 3)) {
      const auto v = cv(raw);
      const LegalityAutomaton automaton(v);
      for_each_string(6, 3, [&](const std::vector<std::uint64_t>& d) {
        const bool expected = oracle::legal(raw, d);
        REQUIRE(is_legal(v, ds(d)) == expected);
        REQUIRE(automaton.accepts(ds(d)) == expected);
      });
    }
  }
}

TEST_CASE("uniqueness and round trip on the reference set") {
  for (const auto& raw : kUniquenessSet) {
    const auto v = cv(raw);
    for (std::uint64_t n = 0; n <= 200; ++n) {
      const auto all = enumerate_legal(v, n);
      REQUIRE(all.size() == 1);
      REQUIRE(all.front() == legal_decompose(v, n));
    }
    for (std::uint64_t n = 0; n <= 5000; n += 7) {
      const auto s = legal_decompose(v, n);
      REQUIRE(value_of(v, s) == n);
      REQUIRE(oracle::legal(raw, s.digits));
    }
  }
}

TEST_CASE("legal digits stay below the largest coefficient") {
  for (const auto& raw : kUniquenessSet) {
    const auto v = cv(raw);
    const auto top = static_cast<std::uint64_t>(*std::max_element(raw.begin(), raw.end()));
    for (std::uint64_t n = 1; n <= 200; ++n) {
      const auto s = legal_decompose(v, n);
      CHECK(s.digits.front() > 0);
      CHECK(s.digits.front() <= static_cast<std::uint64_t>(raw.front()));
      for (auto d : s.digits) CHECK(d <= top);
    }
  }
}

TEST_CASE("Fibonacci decompositions are classical Zeckendorf") {
  const auto v = cv({1, 1});
  for (std::uint64_t n = 1; n <= 3000; ++n) {
    const auto s = legal_decompose(v, n);
    for (std::size_t i = 0; i < s.size(); ++i) {
      REQUIRE(s.digits[i] <= 1);
      if (i > 0) REQUIRE_FALSE((s.digits[i] == 1 && s.digits[i - 1] == 1));
    }
  }
}

TEST_CASE("distinct decompositions link to completeness") {
  for (const auto& raw : std::vector<std::vector<std::int64_t>>{{1, 1}, {1, 3}, {1, 0, 4}, {1, 2}, {3}}) {
    const auto v = cv(raw);
    const std::uint64_t M = 300;
    bool all = true;
    for (std::uint64_t m = 1; m <= M; ++m) {
      const auto d = distinct_decompose(v, m);
      if (d) {
        BigInt total = 0;
        for (std::size_t i = 0; i < d->indices.size(); ++i) {
          if (i) REQUIRE(d->indices[i - 1] < d->indices[i]);
          total += term(v, d->indices[i]);
        }
        REQUIRE(total == m);
      }
      all = all && d.has_value();
    }
    CHECK(all == is_complete_up_to(v, M).complete);
  }
}
