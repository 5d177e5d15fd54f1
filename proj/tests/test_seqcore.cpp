#include <doctest.h>

#include <vector>

#include "oracles.hpp"
#include "plrs/error.hpp"
#include "plrs/seqcore.hpp"

using namespace plrs;

namespace {
CoefficientVector cv(std::vector<std::int64_t> raw) { return CoefficientVector::validate(raw); }

ValidationCode code_of(std::vector<std::int64_t> raw) {
  try {
    CoefficientVector::validate(raw);
  } catch (const ValidationError& e) {
    return e.code();
  }
  FAIL("expected a validation error");
  return ValidationCode::EmptyVector;
}
}  // namespace

TEST_CASE("validate_coefficients accepts PLRS generators") {
  const auto v = cv({1, 3});
  CHECK(v.length() == 2);
  CHECK(v.c(1) == 1);
  CHECK(v.c(2) == 3);
  CHECK(cv({1}).is_degenerate());
  CHECK_FALSE(cv({2}).is_degenerate());
}

TEST_CASE("validate_coefficients rejects malformed vectors") {
  CHECK(code_of({}) == ValidationCode::EmptyVector);
  CHECK(code_of({0, 1}) == ValidationCode::LeadingZero);
  CHECK(code_of({1, 0}) == ValidationCode::TrailingZero);
  CHECK(code_of({1, -2, 1}) == ValidationCode::NegativeCoefficient);
  try {
    CoefficientVector::validate(std::vector<std::int64_t>{1, 0, -1, 2});
  } catch (const ValidationError& e) {
    CHECK(e.index() == 3);
  }
}

TEST_CASE("parse reads comma separated vectors") {
  CHECK(CoefficientVector::parse("1,0,4") == cv({1, 0, 4}));
  CHECK(CoefficientVector::parse(" [1, 1, 2] ") == cv({1, 1, 2}));
  CHECK(CoefficientVector::parse("1,0,4").str() == "[1,0,4]");
  CHECK_THROWS_AS(CoefficientVector::parse("1,x"), Error);
  CHECK_THROWS_AS(CoefficientVector::parse("1,,2"), Error);
  CHECK_THROWS_AS(CoefficientVector::parse("0,1"), ValidationError);
  CHECK_THROWS_AS(CoefficientVector::parse(""), ValidationError);
}

TEST_CASE("term") {
  CHECK(term(cv({1, 1}), 4) == 5);
  CHECK(term(cv({1, 3}), 4) == 11);
  CHECK(term(cv({1}), 7) == 1);
  CHECK(term(cv({1, 0, 4}), 5) == 15);
  CHECK_THROWS_AS(term(cv({1}), 0), OutOfRange);
}

TEST_CASE("terms_prefix") {
  using V = std::vector<BigInt>;
  CHECK(terms_prefix(cv({1, 1}), 5) == V{1, 2, 3, 5, 8});
  CHECK(terms_prefix(cv({2}), 5) == V{1, 2, 4, 8, 16});
  CHECK(terms_prefix(cv({1, 1, 2}), 6) == V{1, 2, 4, 8, 16, 32});
}

TEST_CASE("brown_gap") {
  CHECK(brown_gap(cv({3, 1, 4}), 1) == 0);
  CHECK(brown_gap(cv({2}), 6) == 0);
  CHECK(brown_gap(cv({1, 0, 4}), 5) == -1);
}

TEST_CASE("Sequence memo extends lazily and stays consistent") {
  Sequence s(cv({1, 0, 4}));
  CHECK(s.materialized() == 1);
  CHECK(s.term(9) == 223);
  CHECK(s.materialized() == 9);
  CHECK(s.term(4) == 7);
  CHECK(s.materialized() == 9);
  CHECK(s.partial_sum(0) == 0);
  CHECK(s.partial_sum(3) == 6);
  CHECK(s.prefix(3) == std::vector<BigInt>{1, 2, 3});
}

TEST_CASE("terms match the naive recurrence over an enumeration") {
  for (std::size_t L = 1; L <= 4; ++L) {
    for (const auto& raw : oracle::small_vectors(L, 3)) {
      const auto expected = oracle::terms(raw, 20);
      Sequence s(cv(raw));
      REQUIRE(s.prefix(20) == expected);
      // Initial-condition identity: H_{n+1} - 1 = sum_{i<=n} c_i H_{n+1-i} for n < L.
      for (std::size_t n = 1; n < L; ++n) {
        BigInt rhs = 0;
        for (std::size_t i = 1; i <= n; ++i) rhs += BigInt(raw[i - 1]) * expected[n - i];
        CHECK(expected[n] - 1 == rhs);
      }
    }
  }
}

TEST_CASE("[1 x (L-1), 2] generates powers of two") {
  for (std::size_t L = 1; L <= 6; ++L) {
    std::vector<std::int64_t> raw(L, 1);
    raw.back() = 2;
    Sequence s(cv(raw));
    for (std::size_t n = 1; n <= 40; ++n) CHECK(s.term(n) == BigInt(1) << (n - 1));
  }
}

TEST_CASE("gap recurrence and monotonicity") {
  for (std::size_t L = 1; L <= 3; ++L) {
    for (const auto& raw : oracle::small_vectors(L, 4)) {
      Sequence s(cv(raw));
      const auto gaps = s.brown_gaps(25);
      CHECK(gaps == oracle::gaps(raw, 25));
      CHECK(gaps[0] == 0);
      for (std::size_t n = 1; n < 25; ++n) {
        CHECK(gaps[n] - gaps[n - 1] == 2 * s.term(n) - s.term(n + 1));
        if (!cv(raw).is_degenerate()) CHECK(s.term(n + 1) > s.term(n));
      }
    }
  }
}
