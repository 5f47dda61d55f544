#include <catch2/catch_amalgamated.hpp>

#include <cstdint>

#include "twoadic/gf2poly.hpp"

using namespace twoadic;
using namespace twoadic::sequences;

namespace {

// Independent oracle: multiplicative order of x in GF(2)[x]/(f), found by
// repeated multiplication by x with explicit reduction. Returns 0 if no
// power up to 2^n - 1 equals 1.
std::uint64_t order_of_x(std::uint64_t f, int n) {
  const std::uint64_t limit = (std::uint64_t{1} << n) - 1;
  std::uint64_t y = 1;
  for (std::uint64_t k = 1; k <= limit; ++k) {
    y <<= 1;
    if ((y >> n) & 1u)
      y ^= f;
    if (y == 1)
      return k;
  }
  return 0;
}

bool primitive_by_oracle(std::uint64_t f, int n) {
  return order_of_x(f, n) == (std::uint64_t{1} << n) - 1;
}

} // namespace

TEST_CASE("is_primitive on pinned cases") {
  REQUIRE(is_primitive(Gf2Polynomial{0b11}));             // x + 1
  REQUIRE(is_primitive(Gf2Polynomial{0b1011}));           // x^3 + x + 1
  REQUIRE_FALSE(is_primitive(Gf2Polynomial{0b11111}));    // x^4 + x^3 + x^2 + x + 1

  // the oracle agrees and pins the orders behind those verdicts
  REQUIRE(order_of_x(0b1011, 3) == 7);
  REQUIRE(order_of_x(0b11111, 4) == 5);
}

TEST_CASE("is_primitive rejects unsupported inputs") {
  try {
    is_primitive(Gf2Polynomial{0b1}); // degree 0
    FAIL("expected unsupported degree");
  } catch (const error& e) {
    REQUIRE(e.code() == errc::unsupported_degree);
  }
  try {
    is_primitive(Gf2Polynomial{(std::uint64_t{1} << 33) | 1});
    FAIL("expected unsupported degree");
  } catch (const error& e) {
    REQUIRE(e.code() == errc::unsupported_degree);
  }
  try {
    is_primitive(Gf2Polynomial{0b1010}); // zero constant term
    FAIL("expected invalid polynomial");
  } catch (const error& e) {
    REQUIRE(e.code() == errc::invalid_polynomial);
  }
  REQUIRE_THROWS_AS(Gf2Polynomial{0}, error);
}

TEST_CASE("is_primitive matches the brute-force order oracle exhaustively") {
  for (int n = 1; n <= 8; ++n) {
    const std::uint64_t top = std::uint64_t{1} << n;
    for (std::uint64_t low = 1; low < top; low += 2) {
      const std::uint64_t mask = top | low;
      INFO("mask = " << mask);
      REQUIRE(is_primitive(Gf2Polynomial{mask}) == primitive_by_oracle(mask, n));
    }
  }
}

TEST_CASE("find_primitive_poly returns the smallest-bitmask primitive polynomial") {
  REQUIRE(find_primitive_poly(1).mask == 0b11);
  REQUIRE(find_primitive_poly(3).mask == 0b1011);
  REQUIRE(find_primitive_poly(4).mask == 0b10011);

  SECTION("matches an oracle-driven enumeration") {
    for (int n = 1; n <= 10; ++n) {
      const std::uint64_t top = std::uint64_t{1} << n;
      std::uint64_t expected = 0;
      for (std::uint64_t low = 1; low < top && !expected; low += 2)
        if (primitive_by_oracle(top | low, n))
          expected = top | low;
      REQUIRE(find_primitive_poly(n).mask == expected);
    }
  }

  SECTION("output always passes is_primitive") {
    for (int n = 1; n <= 16; ++n)
      REQUIRE(is_primitive(find_primitive_poly(n)));
  }

  SECTION("range errors") {
    REQUIRE_THROWS_AS(find_primitive_poly(0), error);
    REQUIRE_THROWS_AS(find_primitive_poly(33), error);
  }
}

TEST_CASE("polynomial pretty printing") {
  REQUIRE(Gf2Polynomial{0b1011}.to_string() == "x^3 + x + 1");
  REQUIRE(Gf2Polynomial{0b11}.to_string() == "x + 1");
}
