#include "doctest.h"
#include "oracles.hpp"

#include <random>

#include "cfsurd/arith.hpp"

using namespace cfsurd;

TEST_CASE("isqrt small and large values") {
  CHECK(isqrt(13) == 3);
  CHECK(isqrt(49) == 7);
  CHECK(isqrt(Int("1000000000000000000")) == Int(1000000000));
  CHECK(isqrt(0) == 0);
  CHECK_THROWS_AS(isqrt(-1), DomainError);
}

TEST_CASE("isqrt agrees with a linear scan up to one million") {
  long r = 0;
  for (long n = 0; n <= 1000000; ++n) {
    while ((r + 1) * (r + 1) <= n) ++r;
    if (isqrt(n) != r) FAIL("isqrt(" << n << ")");
  }
}

TEST_CASE("isqrt brackets random huge values") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    Int n = 1;
    for (int w = 0; w < 1 + i % 8; ++w) n = n * Int(std::to_string(rng())) + Int(std::to_string(rng()));
    Int r = isqrt(n);
    CHECK(r * r <= n);
    CHECK((r + 1) * (r + 1) > n);
  }
}

TEST_CASE("is_square") {
  CHECK(is_square(16));
  CHECK_FALSE(is_square(13));
  CHECK_FALSE(is_square(-4));
  CHECK(is_square(0));
  Int big = pow(Int("123456789123456789"), 2);
  CHECK(is_square(big));
  CHECK_FALSE(is_square(big + 1));
}

TEST_CASE("floor division rounds toward negative infinity") {
  CHECK(floor_div(7, 2) == 3);
  CHECK(floor_div(-7, 2) == -4);
  CHECK(floor_div(7, -2) == -4);
  CHECK(floor_div(-7, -2) == 3);
  CHECK_THROWS_AS(floor_div(1, 0), DomainError);
}

TEST_CASE("parse_int and 64-bit helpers") {
  CHECK(parse_int("-42") == -42);
  CHECK(parse_int("123456789012345678901234567890") == Int("123456789012345678901234567890"));
  CHECK_THROWS_AS(parse_int("12x"), DomainError);
  CHECK_THROWS_AS(parse_int(""), DomainError);
  CHECK(fits_i64(Int("9223372036854775807")));
  CHECK_FALSE(fits_i64(Int("9223372036854775808")));
  CHECK(to_i64(Int(-5)) == -5);
}

TEST_CASE("rationals stay normalized") {
  Rat r(Int(6), Int(-4));
  CHECK(r.num() == -3);
  CHECK(r.den() == 2);
  CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
  CHECK(Rat(1, 2) * Rat(2, 1) == Rat(1));
  CHECK((Rat(1, 3) < Rat(1, 2)));
  CHECK(to_string(Rat(9, 2)) == "9/2");
  CHECK(to_string(Rat(4)) == "4");
  CHECK_THROWS_AS(Rat(1, 0), DomainError);
  CHECK_THROWS_AS(Rat(1) / Rat(0), DomainError);
}

TEST_CASE("linear congruence examples") {
  auto s = solve_linear_congruence(4, 1, 5);
  CHECK(s.solvable);
  CHECK(s.residue == 1);
  CHECK(s.modulus == 5);
  CHECK_FALSE(solve_linear_congruence(2, 1, 2).solvable);
  s = solve_linear_congruence(1, 0, 7);
  CHECK(s.solvable);
  CHECK(s.residue == 0);
  CHECK(s.modulus == 7);
  CHECK_THROWS_AS(solve_linear_congruence(1, 0, 0), DomainError);
}

TEST_CASE("linear congruence agrees with brute force") {
  for (long mod = 1; mod <= 40; ++mod) {
    for (long c1 = -12; c1 <= 12; ++c1) {
      for (long c0 = -12; c0 <= 12; ++c0) {
        auto s = solve_linear_congruence(c1, c0, mod);
        long want = oracle::brute_congruence(c1, c0, mod);
        REQUIRE(s.solvable == (want >= 0));
        if (!s.solvable) continue;
        CHECK(s.residue == want);
        CHECK(s.modulus == mod / std::gcd(std::abs(c1), mod));
      }
    }
  }
}
