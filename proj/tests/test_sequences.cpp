#include "doctest.h"
#include "oracles.hpp"

#include "cfsurd/convergents.hpp"
#include "cfsurd/sequences.hpp"

using namespace cfsurd;

namespace {

// Standard convergent c_j of [a0; period, period, ...] via the library-free oracle.
Rat cf_prefix(const Int& a0, const std::vector<Int>& period, long j) {
  std::vector<Int> w{a0};
  while (static_cast<long>(w.size()) < j + 1) w.insert(w.end(), period.begin(), period.end());
  w.resize(static_cast<std::size_t>(j + 1));
  return oracle::eval_word(w);
}

IntPair pair_of(const Rat& r) { return {r.num(), r.den()}; }

}  // namespace

TEST_CASE("linrec_nth examples") {
  CHECK(linrec_nth(fibonacci_recurrence(), 10) == 55);
  CHECK(linrec_nth({3, 1, 0, 1}, 6) == 360);
  CHECK(linrec_nth({5, -2, 7, 9}, 0) == 7);
  CHECK_THROWS_AS(linrec_nth(fibonacci_recurrence(), -1), DomainError);
}

TEST_CASE("binet_nth examples") {
  CHECK(binet_nth(fibonacci_recurrence(), 7) == 13);
  CHECK(binet_nth({3, 1, 0, 1}, 3) == 10);
  CHECK(binet_nth({5, 3, 4, 11}, 1) == 11);
  CHECK_THROWS_AS(binet_nth({2, -1, 0, 1}, 5), DomainError);
}

TEST_CASE("closed form equals recurrence") {
  std::vector<LinRecSpec> specs{fibonacci_recurrence(), {2, 1, 1, 1}, {4, -1, 1, 3}, {8, 1, 1, 7}, {3, 2, -1, 5}};
  for (long m = 0; m <= 8; ++m) specs.push_back(odd_quotient_recurrence(m));
  for (const auto& s : specs) {
    for (long n = 0; n <= 100; ++n) REQUIRE(binet_nth(s, n) == linrec_nth(s, n));
  }
}

TEST_CASE("odd quotient recurrence parity") {
  for (long m = 0; m <= 8; ++m) {
    auto s = odd_quotient_recurrence(m);
    for (long r = 0; r <= 30; ++r) {
      CHECK(linrec_nth(s, 3 * r) % 2 == 0);
      CHECK(linrec_nth(s, 3 * r + 1) % 2 != 0);
      CHECK(linrec_nth(s, 3 * r + 2) % 2 != 0);
    }
  }
}

TEST_CASE("sqrt 2 pairs") {
  CHECK(pell_pair(0) == IntPair{1, 0});
  CHECK(pell_pair(4) == IntPair{17, 12});
  CHECK(pell_pair(7) == IntPair{239, 169});
  const std::vector<Int> two{2};
  for (long k = 1; k <= 200; ++k) {
    IntPair c = pell_pair(k);
    IntPair n = pell_pair(k + 1);
    REQUIRE(c.p + c.q == n.q);
    REQUIRE(c.p + 2 * c.q == n.p);
    if (k <= 60) REQUIRE(c == pair_of(cf_prefix(1, two, k - 1)));
  }
}

TEST_CASE("sqrt 3 pairs") {
  CHECK(sqrt3_pair(0) == IntPair{2, 1});
  CHECK(sqrt3_pair(3) == IntPair{19, 11});
  CHECK(sqrt3_pair(7) == IntPair{265, 153});
  CHECK(sqrt3_convergent(0) == IntPair{1, 1});
  const std::vector<Int> per{1, 2};
  for (long j = 0; j <= 60; ++j) REQUIRE(sqrt3_convergent(j) == pair_of(cf_prefix(1, per, j)));
  auto p = [](long j) { return sqrt3_convergent(j).p; };
  auto q = [](long j) { return sqrt3_convergent(j).q; };
  for (long n = 1; n <= 100; ++n) {
    REQUIRE(p(2 * n - 1) == q(2 * n) - q(2 * n - 1));
    REQUIRE(p(2 * n + 1) == q(2 * n) + q(2 * n + 1));
    REQUIRE(3 * q(2 * n) + 2 * q(2 * n - 1) == q(2 * n + 2));
    REQUIRE(3 * q(2 * n - 1) + q(2 * n - 2) == q(2 * n + 1));
  }
}

TEST_CASE("sqrt 3 closed forms in the quadratic ring") {
  const QuadRingElem one_plus{1, 1, 3, 1};
  const QuadRingElem one_minus = one_plus.conj();
  for (unsigned long n = 1; n <= 40; ++n) {
    QuadRingElem s = pow(one_plus, 2 * n) + pow(one_minus, 2 * n);
    QuadRingElem diff = pow(one_plus, 2 * n) - pow(one_minus, 2 * n);
    Int two_pow = pow(Int(2), n + 1);
    CHECK(s.t == 0);
    CHECK(s.s == two_pow * sqrt3_convergent(static_cast<long>(2 * n - 1)).p);
    // The difference is 2^(n+1) q_(2n-1) sqrt 3.
    CHECK(diff.s == 0);
    CHECK(diff.t == two_pow * sqrt3_convergent(static_cast<long>(2 * n - 1)).q);
  }
}

TEST_CASE("A and B sequences") {
  CHECK(ab_pair(1) == IntPair{3, 1});
  CHECK(ab_pair(3) == IntPair{41, 15});
  CHECK(ab_pair(5) == IntPair{571, 209});
  for (long k = 1; k <= 100; ++k) {
    REQUIRE(ab_pair(k).p == sqrt3_convergent(2 * k).q);
    REQUIRE(ab_pair(k).q == sqrt3_convergent(2 * k - 1).q);
  }
}

TEST_CASE("triple 1,1,3 sequences") {
  CHECK(triple113_pair(-1) == IntPair{-1, 4});
  CHECK(triple113_pair(0) == IntPair{1, 0});
  CHECK(triple113_pair(1) == IntPair{7, 4});
  CHECK(triple113_pair(2) == IntPair{57, 32});
  const Mat2 base(7, 2, 4, 1);
  for (long k = 1; k <= 100; ++k) {
    IntPair c = triple113_pair(k);
    IntPair prev = triple113_pair(k - 1);
    REQUIRE(c.q % 2 == 0);
    REQUIRE(mat_pow(base, k) == Mat2(c.p, c.q / 2, c.q, prev.p + prev.q / 2));
  }
  CHECK(triple113_pair(0).q % 2 == 0);
}

TEST_CASE("interleaved even-quotient convergents") {
  std::vector<std::string> got;
  for (long k = 0; k < 5; ++k) {
    auto c = interleaved_even_pair(1, k);
    got.push_back(c.p.get_str() + "/" + c.q.get_str());
  }
  CHECK(got == std::vector<std::string>{"2/1", "3/1", "14/5", "17/6", "82/29"});
  CHECK(interleaved_even_pair(2, 2) == IntPair{76, 17});
  CHECK(interleaved_even_pair(3, 1) == IntPair{19, 3});
  for (long m = 1; m <= 6; ++m) {
    const std::vector<Int> per{m, 4 * m};
    for (long k = 0; k <= 30; ++k) REQUIRE(interleaved_even_pair(m, k) == pair_of(cf_prefix(2 * m, per, k)));
  }
}

TEST_CASE("pair m,2m denominators") {
  for (long m = 1; m <= 6; ++m) {
    const std::vector<Int> per{m, 2 * m};
    for (long j = 0; j <= 30; ++j) REQUIRE(pair_m2m_denominator(m, j) == cf_prefix(m, per, j).den());
  }
}

TEST_CASE("odd multiplier and the five-step pair recurrences") {
  CHECK(odd_multiplier(0) == 4);
  CHECK(odd_multiplier(1) == 36);
  CHECK(odd_multiplier(2) == 140);
  for (long m = 1; m <= 5; ++m) {
    for (long k = 1; k <= 10; ++k) {
      Rat shortv = cf_prefix(m, {1, 1, m, 4 * m + 2, m}, 5 * k - 3);
      Rat fullv = cf_prefix(m, {1, 1, m, 4 * m + 2, m}, 5 * k - 1);
      REQUIRE(odd_family_short(m, k) == pair_of(shortv));
      REQUIRE(odd_family_full(m, k) == pair_of(fullv));
    }
    const Int mult = odd_multiplier(m);
    for (long k = 2; k <= 10; ++k) {
      REQUIRE(odd_family_short(m, k + 1).p == mult * odd_family_short(m, k).p + odd_family_short(m, k - 1).p);
      REQUIRE(odd_family_short(m, k + 1).q == mult * odd_family_short(m, k).q + odd_family_short(m, k - 1).q);
      REQUIRE(odd_family_full(m, k + 1).p == mult * odd_family_full(m, k).p + odd_family_full(m, k - 1).p);
      REQUIRE(odd_family_full(m, k + 1).q == mult * odd_family_full(m, k).q + odd_family_full(m, k - 1).q);
    }
  }
  for (long k = 1; k <= 20; ++k) {
    CHECK(odd_family_short(0, k) == IntPair{fibonacci(3 * k - 1), 2 * fibonacci(3 * k - 2)});
    CHECK(odd_family_full(0, k) == IntPair{fibonacci(3 * k + 1), 2 * fibonacci(3 * k)});
  }
}
