#include "doctest.h"

#include <numeric>

#include "cfsurd/analyzer.hpp"
#include "cfsurd/cf.hpp"

using namespace cfsurd;

namespace {

const ClaimResult& claim(const StructReport& r, const std::string& id) {
  for (const auto& c : r.claims) {
    if (c.id == id) return c;
  }
  FAIL("missing claim " << id);
  return r.claims.front();
}

bool brute_two_squares(long d) {
  for (long x = 0; x * x <= d; ++x) {
    for (long y = 0; y <= x; ++y) {
      if (x * x + y * y == d && std::gcd(x, y) == 1) return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("sum_two_coprime_squares examples") {
  CHECK(sum_two_coprime_squares(13));
  CHECK_FALSE(sum_two_coprime_squares(12));
  CHECK(sum_two_coprime_squares(2));
  CHECK(sum_two_coprime_squares(1));
  CHECK_FALSE(sum_two_coprime_squares(9));
  CHECK(sum_two_coprime_squares(Int("1000000000001")));
  CHECK_FALSE(sum_two_coprime_squares(Int("4000000000004")));
  CHECK_THROWS_AS(sum_two_coprime_squares(0), DomainError);
}

TEST_CASE("sum_two_coprime_squares agrees with brute force") {
  for (long d = 1; d <= 3000; ++d) REQUIRE(sum_two_coprime_squares(d) == brute_two_squares(d));
}

TEST_CASE("check_claims on a small range") {
  auto r = check_claims(2, 100);
  CHECK(r.tested + r.skipped == 99);
  CHECK(r.skipped == 9);
  for (const char* id : {"palindrome", "terminal_2a0", "quotient_bound", "odd_period_implies_coprime_two_squares"}) {
    CHECK(claim(r, id).counterexamples.empty());
    CHECK(claim(r, id).status() == ClaimStatus::Holds);
  }
  const auto& conv = claim(r, "coprime_two_squares_implies_odd_period");
  CHECK(conv.status() == ClaimStatus::Reported);
  REQUIRE_FALSE(conv.counterexamples.empty());
  CHECK(conv.counterexamples.front().d == 34);
  CHECK(claim(r, "central_equals_a0_implies_b_2_mod_4").counterexamples.empty());
  CHECK(r.unclassified.empty());
  CHECK(r.claims.size() == claim_ids().size());
  for (std::size_t i = 0; i < r.claims.size(); ++i) CHECK(r.claims[i].id == claim_ids()[i]);
}

TEST_CASE("central term of sqrt 22 equals a0 and b is 2 mod 4") {
  CHECK(to_string(expand_sqrt(22)) == "[4; 1,2,4,2,1,8]");
  auto c = central_class(22);
  CHECK(c.relation == CentralRelation::EqualsA0);
  CHECK((22 - 16) % 4 == 2);
}

TEST_CASE("classical claims hold up to 100000 and reports are deterministic") {
  auto one = check_claims(2, 100000, 1);
  auto many = check_claims(2, 100000, 8);
  for (std::size_t i = 0; i < one.claims.size(); ++i) {
    const auto& a = one.claims[i];
    const auto& b = many.claims[i];
    CHECK(a.tested == b.tested);
    REQUIRE(a.counterexamples.size() == b.counterexamples.size());
    for (std::size_t j = 0; j < a.counterexamples.size(); ++j) CHECK(a.counterexamples[j].d == b.counterexamples[j].d);
    if (a.kind == ClaimKind::Theorem) CHECK_MESSAGE(a.counterexamples.empty(), a.id);
  }
  CHECK(one.histogram == many.histogram);
}

TEST_CASE("period_stats") {
  auto h = period_stats(2, 3);
  CHECK(h == Histogram{{1, 1}, {2, 1}});
  CHECK(period_stats(5, 4).empty());
  h = period_stats(2, 20);
  CHECK(h.at(1) == 4);  // 2, 5, 10, 17
  std::size_t total = 0;
  for (const auto& [len, n] : h) total += n;
  CHECK(total == 19 - 3);
  CHECK_THROWS_AS(check_claims(5, 4), DomainError);
  CHECK_THROWS_AS(check_claims(0, 4), DomainError);
}
