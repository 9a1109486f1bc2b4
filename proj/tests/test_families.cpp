#include "doctest.h"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include <unistd.h>

#include "cfsurd/cf.hpp"
#include "cfsurd/convergents.hpp"
#include "cfsurd/families.hpp"
#include "cfsurd/sequences.hpp"

using namespace cfsurd;

namespace {

const std::vector<FamilyDescriptor>& reg() {
  static const auto r = load_registry(CFSURD_TEST_REGISTRY);
  return r;
}

const FamilyDescriptor& family(const std::string& id) {
  const FamilyDescriptor* f = find_family(reg(), id);
  REQUIRE_MESSAGE(f != nullptr, id);
  return *f;
}

std::string temp_registry(const std::string& body) {
  static int counter = 0;
  std::string path = (std::filesystem::temp_directory_path() /
                      ("cfsurd_registry_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".jsonl"))
                         .string();
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_CASE("registry contents") {
  CHECK(reg().size() > 100);
  CHECK(family("euler-l1").pattern.eval({{"n", 4}}) == std::vector<Int>{8});
  const auto& perron = family("perron-l3");
  Bindings mn{{"m", 2}, {"n", 3}};
  CHECK(perron.a_expr.eval(mn) == (4 * 4 + 1) * 3 + 2);
  CHECK(perron.b_expr.eval(mn) == 4 * 2 * 3 + 1);
  const auto& kr = family("kraitchik-l10-center-a0minus1");
  for (long n = 0; n < 5; ++n) {
    CHECK(kr.pattern.eval({{"n", n}}) ==
          std::vector<Int>{1, 1, 3, 1, 9 * n + 5, 1, 3, 1, 1, 18 * n + 12});
  }
}

TEST_CASE("instantiate examples") {
  auto inst = instantiate(family("euler-l1"), {{"n", 7}});
  CHECK(inst.d == 50);
  CHECK(to_string(inst.expected) == "[7; 14]");
  inst = instantiate(family("l5-odd"), {{"n", 1}});
  CHECK(inst.d == 13);
  CHECK(to_string(inst.expected) == "[3; 1,1,1,1,6]");
  inst = instantiate(family("repeated-2s-k"), {{"k", 1}, {"n", 1}});
  CHECK(inst.d == 19);
  CHECK(to_string(inst.expected) == "[4; 2,1,3,1,2,8]");
  CHECK(inst.expected == expand_sqrt(19));
}

TEST_CASE("instantiate rejects bad assignments") {
  const auto& f = family("euler-l1");
  CHECK_THROWS_AS(instantiate(f, {{"n", 0}}), DomainError);
  CHECK_THROWS_AS(instantiate(f, {}), DomainError);
  CHECK_THROWS_AS(instantiate(f, {{"n", 1}, {"q", 1}}), DomainError);

  FamilyDescriptor g = family("l8-center-a0-general");
  g.params[0].min = 1;  // widen the range so m = 1 reaches the validity check
  CHECK_THROWS_AS(instantiate(g, {{"m", 1}, {"n", 3}}), InvalidAssignment);
  CHECK_NOTHROW(instantiate(g, {{"m", 2}, {"n", 3}}));
}

TEST_CASE("verify_family examples") {
  VerifyBudget b;
  b.n_max = 1000;
  auto r = verify_family(family("euler-l1"), b);
  CHECK(r.tested == 1000);
  CHECK(r.failures.empty());
  CHECK(r.status == FamilyStatus::Verified);

  b.n_max = 200;
  r = verify_family(family("l6-center2"), b);
  CHECK(r.failures.empty());

  r = verify_family(family("threes-printed-17n"), VerifyBudget{});
  CHECK(r.status == FamilyStatus::Erratum);
  CHECK(r.as_declared());
  REQUIRE_FALSE(r.failures.empty());
  CHECK(r.failures[0].reason == "integer part differs");

  r = verify_family(family("repeated-2s-17n"), VerifyBudget{});
  CHECK(r.status == FamilyStatus::Verified);
}

TEST_CASE("every erratum record names a corrected record that verifies") {
  VerifyBudget b;
  b.n_count = 20;
  b.m_max = 3;
  b.k_max = 3;
  for (const auto& f : reg()) {
    if (f.declared != FamilyStatus::Erratum) continue;
    CAPTURE(f.id);
    auto r = verify_family(f, b);
    CHECK(r.status == FamilyStatus::Erratum);
    const auto& fixed = family(f.corrected_by);
    CHECK(fixed.corrects == f.id);
    CHECK(verify_family(fixed, b).status == FamilyStatus::Verified);
  }
}

TEST_CASE("verified instances satisfy the reconstruction formula") {
  VerifyBudget b;
  b.n_count = 8;
  b.m_max = 3;
  b.k_max = 3;
  for (const auto& f : reg()) {
    if (f.declared != FamilyStatus::Verified) continue;
    for (const auto& asg : assignments(f, b)) {
      Instance inst;
      try {
        inst = instantiate(f, asg);
      } catch (const InvalidAssignment&) {
        continue;
      }
      auto period = primitive_root(inst.expected.period);
      std::vector<Int> inner(period.begin(), period.end() - 1);
      if (rippon_b(inner, inst.expected.a0) != Rat(inst.d - inst.expected.a0 * inst.expected.a0)) {
        FAIL(f.id << " fails the reconstruction formula");
      }
    }
  }
}

TEST_CASE("k-indexed coefficients come from the sequence generators") {
  for (long k = 1; k <= 6; ++k) {
    for (long n = 1; n <= 3; ++n) {
      auto inst = instantiate(family("repeated-2s-k"), {{"k", k}, {"n", n}});
      CHECK(inst.expected.a0 == pell_pair(k + 1).p * n + 1);
    }
  }
}

TEST_CASE("period two radicands all belong to the two period-two families") {
  for (long d = 2; d <= 100000; ++d) {
    if (is_square(d)) continue;
    PeriodicCF cf = expand_sqrt(d);
    if (cf.length() != 2) continue;
    const Int a = cf.a0;
    const Int b = d - a * a;
    const Int first = cf.period[0];
    // sqrt((mn)^2 + n) = [mn; 2m, 2mn] or sqrt((mn)^2 + 2n) = [mn; m, 2mn].
    bool one = first % 2 == 0 && a % (first / 2) == 0 && b == a / (first / 2);
    bool two = a % first == 0 && b == 2 * (a / first);
    if (!one && !two) FAIL("d = " << d << " is outside both families");
  }
}

TEST_CASE("assignments respect parameter order, budgets and caps") {
  VerifyBudget b;
  b.n_max = 2;
  b.m_max = 2;
  auto pts = assignments(family("l2-mn-n"), b);
  REQUIRE(pts.size() == 4);
  CHECK(pts[0] == Bindings{{"m", 1}, {"n", 1}});
  CHECK(pts[1] == Bindings{{"m", 1}, {"n", 2}});
  CHECK(pts[3] == Bindings{{"m", 2}, {"n", 2}});
  b.k_max = 100;
  auto ks = assignments(family("repeated-2s-k"), b);
  CHECK(ks.back().at("k") == 6);
  CHECK(assignments(family("l5-fives-tail"), b).size() == 1);
}

TEST_CASE("primitive_root") {
  CHECK(primitive_root({1, 2, 1, 2}) == std::vector<Int>{1, 2});
  CHECK(primitive_root({2, 2, 2}) == std::vector<Int>{2});
  CHECK(primitive_root({1, 2, 3}) == std::vector<Int>{1, 2, 3});
}

TEST_CASE("parallel verification is deterministic") {
  VerifyBudget one;
  one.k_max = 3;
  VerifyBudget many = one;
  many.jobs = 8;
  for (const char* id : {"threes-printed-17n", "pair-m-2m-twice-printed", "l7-1-1-1"}) {
    auto a = verify_family(family(id), one);
    auto b = verify_family(family(id), many);
    CHECK(a.tested == b.tested);
    REQUIRE(a.failures.size() == b.failures.size());
    for (std::size_t i = 0; i < a.failures.size(); ++i) CHECK(a.failures[i].params == b.failures[i].params);
  }
}

TEST_CASE("registry loading errors carry the line number") {
  auto bad = temp_registry("# comment\n\n{\"id\": \"x\", \"params\": [], \"a\": \"1\", \"b\": \"1\", \"pattern\": \"2\"}\n{oops\n");
  try {
    load_registry(bad);
    FAIL("expected an error");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find(":4:") != std::string::npos);
  }
  std::remove(bad.c_str());

  auto dup = temp_registry(
      "{\"id\": \"x\", \"params\": [], \"a\": \"1\", \"b\": \"1\", \"pattern\": \"2\"}\n"
      "{\"id\": \"x\", \"params\": [], \"a\": \"1\", \"b\": \"1\", \"pattern\": \"2\"}\n");
  CHECK_THROWS_WITH_AS(load_registry(dup), doctest::Contains("duplicate"), DomainError);
  std::remove(dup.c_str());
  CHECK_THROWS_AS(load_registry("/nonexistent/registry.jsonl"), DomainError);
}
