/*
Copyright 2026 The hwp Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "hwp/composer.hpp"
#include "hwp/constructions.hpp"
#include "hwp/verify.hpp"

using namespace hwp;

namespace {

SearchBudget budget() {
  SearchBudget b;
  b.seconds = 120;
  return b;
}

int count_len(const Decomposition& d, int len) {
  int n = 0;
  for (const auto& f : d.factors) {
    bool all = true;
    for (const auto& c : f.cycles()) all = all && static_cast<int>(c.vertices().size()) == len;
    n += all ? 1 : 0;
  }
  return n;
}

Decomposition k3() {
  Decomposition d;
  d.graph = GraphSpec::complete(3);
  d.m = d.n = 3;
  d.r = 1;
  d.factors.emplace_back(3, 3, std::vector<Cycle>{Cycle({0, 1, 2})});
  return d;
}

}  // namespace

TEST_CASE("weighting a single block gives K_9") {
  Rgdd one;
  one.h = 1;
  one.u = 3;
  one.groups = {{0}, {1}, {2}};
  one.classes = {{{0, 1, 2}}};
  auto d = weight_main(one, 3, {decompose_kx3_odd(3, 2)}, k3());
  auto rep = verify(d);
  CHECK(rep.pass);
  CHECK(rep.edges_covered == 36);
  CHECK(d.v() == 9);
  CHECK(count_len(d, 3) == 2);
  CHECK(count_len(d, 9) == 2);
}

TEST_CASE("weighting over RGDD(3^3) gives K_27") {
  auto g = rgdd3(3, 3, budget());
  REQUIRE(g.found());
  auto fill = get(IngredientKey::kts(9), budget());
  REQUIRE(fill.found());
  std::vector<Decomposition> classes{decompose_kx3_odd(3, 3), decompose_kx3_odd(3, 0), decompose_kx3_odd(3, 2)};
  auto d = weight_main(*g.rgdd, 3, classes, *fill.design);
  CHECK(verify(d).pass);
  CHECK(d.v() == 27);
  CHECK(count_len(d, 9) == 5);
  CHECK(count_len(d, 3) == 8);
  CHECK_THROWS(weight_main(*g.rgdd, 3, {decompose_kx3_odd(3, 0)}, *fill.design));
}

TEST_CASE("planner examples") {
  auto e = plan(3, 3, 12, 1);
  CHECK(e.status == PlanStatus::Exception);
  CHECK(e.bullet == "s=1 and x=3");
  auto e2 = plan(2, 2, 5, 0);
  CHECK(e2.status == PlanStatus::Exception);
  CHECK(e2.bullet == "s=0, x=2, y=2");

  auto p = plan(3, 3, 10, 3);
  REQUIRE(p.status == PlanStatus::Constructible);
  CHECK(p.plan->strategy == Strategy::Main);
  CHECK(p.plan->w == 3);
  CHECK(p.plan->s_p == std::vector<int>{3, 0, 0});
  CHECK(p.plan->s_beta == 0);

  auto open = plan(2, 3, 5, 3);
  CHECK(open.status == PlanStatus::Open);
  CHECK(open.bullet == "s in {3,...,3(y-1)/2}, x=2, y>=3 odd");

  CHECK_THROWS_AS(plan(3, 3, 10, 4), ParameterError);
  CHECK_THROWS_AS(plan(1, 3, 4, 0), ParameterError);
}

TEST_CASE("listed cases") {
  CHECK(matching_bullets(3, 4, 1) ==
        std::vector<std::string>{"s=1, y>=3, x in {3,31,37,41,43,47,51,53,59,61,67,69,71,79,83}",
                                 "s=1, x odd, y even", "s=1, x>=3 odd, y even", "x not in {2,4}, y in {2,4,6}"});
  CHECK(matching_bullets(5, 5, 4).empty());
  CHECK(matching_bullets(12, 3, 4) == std::vector<std::string>{"(s,x) in {(2,12),(4,12)}"});
}

TEST_CASE("split counts add up") {
  for (auto [x, y] : std::vector<std::pair<int, int>>{{3, 3}, {5, 3}, {3, 5}, {2, 3}, {2, 6}, {4, 3}, {8, 3}, {6, 6}, {3, 8}}) {
    const int total = factor_count_for(3 * x * y);
    for (int s = 0; s <= total; ++s) {
      auto p = plan(x, y, total - s, s);
      if (p.status != PlanStatus::Constructible) continue;
      const Plan& q = *p.plan;
      if (q.strategy != Strategy::Main && q.strategy != Strategy::Main2) continue;
      const int classes = q.h * (q.u - 1) / 2;
      CHECK(static_cast<int>(q.s_p.size()) == (q.strategy == Strategy::Main2 ? classes - 1 : classes));
      CHECK(std::accumulate(q.s_p.begin(), q.s_p.end(), 0) + q.s_beta + q.s_gamma == s);
      CHECK(std::is_sorted(q.s_p.rbegin(), q.s_p.rend()));
      for (int sp : q.s_p) CHECK((sp >= 0 && sp <= q.w));
    }
  }
}

TEST_CASE("tables") {
  auto t33 = table(3, 3);
  REQUIRE(t33.size() == 14);
  for (const auto& row : t33) {
    CHECK(row.r + row.s == 13);
    CHECK(row.status == (row.s == 1 ? PlanStatus::Exception : PlanStatus::Constructible));
  }
  for (const auto& row : table(4, 3)) CHECK(row.status == PlanStatus::Constructible);
  auto t23 = table(2, 3);
  CHECK(t23[3].status == PlanStatus::Open);
  CHECK(t23[4].status == PlanStatus::Constructible);
  const auto text = format_table(3, 3, t33);
  CHECK(text.rfind("# (3,9)-HWP(27; r, s) with r+s=13\n", 0) == 0);
  CHECK(text.find("s=1 r=12 exception s=1 and x=3\n") != std::string::npos);
}

TEST_CASE("solve returns verified decompositions") {
  for (int s : {0, 2, 3, 13}) {
    auto res = solve(3, 3, 13 - s, s, budget());
    REQUIRE(res.status == SolveStatus::Ok);
    CHECK(verify(*res.decomposition).pass);
    CHECK(res.decomposition->r == 13 - s);
    CHECK(res.decomposition->s == s);
    CHECK(count_len(*res.decomposition, 9) == s);
  }
  auto ex = solve(3, 3, 12, 1, budget());
  CHECK(ex.status == SolveStatus::Exception);
  CHECK_FALSE(ex.decomposition.has_value());
}

TEST_CASE("doubling for x=2, y=2") {
  for (auto [r, s] : std::vector<std::pair<int, int>>{{1, 4}, {0, 5}}) {
    auto res = solve(2, 2, r, s, budget());
    REQUIRE(res.status == SolveStatus::Ok);
    REQUIRE(res.plan.has_value());
    CHECK(res.plan->strategy == Strategy::Double);
    CHECK(verify(*res.decomposition).pass);
    CHECK(res.decomposition->one_factor.has_value());
    CHECK(count_len(*res.decomposition, 6) == s);
  }
}

TEST_CASE("parts plus cross for x=2, y=4") {
  auto p = plan(2, 4, 1, 10);
  REQUIRE(p.status == PlanStatus::Constructible);
  CHECK(p.plan->strategy == Strategy::SmallY);
  CHECK(p.plan->s_part == 1);
  CHECK(p.plan->cross_long == 1);
  CHECK(p.plan->bullet == "x=2, y in {4,8}");
  auto res = solve(2, 4, 1, 10, budget());
  REQUIRE(res.status == SolveStatus::Ok);
  CHECK(verify(*res.decomposition).pass);
  CHECK(count_len(*res.decomposition, 6) == 10);
}

TEST_CASE("class decompositions") {
  for (int sp : {0, 2, 3, 4}) {
    auto d = class_decomposition(ClassMaker::EvenDifference, 4, 2, sp, budget());
    REQUIRE(d.has_value());
    CHECK(verify(*d).pass);
  }
  auto pair = class_decomposition(ClassMaker::Pair, 2, 2, 1, budget());
  REQUIRE(pair.has_value());
  CHECK(verify(*pair).pass);
  CHECK(pair->factors.size() == 2);
  CHECK_THROWS_AS(class_decomposition(ClassMaker::OddDifference, 3, 3, 1, budget()), ParameterError);
  CHECK_THROWS_AS(class_decomposition(ClassMaker::AllOrNothing, 4, 4, 2, budget()), ParameterError);
}
