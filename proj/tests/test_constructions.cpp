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

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "hwp/constructions.hpp"
#include "hwp/verify.hpp"

using namespace hwp;

namespace {

int md(int a, int b) { return ((a % b) + b) % b; }

std::multiset<Edge> edge_multiset(const TwoFactor& f) {
  auto e = f.edges();
  return {e.begin(), e.end()};
}

// Connected components of a vertex set under an edge list (union-find).
int components(int v, const std::vector<Edge>& edges) {
  std::vector<int> parent(v);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  int count = v;
  for (auto [a, b] : edges) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent[a] = b;
      --count;
    }
  }
  return count;
}

// Edges of the difference subgraph straight from the defining formula.
std::vector<Edge> difference_edges(int x, int i, int j) {
  std::vector<Edge> e;
  for (int k = 0; k < x; ++k) {
    e.push_back(make_edge(k, x + md(k + 2 * i, x)));
    e.push_back(make_edge(x + k, 2 * x + md(k - i, x)));
    e.push_back(make_edge(2 * x + k, md(k - j, x)));
  }
  return e;
}

std::set<std::vector<Vertex>> cycle_set(const TwoFactor& f) {
  std::set<std::vector<Vertex>> out;
  for (const auto& c : f.cycles()) out.insert(c.vertices());
  return out;
}

int long_factors(const Decomposition& d, int len) {
  int n = 0;
  for (const auto& f : d.factors)
    if (f.cycle_length() == len && f.cycles().size() == static_cast<std::size_t>(d.v() / len)) ++n;
  return n;
}

}  // namespace

TEST_CASE("triangle factor examples") {
  auto t = triangle_factor(3, 1);
  std::set<std::vector<Vertex>> want{Cycle({0, 3 + 2, 6 + 1}).vertices(), Cycle({1, 3 + 0, 6 + 2}).vertices(),
                                     Cycle({2, 3 + 1, 6 + 0}).vertices()};
  CHECK(cycle_set(t) == want);
  auto h = triangle_factor(5, 0);
  for (const auto& c : h.cycles()) {
    const auto& v = c.vertices();
    CHECK(v[0] % 5 == v[1] % 5);
    CHECK(v[1] % 5 == v[2] % 5);
  }
  auto t52 = triangle_factor(5, 2);
  std::set<std::vector<Vertex>> want52;
  for (int k = 0; k < 5; ++k) want52.insert(Cycle({k, 5 + md(k + 4, 5), 10 + md(k + 2, 5)}).vertices());
  CHECK(cycle_set(t52) == want52);
  CHECK_THROWS_AS(triangle_factor(4, 0), ParameterError);
  CHECK_THROWS_AS(triangle_factor(5, 5), ParameterError);
}

TEST_CASE("difference factor examples") {
  auto h = difference_factor(3, 0, 1);
  REQUIRE(h.cycles().size() == 1);
  // (0,0)(1,0)(2,0)(0,2)(1,2)(2,2)(0,1)(1,1)(2,1)
  CHECK(h.cycles()[0] == Cycle({0, 3, 6, 2, 5, 8, 1, 4, 7}));
  CHECK(cycle_set(difference_factor(5, 2, 2)) == cycle_set(triangle_factor(5, 2)));
  auto g = difference_factor(9, 0, 3);
  CHECK(g.cycles().size() == 3);
  CHECK(g.cycle_length() == 9);
}

TEST_CASE("cycle count equals gcd(x, i-j) for every pair") {
  for (int x : {3, 5, 7, 9})
    for (int i = 0; i < x; ++i)
      for (int j = 0; j < x; ++j) {
        const int want = std::gcd(x, std::abs(i - j)) == 0 ? x : std::gcd(x, std::abs(i - j));
        const auto f = difference_factor(x, i, j);
        CHECK(components(3 * x, difference_edges(x, i, j)) == want);
        CHECK(static_cast<int>(f.cycles().size()) == want);
        const auto expect = difference_edges(x, i, j);
        CHECK(edge_multiset(f) == std::multiset<Edge>(expect.begin(), expect.end()));
      }
}

TEST_CASE("phi examples and invariants") {
  auto id = phi_map(5, 0);
  CHECK(id.map == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(id.fixed_count == 5);
  CHECK(phi_map(5, 3).map == std::vector<int>{2, 0, 1, 3, 4});
  CHECK(phi_map(5, 5).map == std::vector<int>{2, 0, 4, 1, 3});
  for (int x : {3, 5, 7, 9, 11, 13})
    for (int s = 0; s <= x; ++s) {
      if (s == 1) continue;
      auto f = phi_map(x, s);
      CHECK_FALSE(check_fixed_point_map(f).has_value());
      std::vector<int> sorted = f.map;
      std::sort(sorted.begin(), sorted.end());
      std::vector<int> ident(x);
      std::iota(ident.begin(), ident.end(), 0);
      CHECK(sorted == ident);
      int fixed = 0;
      for (int i = 0; i < x; ++i) {
        if (f.map[i] == i) {
          ++fixed;
          continue;
        }
        const int d = md(i - f.map[i], x);
        CHECK((d == 1 || d == 2 || d == x - 1 || d == x - 2));
        CHECK(std::gcd(x, d) == 1);
      }
      CHECK(fixed == x - s);
    }
  CHECK_THROWS_AS(phi_map(5, 1), ParameterError);
  CHECK_THROWS_AS(phi_map(5, 6), ParameterError);
}

TEST_CASE("odd-x decompositions for every legal s") {
  for (int x : {3, 5, 7, 9})
    for (int s = 0; s <= x; ++s) {
      if (s == 1) continue;
      auto d = decompose_kx3_odd(x, s);
      CHECK(verify(d).pass);
      CHECK(d.r == x - s);
      CHECK(d.s == s);
      CHECK(long_factors(d, 3 * x) == s);
    }
  auto d = decompose_kx3_odd(3, 2);
  CHECK(verify(d).edges_covered == 27);
  CHECK_THROWS_AS(decompose_kx3_odd(3, 1), ParameterError);
}

TEST_CASE("gamma transcriptions") {
  // (part, row) -> part*4 + row
  std::set<std::vector<Vertex>> g0{Cycle({0, 4, 8}).vertices(), Cycle({1, 7, 10}).vertices(),
                                   Cycle({2, 5, 11}).vertices(), Cycle({3, 6, 9}).vertices()};
  CHECK(cycle_set(gamma(0)) == g0);
  std::set<std::vector<Vertex>> g3{Cycle({3, 7, 11}).vertices(), Cycle({1, 6, 8}).vertices(),
                                   Cycle({2, 4, 9}).vertices(), Cycle({0, 5, 10}).vertices()};
  CHECK(cycle_set(gamma(3)) == g3);
  CHECK_THROWS_AS(gamma(4), ParameterError);
}

TEST_CASE("lambda factors") {
  CHECK(cycle_set(lambda_factor(0, 0)) == cycle_set(gamma(0)));
  auto l = lambda_factor(0, 1);
  CHECK(l.cycle_length() == 6);
  CHECK(l.cycles().size() == 2);
  auto a = edge_multiset(lambda_factor(0, 1));
  auto b = edge_multiset(lambda_factor(1, 0));
  a.insert(b.begin(), b.end());
  auto c = edge_multiset(gamma(0));
  auto d = edge_multiset(gamma(1));
  c.insert(d.begin(), d.end());
  CHECK(a == c);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) CHECK(lambda_factor(i, j).cycle_length() == 6);
}

TEST_CASE("K_(4:3) decompositions") {
  for (int s : {0, 2, 3, 4}) {
    auto d = decompose_k43(s);
    CHECK(verify(d).pass);
    CHECK(d.s == s);
    CHECK(d.r == 4 - s);
  }
  auto two = decompose_k43(2);
  std::multiset<std::set<std::vector<Vertex>>> got, want;
  for (const auto& f : two.factors) got.insert(cycle_set(f));
  for (const auto& f : {lambda_factor(0, 1), lambda_factor(1, 0), gamma(2), gamma(3)}) want.insert(cycle_set(f));
  CHECK(got == want);
  auto four = decompose_k43(4);
  got.clear();
  want.clear();
  for (const auto& f : four.factors) got.insert(cycle_set(f));
  for (const auto& f : {lambda_factor(0, 1), lambda_factor(1, 2), lambda_factor(2, 3), lambda_factor(3, 0)})
    want.insert(cycle_set(f));
  CHECK(got == want);
  CHECK_THROWS_AS(decompose_k43(1), ParameterError);
}

TEST_CASE("weighted triangle factors") {
  for (int a = 0; a < 4; ++a) CHECK(cycle_set(weighted_triangle_factor(1, a, 0)) == cycle_set(gamma(a)));
  auto t = weighted_triangle_factor(3, 0, 0);
  CHECK(t.cycles().size() == 12);
  // Inside the blow-up of gamma(0)'s first triangle (rows 0, 0, 0) the factor is T_3(0).
  std::set<std::vector<Vertex>> inside, want;
  auto local = [](Vertex v) {
    const int part = v / 12, k = v % 3;
    return static_cast<Vertex>(part * 3 + k);
  };
  for (const auto& c : t.cycles()) {
    const auto& v = c.vertices();
    if ((v[0] % 12) / 3 == 0 && (v[1] % 12) / 3 == 0 && (v[2] % 12) / 3 == 0)
      inside.insert(Cycle({local(v[0]), local(v[1]), local(v[2])}).vertices());
  }
  const auto t30 = triangle_factor(3, 0);
  for (const auto& c : t30.cycles()) want.insert(c.vertices());
  CHECK(inside == want);
  Decomposition all;
  all.graph = GraphSpec::equipartite(12, 3);
  all.m = all.n = 3;
  all.r = 12;
  for (int a = 0; a < 4; ++a)
    for (int i = 0; i < 3; ++i) all.factors.push_back(weighted_triangle_factor(3, a, i));
  auto rep = verify(all);
  CHECK(rep.pass);
  CHECK(rep.edges_covered == 432);
}

TEST_CASE("exchange factors") {
  CHECK(cycle_set(weighted_exchange_factor(3, 0, 0, 0, 0)) == cycle_set(weighted_triangle_factor(3, 0, 0)));
  auto h = weighted_exchange_factor(3, 0, 0, 1, 1);
  CHECK(h.cycle_length() == 18);
  CHECK(h.cycles().size() == 2);
  auto six = weighted_exchange_factor(3, 0, 0, 1, 0);
  CHECK(six.cycle_length() == 6);
  CHECK(six.cycles().size() == 6);
  for (int a = 0; a < 4; ++a)
    for (int i = 0; i < 3; ++i)
      for (int b = 0; b < 4; ++b)
        for (int j = 0; j < 3; ++j) {
          auto lhs = edge_multiset(weighted_exchange_factor(3, a, i, b, j));
          auto l2 = edge_multiset(weighted_exchange_factor(3, b, j, a, i));
          lhs.insert(l2.begin(), l2.end());
          auto rhs = edge_multiset(weighted_triangle_factor(3, a, i));
          auto r2 = edge_multiset(weighted_triangle_factor(3, b, j));
          rhs.insert(r2.begin(), r2.end());
          CHECK(lhs == rhs);
        }
}

TEST_CASE("psi maps") {
  auto id = psi_map(3, 0);
  CHECK(id.map.fixed_count == 12);
  for (int p = 0; p < 12; ++p) CHECK(id.map.map[p] == p);
  auto m = psi_piecewise(3, {2, 2, 2, 2});
  for (int d = 0; d < 4; ++d) {
    const int a = d * 3 + 0, b = ((d + 1) % 4) * 3 + 1, c = ((d + 2) % 4) * 3 + 2;
    CHECK(m.map[a] == b);
    CHECK(m.map[b] == a);
    CHECK(m.map[c] == c);
  }
  CHECK_FALSE(check_fixed_point_map(m).has_value());
  auto full = psi_map(3, 12);
  CHECK(full.map.fixed_count == 0);
  CHECK_FALSE(check_fixed_point_map(full.map).has_value());
  for (int s = 0; s <= 12; ++s) {
    if (s == 1) continue;
    auto p = psi_map(3, s);
    CHECK_FALSE(check_fixed_point_map(p.map).has_value());
    CHECK(p.map.fixed_count == 12 - s);
    if (!p.searched)
      for (int q = 0; q < 12; ++q) {
        const int da = md(p.map.map[q] / 3 - q / 3, 4), di = md(p.map.map[q] % 3 - q % 3, 3);
        // Displacements (0,0), (+-1,+-1) or (+-2,+-2) in Z_4 x Z_3.
        const bool ok = (da == 0 && di == 0) || (da == 1 && di == 1) || (da == 3 && di == 2) ||
                        (da == 2 && di == 2) || (da == 2 && di == 1);
        CHECK(ok);
      }
  }
  CHECK_THROWS_AS(psi_map(3, 1), ParameterError);
}

TEST_CASE("K_(4x:3) decompositions") {
  for (int s = 0; s <= 12; ++s) {
    if (s == 1) continue;
    auto d = decompose_k4x3(3, s);
    CHECK(verify(d).pass);
    CHECK(d.s == s);
    CHECK(d.r == 12 - s);
    CHECK(long_factors(d, 18) == s);
  }
  for (int s : {0, 2, 3, 4}) {
    std::multiset<std::set<std::vector<Vertex>>> a, b;
    const auto small = decompose_k43(s), blown = decompose_k4x3(1, s);
    for (const auto& f : small.factors) a.insert(cycle_set(f));
    for (const auto& f : blown.factors) b.insert(cycle_set(f));
    CHECK(a == b);
  }
  CHECK_THROWS_AS(decompose_k4x3(3, 1), ParameterError);
}
