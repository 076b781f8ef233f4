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

#include "hwp/verify.hpp"

#include <algorithm>
#include <set>

namespace hwp {

namespace {

std::string edge_str(Edge e) {
  return "{" + std::to_string(e.first) + "," + std::to_string(e.second) + "}";
}

VerificationReport fail(std::string why, int factor, std::optional<Edge> edge, std::int64_t covered,
                        std::int64_t expected) {
  VerificationReport rep;
  rep.pass = false;
  rep.violation = std::move(why);
  rep.factor = factor;
  rep.edge = edge;
  rep.edges_covered = covered;
  rep.edges_expected = expected;
  return rep;
}

void check_range(const Decomposition& d) {
  const int v = d.graph.v;
  for (std::size_t f = 0; f < d.factors.size(); ++f)
    for (const auto& c : d.factors[f].cycles())
      for (Vertex x : c.vertices())
        if (x < 0 || x >= v)
          throw StructuralError("factor " + std::to_string(f) + ": vertex " + std::to_string(x) +
                                " out of range [0," + std::to_string(v) + ")");
  if (d.one_factor)
    for (const auto& [a, b] : d.one_factor->edges)
      if (a < 0 || b < 0 || a >= v || b >= v || a == b)
        throw StructuralError("one-factor edge " + edge_str({a, b}) + " out of range");
}

}  // namespace

VerificationReport verify(const Decomposition& d) {
  check_range(d);
  const int v = d.graph.v;
  const std::int64_t expected = d.graph.edge_count();
  std::int64_t covered = 0;

  if (d.r < 0 || d.s < 0 || d.r + d.s != static_cast<int>(d.factors.size()))
    return fail("declared r+s=" + std::to_string(d.r + d.s) + " but " +
                    std::to_string(d.factors.size()) + " factors present",
                -1, std::nullopt, 0, expected);

  // edge multiplicity, indexed a*v+b with a<b
  std::vector<std::uint8_t> count(static_cast<std::size_t>(v) * v, 0);
  auto touch = [&](Edge e) -> int { return ++count[static_cast<std::size_t>(e.first) * v + e.second]; };

  int m_type = 0;
  int n_type = 0;
  std::vector<int> seen(v, -1);
  for (std::size_t fi = 0; fi < d.factors.size(); ++fi) {
    const auto& f = d.factors[fi];
    const int idx = static_cast<int>(fi);
    const int len = f.cycle_length();
    if (f.span() != v)
      return fail("factor " + std::to_string(fi) + " declares span " + std::to_string(f.span()), idx,
                  std::nullopt, covered, expected);
    if (len != d.m && len != d.n)
      return fail("factor " + std::to_string(fi) + " has cycle length " + std::to_string(len) +
                      ", expected " + std::to_string(d.m) + " or " + std::to_string(d.n),
                  idx, std::nullopt, covered, expected);
    if (d.m == d.n ? static_cast<int>(fi) < d.r : len == d.m)
      ++m_type;
    else
      ++n_type;
    for (const auto& c : f.cycles()) {
      if (static_cast<int>(c.size()) != len)
        return fail("factor " + std::to_string(fi) + " contains a " + std::to_string(c.size()) +
                        "-cycle in a C_" + std::to_string(len) + "-factor",
                    idx, std::nullopt, covered, expected);
      for (Vertex x : c.vertices()) {
        if (seen[x] == idx)
          return fail("factor " + std::to_string(fi) + " visits vertex " + std::to_string(x) + " twice",
                      idx, std::nullopt, covered, expected);
        seen[x] = idx;
      }
      for (const Edge& e : c.edges()) {
        if (!d.graph.adjacent(e.first, e.second))
          return fail("factor " + std::to_string(fi) + " uses non-edge " + edge_str(e), idx, e, covered,
                      expected);
        if (touch(e) > 1)
          return fail("edge " + edge_str(e) + " covered twice (again in factor " + std::to_string(fi) + ")",
                      idx, e, covered, expected);
        ++covered;
      }
    }
    for (Vertex x = 0; x < v; ++x)
      if (seen[x] != idx)
        return fail("factor " + std::to_string(fi) + " does not span vertex " + std::to_string(x), idx,
                    std::nullopt, covered, expected);
  }

  if (m_type != d.r || n_type != d.s)
    return fail("factor types give (r,s)=(" + std::to_string(m_type) + "," + std::to_string(n_type) +
                    "), declared (" + std::to_string(d.r) + "," + std::to_string(d.s) + ")",
                -1, std::nullopt, covered, expected);

  const bool wants_f = d.graph.needs_one_factor() ||
                       (d.graph.kind == GraphKind::Equipartite && d.graph.two_factor_degree() % 2 == 1);
  if (wants_f && !d.one_factor)
    return fail("graph requires a one-factor but none given", -1, std::nullopt, covered, expected);
  if (!wants_f && d.one_factor)
    return fail("one-factor given for a graph of even degree", -1, std::nullopt, covered, expected);
  std::int64_t total = expected;
  if (d.one_factor) {
    std::vector<char> deg(v, 0);
    for (const auto& raw : d.one_factor->edges) {
      const Edge e = make_edge(raw.first, raw.second);
      if (!d.graph.adjacent(e.first, e.second))
        return fail("one-factor uses non-edge " + edge_str(e), -1, e, covered, expected);
      if (++deg[e.first] > 1 || ++deg[e.second] > 1)
        return fail("one-factor edge " + edge_str(e) + " meets an already matched vertex", -1, e, covered,
                    expected);
      if (touch(e) > 1)
        return fail("one-factor edge " + edge_str(e) + " already covered by a 2-factor", -1, e, covered,
                    expected);
      ++covered;
    }
    for (Vertex x = 0; x < v; ++x)
      if (!deg[x])
        return fail("one-factor misses vertex " + std::to_string(x), -1, std::nullopt, covered, expected);
    // K_v - F counts F outside the graph's edge set.
    if (d.graph.needs_one_factor()) total += v / 2;
  }

  for (Vertex a = 0; a < v; ++a)
    for (Vertex b = a + 1; b < v; ++b)
      if (d.graph.adjacent(a, b) && count[static_cast<std::size_t>(a) * v + b] == 0)
        return fail("edge " + edge_str({a, b}) + " is not covered", -1, Edge{a, b}, covered, expected);

  if (covered != total)
    return fail("covered " + std::to_string(covered) + " edges, expected " + std::to_string(total), -1,
                std::nullopt, covered, expected);

  VerificationReport ok;
  ok.pass = true;
  ok.edges_covered = covered;
  ok.edges_expected = expected;
  return ok;
}

std::optional<std::string> check_rgdd(const Rgdd& g) {
  const int npts = g.points();
  if (g.h < 1 || g.u < 2) return "bad parameters";
  if (static_cast<int>(g.groups.size()) != g.u) return "wrong number of groups";
  std::vector<int> group_of(npts, -1);
  for (int gi = 0; gi < g.u; ++gi) {
    if (static_cast<int>(g.groups[gi].size()) != g.h) return "group " + std::to_string(gi) + " has wrong size";
    for (Vertex p : g.groups[gi]) {
      if (p < 0 || p >= npts) return "group point out of range";
      if (group_of[p] >= 0) return "point " + std::to_string(p) + " in two groups";
      group_of[p] = gi;
    }
  }
  if (static_cast<int>(g.classes.size()) != g.expected_classes())
    return "expected " + std::to_string(g.expected_classes()) + " parallel classes, got " +
           std::to_string(g.classes.size());
  std::set<Edge> pairs;
  for (std::size_t ci = 0; ci < g.classes.size(); ++ci) {
    std::vector<char> hit(npts, 0);
    for (const auto& t : g.classes[ci]) {
      for (Vertex p : t) {
        if (p < 0 || p >= npts) return "block point out of range";
        if (hit[p]) return "class " + std::to_string(ci) + " covers point " + std::to_string(p) + " twice";
        hit[p] = 1;
      }
      for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b) {
          if (group_of[t[a]] == group_of[t[b]]) return "block meets a group twice";
          if (!pairs.insert(make_edge(t[a], t[b])).second) return "transverse pair repeated";
        }
    }
    for (int p = 0; p < npts; ++p)
      if (!hit[p]) return "class " + std::to_string(ci) + " misses point " + std::to_string(p);
  }
  const std::int64_t transverse = static_cast<std::int64_t>(g.h) * g.h * g.u * (g.u - 1) / 2;
  if (static_cast<std::int64_t>(pairs.size()) != transverse) return "not every transverse pair is covered";
  return std::nullopt;
}

std::vector<std::string> check_necessary(int x, int y, int r, int s) {
  std::vector<std::string> out;
  if (x < 1 || y < 1 || r < 0 || s < 0) {
    out.emplace_back("parameters must satisfy x >= 1, y >= 1, r >= 0, s >= 0");
    return out;
  }
  const int v = 3 * x * y;
  if (v % 2 == 1 && r + s != (v - 1) / 2)
    out.push_back("v=" + std::to_string(v) + " is odd, so r+s must be " + std::to_string((v - 1) / 2) +
                  " (got " + std::to_string(r + s) + ")");
  if (v % 2 == 0 && r + s != (v - 2) / 2)
    out.push_back("v=" + std::to_string(v) + " is even, so r+s must be " + std::to_string((v - 2) / 2) +
                  " (got " + std::to_string(r + s) + ")");
  // m=3 and n=3x both divide v=3xy, so the divisibility clauses always hold.
  if (r > 0 && v % 3 != 0) out.emplace_back("r > 0 requires 3 | v");
  if (s > 0 && v % (3 * x) != 0) out.emplace_back("s > 0 requires 3x | v");
  return out;
}

}  // namespace hwp
