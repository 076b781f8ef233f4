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

#include "hwp/composer.hpp"

#include <algorithm>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <sstream>

#include "hwp/constructions.hpp"
#include "hwp/verify.hpp"

namespace hwp {

namespace {

using Relabel = std::function<Vertex(Vertex)>;

void append_cycles(std::vector<Cycle>& out, const TwoFactor& f, const Relabel& label) {
  for (const auto& c : f.cycles()) {
    std::vector<Vertex> vs;
    vs.reserve(c.size());
    for (Vertex a : c.vertices()) vs.push_back(label(a));
    out.emplace_back(std::move(vs));
  }
}

void append_matching(std::vector<Edge>& out, const Decomposition& d, const Relabel& label) {
  if (!d.one_factor) return;
  for (const auto& [a, b] : d.one_factor->edges) out.push_back(make_edge(label(a), label(b)));
}

// Tags factors by cycle length: length m counts towards r, anything else s.
void tally(Decomposition& d) {
  d.r = d.s = 0;
  for (std::size_t f = 0; f < d.factors.size(); ++f) {
    if (d.m == d.n) {
      ++d.r;
    } else {
      (d.factors[f].cycle_length() == d.m ? d.r : d.s)++;
    }
  }
}

Decomposition finish(Decomposition d, std::vector<Edge> matching, const char* what) {
  if (d.graph.needs_one_factor()) d.one_factor = OneFactor::from_edges(std::move(matching));
  tally(d);
  auto rep = verify(d);
  if (!rep) throw InternalError(std::string(what) + " produced an invalid decomposition: " + rep.violation);
  return d;
}

Decomposition retag(Decomposition d, int m, int n) {
  d.m = m;
  d.n = n;
  tally(d);
  return d;
}

int factor_span_count(const Decomposition& d) { return static_cast<int>(d.factors.size()); }

void require(bool ok, const std::string& why) {
  if (!ok) throw ParameterError(why);
}

void check_class_decomps(const std::vector<Decomposition>& cds, int w, std::size_t count) {
  require(cds.size() == count, "expected " + std::to_string(count) + " class decompositions, got " +
                                   std::to_string(cds.size()));
  for (const auto& cd : cds) {
    require(cd.graph == GraphSpec::equipartite(w, 3), "class decompositions must be on K_(w:3)");
    require(factor_span_count(cd) == w, "a K_(w:3) decomposition has w factors");
  }
}

// Output (m, n) spans the declared lengths of every piece.
void span_lengths(Decomposition& out, const std::vector<Decomposition>& cds,
                  std::initializer_list<const Decomposition*> fills) {
  out.m = fills.begin()[0]->m;
  out.n = fills.begin()[0]->n;
  auto widen = [&](const Decomposition& d) {
    out.m = std::min(out.m, d.m);
    out.n = std::max(out.n, d.n);
  };
  for (const auto& cd : cds) widen(cd);
  for (const auto* f : fills) widen(*f);
}

Relabel block_label(const Rgdd::Triple& t, int w) {
  return [t, w](Vertex a) { return static_cast<Vertex>(t[a / w] * w + a % w); };
}

Relabel group_label(const std::vector<Vertex>& group, int w) {
  return [&group, w](Vertex a) { return static_cast<Vertex>(group[a / w] * w + a % w); };
}

// Adds one output factor per class factor: block copies of the same index
// union into a spanning factor.
void add_class_factors(Decomposition& out, const std::vector<Rgdd::Triple>& cls, const Decomposition& cd, int w) {
  for (const auto& f : cd.factors) {
    std::vector<Cycle> cycles;
    for (const auto& t : cls) {
      Rgdd::Triple sorted = t;
      std::sort(sorted.begin(), sorted.end());
      append_cycles(cycles, f, block_label(sorted, w));
    }
    out.factors.emplace_back(out.graph.v, f.cycle_length(), std::move(cycles));
  }
}

}  // namespace

Decomposition weight_main(const Rgdd& rgdd, int w, const std::vector<Decomposition>& class_decomps,
                          const Decomposition& group_fill) {
  if (auto why = check_rgdd(rgdd)) throw ParameterError("invalid RGDD: " + *why);
  require(w >= 1, "weight must be positive");
  check_class_decomps(class_decomps, w, rgdd.classes.size());
  require(group_fill.graph == GraphSpec::complete_or_minus(rgdd.h * w), "group fill must be on K_hw or K_hw - F");
  Decomposition out;
  out.graph = GraphSpec::complete_or_minus(rgdd.points() * w);
  span_lengths(out, class_decomps, {&group_fill});
  for (std::size_t p = 0; p < rgdd.classes.size(); ++p) add_class_factors(out, rgdd.classes[p], class_decomps[p], w);
  for (const auto& f : group_fill.factors) {
    std::vector<Cycle> cycles;
    for (const auto& g : rgdd.groups) append_cycles(cycles, f, group_label(g, w));
    out.factors.emplace_back(out.graph.v, f.cycle_length(), std::move(cycles));
  }
  std::vector<Edge> matching;
  for (const auto& g : rgdd.groups) append_matching(matching, group_fill, group_label(g, w));
  return finish(std::move(out), std::move(matching), "weighting");
}

Decomposition weight_main2(const Rgdd& rgdd, int w, const std::vector<Decomposition>& class_decomps,
                           const Decomposition& last_class_fill, const Decomposition& group_decomp) {
  if (auto why = check_rgdd(rgdd)) throw ParameterError("invalid RGDD: " + *why);
  require(w >= 1, "weight must be positive");
  require(!rgdd.classes.empty(), "the RGDD has no parallel class");
  check_class_decomps(class_decomps, w, rgdd.classes.size() - 1);
  require(last_class_fill.graph == GraphSpec::complete_or_minus(3 * w),
          "last-class fill must be on K_3w or K_3w - F");
  require(group_decomp.graph == GraphSpec::equipartite(w, rgdd.h), "group decomposition must be on K_(w:h)");
  Decomposition out;
  out.graph = GraphSpec::complete_or_minus(rgdd.points() * w);
  span_lengths(out, class_decomps, {&last_class_fill, &group_decomp});
  for (std::size_t p = 0; p + 1 < rgdd.classes.size(); ++p)
    add_class_factors(out, rgdd.classes[p], class_decomps[p], w);
  std::vector<Rgdd::Triple> last = rgdd.classes.back();
  for (auto& t : last) std::sort(t.begin(), t.end());
  std::vector<Edge> matching;
  for (const auto& f : last_class_fill.factors) {
    std::vector<Cycle> cycles;
    for (const auto& t : last) append_cycles(cycles, f, block_label(t, w));
    out.factors.emplace_back(out.graph.v, f.cycle_length(), std::move(cycles));
  }
  for (const auto& t : last) append_matching(matching, last_class_fill, block_label(t, w));
  for (const auto& f : group_decomp.factors) {
    std::vector<Cycle> cycles;
    for (const auto& g : rgdd.groups) append_cycles(cycles, f, group_label(g, w));
    out.factors.emplace_back(out.graph.v, f.cycle_length(), std::move(cycles));
  }
  return finish(std::move(out), std::move(matching), "weighting with a filled last class");
}

Decomposition doubling(int x, const Decomposition& half, const Decomposition& cross) {
  require(x >= 2 && x % 2 == 0, "doubling needs even x");
  const int n = 3 * x;
  require(half.graph == GraphSpec::minus_one_factor(n), "half must be on K_3x - F");
  require(cross.graph == GraphSpec::equipartite(n, 2), "cross must be on K_(3x:2)");
  Decomposition out;
  out.graph = GraphSpec::minus_one_factor(2 * n);
  out.m = 3;
  out.n = n;
  const Relabel first = [](Vertex a) { return a; };
  const Relabel second = [n](Vertex a) { return static_cast<Vertex>(a + n); };
  for (const auto& f : half.factors) {
    require(f.cycle_length() == 3 || f.cycle_length() == n, "half must use triangles and Hamilton cycles");
    std::vector<Cycle> cycles;
    append_cycles(cycles, f, first);
    append_cycles(cycles, f, second);
    out.factors.emplace_back(2 * n, f.cycle_length(), std::move(cycles));
  }
  for (const auto& f : cross.factors) {
    require(f.cycle_length() == n, "cross factors must be C_3x-factors");
    out.factors.push_back(f);
  }
  std::vector<Edge> matching;
  append_matching(matching, half, first);
  append_matching(matching, half, second);
  return finish(std::move(out), std::move(matching), "doubling");
}

std::optional<Decomposition> doubling_by_search(int x, const Decomposition& half, const SearchBudget& budget) {
  require(x >= 2 && x % 2 == 0, "doubling needs even x");
  const int n = 3 * x;
  require(half.graph == GraphSpec::minus_one_factor(n), "half must be on K_3x - F");
  SearchRequest req;
  req.host.v = 2 * n;
  req.host.adj.assign(2 * n, 0);
  auto link = [&](Vertex a, Vertex b) {
    req.host.adj[a] |= std::uint64_t{1} << b;
    req.host.adj[b] |= std::uint64_t{1} << a;
  };
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = n; b < 2 * n; ++b) link(a, b);
  int hamilton = 0;
  for (const auto& f : half.factors) {
    if (f.cycle_length() != n) continue;
    ++hamilton;
    for (const auto& [a, b] : f.edges()) {
      link(a, b);
      link(a + n, b + n);
    }
  }
  req.m = req.n = n;
  req.r = hamilton + n / 2;
  auto res = search_factors(req, budget);
  if (res.status != SearchStatus::Found) return std::nullopt;
  Decomposition out;
  out.graph = GraphSpec::minus_one_factor(2 * n);
  out.m = 3;
  out.n = n;
  const Relabel first = [](Vertex a) { return a; };
  const Relabel second = [n](Vertex a) { return static_cast<Vertex>(a + n); };
  for (const auto& f : half.factors) {
    if (f.cycle_length() != 3) continue;
    std::vector<Cycle> cycles;
    append_cycles(cycles, f, first);
    append_cycles(cycles, f, second);
    out.factors.emplace_back(2 * n, 3, std::move(cycles));
  }
  for (const auto& f : res.decomposition->factors) out.factors.push_back(f);
  std::vector<Edge> matching;
  append_matching(matching, half, first);
  append_matching(matching, half, second);
  return finish(std::move(out), std::move(matching), "doubling by search");
}

Decomposition parts_and_cross(int x, int y, const Decomposition& part, const Decomposition& cross) {
  require(x >= 2 && x % 2 == 0, "parts-and-cross needs even x");
  const int n = 3 * x;
  require(part.graph == GraphSpec::minus_one_factor(n), "part must be on K_3x - F");
  require(cross.graph == GraphSpec::equipartite(n, y), "cross must be on K_(3x:y)");
  Decomposition out;
  out.graph = GraphSpec::minus_one_factor(n * y);
  out.m = 3;
  out.n = n;
  std::vector<Edge> matching;
  for (const auto& f : part.factors) {
    std::vector<Cycle> cycles;
    for (int j = 0; j < y; ++j) append_cycles(cycles, f, [n, j](Vertex a) { return static_cast<Vertex>(a + j * n); });
    out.factors.emplace_back(n * y, f.cycle_length(), std::move(cycles));
  }
  for (int j = 0; j < y; ++j) append_matching(matching, part, [n, j](Vertex a) { return static_cast<Vertex>(a + j * n); });
  for (const auto& f : cross.factors) out.factors.push_back(f);
  return finish(std::move(out), std::move(matching), "parts and cross");
}

// ---- planner ---------------------------------------------------------------

const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::Main:
      return "main";
    case Strategy::Main2:
      return "main2";
    case Strategy::Double:
      return "double";
    case Strategy::SmallY:
      return "small_y";
    case Strategy::Direct:
      return "direct";
    case Strategy::Oracle:
      return "oracle";
  }
  return "?";
}

const char* to_string(PlanStatus s) {
  switch (s) {
    case PlanStatus::Constructible:
      return "constructible";
    case PlanStatus::Exception:
      return "exception";
    case PlanStatus::Open:
      return "open";
  }
  return "?";
}

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Ok:
      return "ok";
    case SolveStatus::Exception:
      return "exception";
    case SolveStatus::Open:
      return "open";
    case SolveStatus::NotFound:
      return "not-found";
  }
  return "?";
}

std::vector<std::string> matching_bullets(int x, int y, int s) {
  static const int b1[] = {3, 31, 37, 41, 43, 47, 51, 53, 59, 61, 67, 69, 71, 79, 83};
  const bool x_odd = x % 2 == 1, y_odd = y % 2 == 1;
  std::vector<std::string> out;
  if (s == 1 && y >= 3 && std::find(std::begin(b1), std::end(b1), x) != std::end(b1))
    out.emplace_back("s=1, y>=3, x in {3,31,37,41,43,47,51,53,59,61,67,69,71,79,83}");
  if (s == 1 && x_odd && !y_odd) out.emplace_back("s=1, x odd, y even");
  if (s == 1 && x >= 6 && x % 12 == 2) out.emplace_back("s=1, x>=6, x=2 (mod 12)");
  if (s == 1 && y >= 8 && !y_odd && x % 12 == 10) out.emplace_back("s=1, y>=8 even, x=10 (mod 12)");
  if (s == 1 && x >= 3 && x_odd && !y_odd) out.emplace_back("s=1, x>=3 odd, y even");
  if (s >= 1 && 2 * s <= x - 2 && x >= 16 && x % 12 == 4 && !y_odd)
    out.emplace_back("1<=s<=x/2-1, x>=16, x=4 (mod 12), y even");
  if (s >= 1 && 2 * s <= x - 2 && x >= 10 && x % 6 == 4 && y_odd)
    out.emplace_back("1<=s<=x/2-1, x>=10, x=4 (mod 6), y odd");
  if (x == 12 && (s == 2 || s == 4)) out.emplace_back("(s,x) in {(2,12),(4,12)}");
  if (s == 0 && x == 2 && y == 2) out.emplace_back("s=0, x=2, y=2");
  if (x == 2 && (y == 4 || y == 8)) out.emplace_back("x=2, y in {4,8}");
  if (x == 2 && y >= 3 && y_odd && s >= 3 && 2 * s <= 3 * (y - 1)) out.emplace_back("s in {3,...,3(y-1)/2}, x=2, y>=3 odd");
  if (x != 2 && x != 4 && (y == 2 || y == 4 || y == 6)) out.emplace_back("x not in {2,4}, y in {2,4,6}");
  if (x == 4 && (y == 2 || y == 4)) out.emplace_back("x=4, y in {2,4}");
  if (x == 6 && y_odd) out.emplace_back("x=6, y odd");
  return out;
}

namespace {

struct Route {
  Strategy strategy;
  int h, u, w;
  ClassMaker maker;
  std::vector<int> betas;
  std::vector<int> gammas;  // Main2 only
  std::string text;
};

std::vector<int> slot_values(ClassMaker maker, int w) {
  switch (maker) {
    case ClassMaker::OddDifference:
    case ClassMaker::EvenDifference: {
      std::vector<int> v{0};
      for (int k = 2; k <= w; ++k) v.push_back(k);
      return v;
    }
    case ClassMaker::AllOrNothing:
      return {0, w};
    case ClassMaker::Pair:
      return {1, 2};
    case ClassMaker::Unit:
      return {0};
  }
  return {};
}

// reach[k][t]: t is a sum of k slot values.
std::vector<std::vector<char>> reachability(const std::vector<int>& values, int slots, int limit) {
  std::vector<std::vector<char>> reach(slots + 1, std::vector<char>(limit + 1, 0));
  reach[0][0] = 1;
  for (int k = 1; k <= slots; ++k)
    for (int t = 0; t <= limit; ++t)
      for (int val : values)
        if (val <= t && reach[k - 1][t - val]) {
          reach[k][t] = 1;
          break;
        }
  return reach;
}

// Lexicographically greatest slot vector summing to t.
std::optional<std::vector<int>> split_slots(const std::vector<int>& values, int slots, int t) {
  if (t < 0) return std::nullopt;
  auto reach = reachability(values, slots, t);
  if (!reach[slots][t]) return std::nullopt;
  std::vector<int> desc = values;
  std::sort(desc.rbegin(), desc.rend());
  std::vector<int> out;
  for (int k = slots; k > 0; --k) {
    for (int val : desc)
      if (val <= t && reach[k - 1][t - val]) {
        out.push_back(val);
        t -= val;
        break;
      }
  }
  return out;
}

std::vector<int> range(int lo, int hi) {
  std::vector<int> v;
  for (int k = lo; k <= hi; ++k) v.push_back(k);
  return v;
}

int count_for(int v) { return factor_count_for(v); }

bool feasible(const IngredientKey& k) { return !theory_infeasible(k).has_value(); }

// A (3, 3x)-HWP(v; ., s) usable as a fill: not ruled out, not an open base case.
bool fill_available(int v, int x, int s) {
  const int total = count_for(v);
  if (s < 0 || s > total) return false;
  const auto key = IngredientKey::base_hwp(v, 3, 3 * x, total - s, s);
  if (!feasible(key)) return false;
  if (s != 0 && s != total && 3 * x == v) return hamilton_base_status(v, s) == BaseStatus::Exists;
  return true;
}

std::vector<Route> routes_for(int x, int y) {
  std::vector<Route> out;
  const bool x_odd = x % 2 == 1, y_odd = y % 2 == 1;
  auto rgdd_ok = [](int h, int u) { return feasible(IngredientKey::rgdd(h, u)); };
  if (x_odd && x >= 3 && y_odd && y >= 3)
    out.push_back({Strategy::Main, 3, y, x, ClassMaker::OddDifference, {0, 1, (3 * x - 1) / 2}, {},
                   "weighting over 3-RGDD(3^y), odd-difference blocks, group fill HWP(3x)"});
  if (x_odd && x >= 3 && !y_odd && y >= 8)
    out.push_back({Strategy::Main, 6, y / 2, x, ClassMaker::OddDifference, {0, 3 * x - 1}, {},
                   "weighting over 3-RGDD(6^(y/2)), odd-difference blocks, uniform group fill on 6x points"});
  if (!x_odd && x >= 8 && y_odd && y >= 3)
    out.push_back({Strategy::Main, 3, y, x, ClassMaker::AllOrNothing, range(0, (3 * x - 2) / 2), {},
                   "weighting over 3-RGDD(3^y), uniform blocks, group fill HWP(3x)"});
  if (!x_odd && x >= 6 && (x / 2) % 2 == 1 && !y_odd && y >= 6) {
    if (y % 4 == 2)
      out.push_back({Strategy::Main, 3, y / 2, 2 * x, ClassMaker::EvenDifference, {0, 3 * x - 1}, {},
                     "weighting over 3-RGDD(3^(y/2)) with weight 2x, exchange blocks, uniform group fill"});
    else if (y >= 12)
      out.push_back({Strategy::Main2, 6, y / 4, 2 * x, ClassMaker::EvenDifference, {0, 3 * x - 1}, {0, 5 * x},
                     "weighting over 3-RGDD(6^(y/4)) with weight 2x, filled last class, uniform K_(2x:6)"});
  }
  if (!x_odd && x >= 8 && !y_odd && y >= 8)
    out.push_back({Strategy::Main2, 6, y / 2, x, ClassMaker::AllOrNothing, range(0, (3 * x - 2) / 2), {0, 5 * x / 2},
                   "weighting over 3-RGDD(6^(y/2)), uniform blocks, filled last class, uniform K_(x:6)"});
  if (x == 2) {
    if (y % 4 == 2 && y >= 6)
      out.push_back({Strategy::Main, 3, y / 2, 4, ClassMaker::EvenDifference, range(1, 5), {},
                     "weighting over 3-RGDD(3^(y/2)) with weight 4, K_(4:3) blocks, group fill HWP(12)"});
    if (y % 4 == 0 && y >= 12)
      out.push_back({Strategy::Main2, 6, y / 4, 4, ClassMaker::EvenDifference, range(1, 5), {0, 10},
                     "weighting over 3-RGDD(6^(y/4)) with weight 4, filled last class, uniform K_(4:6)"});
    if (y_odd && y >= 3) {
      out.push_back({Strategy::Main, 3, y, 2, ClassMaker::Pair, {1, 2}, {},
                     "weighting over 3-RGDD(3^y) with weight 2, K_(2:3) blocks, group fill HWP(6)"});
      if (rgdd_ok(6, y))
        out.push_back({Strategy::Main, 6, y, 1, ClassMaker::Unit, {1, 2}, {},
                       "3-RGDD(6^y) blocks as triangles, group fill HWP(6)"});
    }
  }
  if (x == 4) {
    if (y_odd && y >= 3)
      out.push_back({Strategy::Main, 3, y, 4, ClassMaker::AllOrNothing, range(1, 5), {},
                     "weighting over 3-RGDD(3^y) with weight 4, uniform blocks, group fill HWP(12)"});
    if (!y_odd && y >= 6)
      out.push_back({Strategy::Main2, 6, y / 2, 4, ClassMaker::AllOrNothing, range(1, 5), {0, 10},
                     "weighting over 3-RGDD(6^(y/2)) with weight 4, filled last class, uniform K_(4:6)"});
  }
  // Drop routes whose RGDD cannot exist.
  std::erase_if(out, [&](const Route& rt) { return !rgdd_ok(rt.h, rt.u); });
  return out;
}

std::optional<Plan> try_route(const Route& rt, int x, int y, int r, int s) {
  const int classes = rt.h * (rt.u - 1) / 2;
  const bool second = rt.strategy == Strategy::Main2;
  const int slots = second ? classes - 1 : classes;
  const int fill_points = second ? 3 * rt.w : rt.h * rt.w;
  const auto values = slot_values(rt.maker, rt.w);
  std::vector<int> gammas = second ? rt.gammas : std::vector<int>{0};
  const int gamma_total = rt.w * (rt.h - 1) / 2;
  for (int beta : rt.betas) {
    if (!fill_available(fill_points, x, beta)) continue;
    for (int gamma : gammas) {
      if (second) {
        const auto gk = IngredientKey::design(GraphSpec::equipartite(rt.w, rt.h), 3, 3 * x, gamma_total - gamma, gamma);
        if (!feasible(gk)) continue;
      }
      auto sp = split_slots(values, slots, s - beta - gamma);
      if (!sp) continue;
      Plan p;
      p.strategy = rt.strategy;
      p.x = x;
      p.y = y;
      p.r = r;
      p.s = s;
      p.h = rt.h;
      p.u = rt.u;
      p.w = rt.w;
      p.maker = rt.maker;
      p.s_p = std::move(*sp);
      p.s_beta = beta;
      p.s_gamma = second ? gamma : 0;
      p.route = rt.text;
      p.ingredients.push_back(IngredientKey::rgdd(rt.h, rt.u));
      const int fill_total = count_for(fill_points);
      p.ingredients.push_back(IngredientKey::base_hwp(fill_points, 3, 3 * x, fill_total - beta, beta));
      if (second)
        p.ingredients.push_back(
            IngredientKey::design(GraphSpec::equipartite(rt.w, rt.h), 3, 3 * x, gamma_total - gamma, gamma));
      return p;
    }
  }
  return std::nullopt;
}

Plan simple_plan(Strategy st, int x, int y, int r, int s, std::string route) {
  Plan p;
  p.strategy = st;
  p.x = x;
  p.y = y;
  p.r = r;
  p.s = s;
  p.route = std::move(route);
  return p;
}

std::optional<Plan> try_parts(int x, int y, int r, int s) {
  if (x % 2 != 0 || (y != 2 && y != 4 && y != 6)) return std::nullopt;
  const int part_total = count_for(3 * x);
  const int cross_total = 3 * x * (y - 1) / 2;
  for (int e1 : {0, 1}) {
    const int s1 = s - e1 * cross_total;
    if (s1 < 0 || s1 > part_total) continue;
    if (!fill_available(3 * x, x, s1)) continue;
    Plan p;
    if (y == 2) {
      // The cross K_(3x:2) only ever carries C_{3x}-factors here.
      if (e1 == 0) continue;
      p = simple_plan(Strategy::Double, x, y, r, s, "doubling of a HWP(3x) with triangles and Hamilton cycles");
    } else {
      const auto cross = IngredientKey::equipartite_fact(3 * x, y, e1 ? 3 * x : 3);
      if (!feasible(cross)) continue;
      p = simple_plan(Strategy::SmallY, x, y, r, s, "HWP(3x) on each of y parts plus a uniform K_(3x:y)");
    }
    p.s_part = s1;
    p.cross_long = e1;
    p.ingredients.push_back(IngredientKey::base_hwp(3 * x, 3, 3 * x, part_total - s1, s1));
    p.ingredients.push_back(IngredientKey::equipartite_fact(3 * x, y, e1 ? 3 * x : 3));
    return p;
  }
  return std::nullopt;
}

}  // namespace

PlanResult plan(int x, int y, int r, int s) {
  if (x < 2 || y < 2) throw ParameterError("x and y must be at least 2");
  if (r < 0 || s < 0) throw ParameterError("r and s must be non-negative");
  if (auto v = check_necessary(x, y, r, s); !v.empty()) throw ParameterError(v.front());
  const int v = 3 * x * y;
  PlanResult out;
  const auto bullets = matching_bullets(x, y, s);
  const std::string first_bullet = bullets.empty() ? std::string() : bullets.front();

  // Points proven impossible.
  if (x == 3 && y % 2 == 1 && s == 1) {
    out.status = PlanStatus::Exception;
    out.bullet = "s=1 and x=3";
    return out;
  }
  if (x == 2 && y == 2 && s == 0) {
    out.status = PlanStatus::Exception;
    out.bullet = "s=0, x=2, y=2";
    return out;
  }

  std::optional<Plan> found;
  for (const auto& rt : routes_for(x, y))
    if ((found = try_route(rt, x, y, r, s))) break;
  if (!found) found = try_parts(x, y, r, s);
  if (!found && (s == 0 || r == 0)) {
    const auto key = IngredientKey::base_hwp(v, 3, 3 * x, r, s);
    if (feasible(key)) {
      found = simple_plan(Strategy::Direct, x, y, r, s, "uniform factorization of the whole graph");
      found->ingredients.push_back(key);
    }
  }
  if (!found && first_bullet.empty() && v <= 18) {
    found = simple_plan(Strategy::Oracle, x, y, r, s, "direct search on the whole graph");
    found->ingredients.push_back(IngredientKey::base_hwp(v, 3, 3 * x, r, s));
  }
  if (found) {
    found->bullet = first_bullet;
    out.status = PlanStatus::Constructible;
    out.plan = std::move(found);
    return out;
  }
  out.status = PlanStatus::Open;
  out.bullet = first_bullet.empty() ? "no construction reaches this point" : first_bullet;
  return out;
}

std::vector<TableRow> table(int x, int y) {
  if (x < 2 || y < 2) throw ParameterError("x and y must be at least 2");
  const int total = count_for(3 * x * y);
  std::vector<TableRow> rows;
  for (int s = 0; s <= total; ++s) {
    TableRow row;
    row.s = s;
    row.r = total - s;
    const auto pr = plan(x, y, row.r, s);
    row.status = pr.status;
    if (pr.plan) {
      row.note = std::string(to_string(pr.plan->strategy)) + ": " + pr.plan->route;
      if (!pr.plan->bullet.empty()) row.note += " [listed: " + pr.plan->bullet + "]";
    } else {
      row.note = pr.bullet;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_table(int x, int y, const std::vector<TableRow>& rows) {
  std::ostringstream os;
  const int v = 3 * x * y;
  os << "# (3," << 3 * x << ")-HWP(" << v << "; r, s) with r+s=" << count_for(v) << "\n";
  for (const auto& row : rows)
    os << "s=" << row.s << " r=" << row.r << " " << to_string(row.status) << " " << row.note << "\n";
  return os.str();
}

// ---- execution -------------------------------------------------------------

std::optional<Decomposition> class_decomposition(ClassMaker maker, int w, int x, int s_p, const SearchBudget& budget,
                                                 std::string* missing) {
  auto fetch = [&](const IngredientKey& key) -> std::optional<Decomposition> {
    auto ing = get(key, budget);
    if (!ing.design) {
      if (missing) *missing = key.id() + " (" + to_string(ing.reason) + ": " + ing.detail + ")";
      return std::nullopt;
    }
    return retag(*ing.design, 3, 3 * x);
  };
  switch (maker) {
    case ClassMaker::OddDifference:
      return retag(decompose_kx3_odd(w, s_p), 3, 3 * x);
    case ClassMaker::EvenDifference:
      return retag(w == 4 ? decompose_k43(s_p) : decompose_k4x3(w / 4, s_p), 3, 3 * x);
    case ClassMaker::AllOrNothing:
      if (s_p != 0 && s_p != w) throw ParameterError("uniform blocks take s_p in {0, w}");
      return fetch(IngredientKey::equipartite_fact(w, 3, s_p == 0 ? 3 : 3 * x));
    case ClassMaker::Pair:
      return fetch(IngredientKey::design(GraphSpec::equipartite(2, 3), 3, 3 * x, 2 - s_p, s_p));
    case ClassMaker::Unit: {
      if (s_p != 0) throw ParameterError("a single triangle has no long cycle");
      Decomposition d;
      d.graph = GraphSpec::equipartite(1, 3);
      d.m = 3;
      d.n = 3 * x;
      d.r = 1;
      d.factors.emplace_back(3, 3, std::vector<Cycle>{Cycle({0, 1, 2})});
      return d;
    }
  }
  return std::nullopt;
}

namespace {

struct Missing {
  std::string what;
};

Decomposition need(const IngredientKey& key, const SearchBudget& budget) {
  auto ing = get(key, budget);
  if (!ing.found()) throw Missing{key.id() + " (" + to_string(ing.reason) + ": " + ing.detail + ")"};
  return ing.design ? *ing.design : factorization_from_rgdd(*ing.rgdd);
}

Rgdd need_rgdd(int h, int u, const SearchBudget& budget) {
  auto ing = rgdd3(h, u, budget);
  if (!ing.rgdd) throw Missing{IngredientKey::rgdd(h, u).id() + " (" + to_string(ing.reason) + ": " + ing.detail + ")"};
  return *ing.rgdd;
}

Decomposition execute(const Plan& p, const SearchBudget& budget) {
  const int n = 3 * p.x;
  switch (p.strategy) {
    case Strategy::Main:
    case Strategy::Main2: {
      const Rgdd g = need_rgdd(p.h, p.u, budget);
      std::vector<Decomposition> cds;
      for (int sp : p.s_p) {
        std::string missing;
        auto cd = class_decomposition(p.maker, p.w, p.x, sp, budget, &missing);
        if (!cd) throw Missing{missing};
        cds.push_back(std::move(*cd));
      }
      const int fill_points = p.strategy == Strategy::Main2 ? 3 * p.w : p.h * p.w;
      const int fill_total = count_for(fill_points);
      const Decomposition fill =
          retag(need(IngredientKey::base_hwp(fill_points, 3, n, fill_total - p.s_beta, p.s_beta), budget), 3, n);
      if (p.strategy == Strategy::Main) return weight_main(g, p.w, cds, fill);
      const int gamma_total = p.w * (p.h - 1) / 2;
      const Decomposition gd = retag(
          need(IngredientKey::design(GraphSpec::equipartite(p.w, p.h), 3, n, gamma_total - p.s_gamma, p.s_gamma),
               budget),
          3, n);
      return weight_main2(g, p.w, cds, fill, gd);
    }
    case Strategy::Double: {
      const int part_total = count_for(n);
      const Decomposition half =
          retag(need(IngredientKey::base_hwp(n, 3, n, part_total - p.s_part, p.s_part), budget), 3, n);
      const auto cross_key = IngredientKey::equipartite_fact(n, 2, n);
      auto cross = get(cross_key, budget);
      if (cross.design) return doubling(p.x, half, retag(*cross.design, 3, n));
      if (cross.reason == NotFoundReason::InfeasibleByTheory || cross.reason == NotFoundReason::SearchNonexistent) {
        if (auto d = doubling_by_search(p.x, half, budget)) return *d;
        throw Missing{"re-split of the paired Hamilton factors with K_(3x:2) found nothing within budget"};
      }
      throw Missing{cross_key.id() + " (" + to_string(cross.reason) + ": " + cross.detail + ")"};
    }
    case Strategy::SmallY: {
      const int part_total = count_for(n);
      const Decomposition part =
          retag(need(IngredientKey::base_hwp(n, 3, n, part_total - p.s_part, p.s_part), budget), 3, n);
      const Decomposition cross =
          retag(need(IngredientKey::equipartite_fact(n, p.y, p.cross_long ? n : 3), budget), 3, n);
      return parts_and_cross(p.x, p.y, part, cross);
    }
    case Strategy::Direct:
    case Strategy::Oracle:
      return retag(need(IngredientKey::base_hwp(3 * p.x * p.y, 3, n, p.r, p.s), budget), 3, n);
  }
  throw InternalError("unknown strategy");
}

}  // namespace

SolveResult solve(int x, int y, int r, int s, const SearchBudget& budget) {
  SolveResult out;
  const PlanResult pr = plan(x, y, r, s);
  if (pr.status == PlanStatus::Exception) {
    out.status = SolveStatus::Exception;
    out.message = pr.bullet;
    return out;
  }
  if (pr.status == PlanStatus::Open) {
    out.status = SolveStatus::Open;
    out.message = pr.bullet;
    return out;
  }
  out.plan = pr.plan;
  const int v = 3 * x * y;
  try {
    out.decomposition = execute(*pr.plan, budget);
    out.message = pr.plan->route;
  } catch (const Missing& m) {
    out.message = "missing ingredient " + m.what;
    if (v <= 18 && pr.plan->strategy != Strategy::Oracle && pr.plan->strategy != Strategy::Direct) {
      auto ing = get(IngredientKey::base_hwp(v, 3, 3 * x, r, s), budget);
      if (ing.design) {
        out.decomposition = retag(*ing.design, 3, 3 * x);
        out.message += "; solved by direct search instead";
      }
    }
  }
  if (!out.decomposition) {
    out.status = SolveStatus::NotFound;
    return out;
  }
  auto rep = verify(*out.decomposition);
  if (!rep) throw InternalError("solve produced an invalid decomposition: " + rep.violation);
  if (out.decomposition->r != r || out.decomposition->s != s)
    throw InternalError("solve produced (r,s)=(" + std::to_string(out.decomposition->r) + "," +
                        std::to_string(out.decomposition->s) + ")");
  out.status = SolveStatus::Ok;
  return out;
}

}  // namespace hwp
