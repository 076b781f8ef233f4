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

#include "hwp/constructions.hpp"

#include <algorithm>
#include <numeric>

#include "hwp/verify.hpp"

namespace hwp {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

void require_odd(int x, const char* what) {
  if (x < 1 || x % 2 == 0) throw ParameterError(std::string(what) + " must be odd and positive, got " + std::to_string(x));
}

void require_index(int i, int bound, const char* what) {
  if (i < 0 || i >= bound)
    throw ParameterError(std::string(what) + "=" + std::to_string(i) + " outside [0," + std::to_string(bound) + ")");
}

void require_moved_count(int s, int limit) {
  if (s == 1) throw ParameterError("s=1 is not reachable by a fixed-point exchange");
  if (s < 0 || s > limit) throw ParameterError("s=" + std::to_string(s) + " outside [0," + std::to_string(limit) + "]");
}

// Piecewise map on [0, bound) moving exactly the first s points; first
// matching case wins.
int piecewise_image(int i, int s) {
  if (s == 0) return i;
  if (i == 1) return 0;
  if (i % 2 == 0 && i <= s - 3) return i + 2;
  if (i % 2 == 1 && i >= 3 && i <= s - 1) return i - 2;
  if (i % 2 == 0 && i == s - 1) return s - 2;
  if (i % 2 == 0 && i == s - 2) return s - 1;
  if (i >= s) return i;
  throw InternalError("piecewise map has no case for i=" + std::to_string(i) + ", s=" + std::to_string(s));
}

Decomposition checked(Decomposition d, const char* what) {
  auto rep = verify(d);
  if (!rep) throw InternalError(std::string(what) + " failed verification: " + rep.violation);
  return d;
}

}  // namespace

int gcd_int(int a, int b) { return std::gcd(a, b); }

std::optional<std::string> check_fixed_point_map(const FixedPointMap& f) {
  const int size = f.domain_size();
  std::vector<char> hit(size, 0);
  int fixed = 0;
  for (int p = 0; p < size; ++p) {
    const int q = f.map[p];
    if (q < 0 || q >= size) return "image of " + std::to_string(p) + " out of range";
    if (hit[q]) return "not injective at " + std::to_string(q);
    hit[q] = 1;
    if (q == p) {
      ++fixed;
      continue;
    }
    if (f.mode == FixedPointMap::Mode::Difference) {
      if (gcd_int(f.modulus, mod(p - q, f.modulus)) != 1)
        return "gcd(x, i - map(i)) != 1 at i=" + std::to_string(p);
    } else {
      const int a = p / f.modulus, i = p % f.modulus;
      const int b = q / f.modulus, j = q % f.modulus;
      if (a == b) return "pair " + std::to_string(p) + " keeps its first coordinate";
      if (gcd_int(f.modulus, mod(i - j, f.modulus)) != 1)
        return "gcd(x', i - j) != 1 at pair " + std::to_string(p);
    }
  }
  if (fixed != f.fixed_count)
    return "has " + std::to_string(fixed) + " fixed points, expected " + std::to_string(f.fixed_count);
  return std::nullopt;
}

TwoFactor triangle_factor(int x, int i) {
  require_odd(x, "x");
  require_index(i, x, "i");
  std::vector<Cycle> cycles;
  cycles.reserve(x);
  for (int k = 0; k < x; ++k)
    cycles.emplace_back(std::vector<Vertex>{flatten(0, x, k), flatten(1, x, mod(k + 2 * i, x)),
                                            flatten(2, x, mod(k + i, x))});
  return TwoFactor(3 * x, 3, std::move(cycles));
}

TwoFactor difference_factor(int x, int i, int j) {
  require_odd(x, "x");
  require_index(i, x, "i");
  require_index(j, x, "j");
  std::vector<Edge> edges;
  edges.reserve(3 * x);
  for (int k = 0; k < x; ++k) {
    edges.push_back(make_edge(flatten(0, x, k), flatten(1, x, mod(k + 2 * i, x))));
    edges.push_back(make_edge(flatten(1, x, k), flatten(2, x, mod(k - i, x))));
    edges.push_back(make_edge(flatten(2, x, k), flatten(0, x, mod(k - j, x))));
  }
  return TwoFactor::from_edges(3 * x, edges);
}

FixedPointMap phi_map(int x, int s) {
  require_odd(x, "x");
  require_moved_count(s, x);
  FixedPointMap f;
  f.mode = FixedPointMap::Mode::Difference;
  f.modulus = x;
  f.fixed_count = x - s;
  f.map.resize(x);
  for (int i = 0; i < x; ++i) f.map[i] = piecewise_image(i, s);
  if (auto bad = check_fixed_point_map(f)) throw InternalError("phi map invalid: " + *bad);
  return f;
}

Decomposition decompose_kx3_odd(int x, int s) {
  const FixedPointMap phi = phi_map(x, s);
  Decomposition d;
  d.graph = GraphSpec::equipartite(x, 3);
  d.m = 3;
  d.n = 3 * x;
  d.r = x - s;
  d.s = s;
  for (int i = 0; i < x; ++i) d.factors.push_back(difference_factor(x, i, phi.map[i]));
  return checked(std::move(d), "K_(x:3) odd decomposition");
}

// ---- K_(4:3) -----------------------------------------------------------

const std::array<GammaRow, 4>& gamma_rows(int i) {
  static const std::array<std::array<GammaRow, 4>, 4> kRows = {{
      {{{0, 0, 0}, {1, 3, 2}, {2, 1, 3}, {3, 2, 1}}},
      {{{1, 1, 1}, {0, 2, 3}, {2, 3, 0}, {3, 0, 2}}},
      {{{2, 2, 2}, {1, 0, 3}, {0, 3, 1}, {3, 1, 0}}},
      {{{3, 3, 3}, {1, 2, 0}, {2, 0, 1}, {0, 1, 2}}},
  }};
  require_index(i, 4, "gamma index");
  return kRows[i];
}

TwoFactor gamma(int i) {
  std::vector<Cycle> cycles;
  for (const auto& row : gamma_rows(i))
    cycles.emplace_back(std::vector<Vertex>{flatten(0, 4, row[0]), flatten(1, 4, row[1]), flatten(2, 4, row[2])});
  return TwoFactor(12, 3, std::move(cycles));
}

TwoFactor lambda_factor(int alpha, int beta) {
  std::vector<Edge> edges;
  for (const auto& row : gamma_rows(alpha)) {
    edges.push_back(make_edge(flatten(0, 4, row[0]), flatten(1, 4, row[1])));
    edges.push_back(make_edge(flatten(1, 4, row[1]), flatten(2, 4, row[2])));
  }
  for (const auto& row : gamma_rows(beta)) edges.push_back(make_edge(flatten(2, 4, row[2]), flatten(0, 4, row[0])));
  return TwoFactor::from_edges(12, edges);
}

Decomposition decompose_k43(int s) {
  // Each entry replaces gamma(alpha) by lambda(alpha, partner[alpha]).
  std::array<int, 4> partner{0, 1, 2, 3};
  switch (s) {
    case 0:
      break;
    case 2:
      partner = {1, 0, 2, 3};
      break;
    case 3:
      partner = {1, 2, 0, 3};
      break;
    case 4:
      partner = {1, 2, 3, 0};
      break;
    default:
      throw ParameterError("K_(4:3) decomposition needs s in {0,2,3,4}, got " + std::to_string(s));
  }
  Decomposition d;
  d.graph = GraphSpec::equipartite(4, 3);
  d.m = 3;
  d.n = 6;
  d.r = 4 - s;
  d.s = s;
  for (int a = 0; a < 4; ++a) d.factors.push_back(partner[a] == a ? gamma(a) : lambda_factor(a, partner[a]));
  return checked(std::move(d), "K_(4:3) decomposition");
}

// ---- K_(4x':3) ----------------------------------------------------------

namespace {

struct WeightedEdges {
  std::vector<Edge> g01, g12, g20;
};

WeightedEdges weighted_triangle_edges(int xbar, int alpha, int i) {
  WeightedEdges out;
  for (const auto& row : gamma_rows(alpha)) {
    for (int k = 0; k < xbar; ++k) {
      const Vertex p0 = weighted_k43_vertex(xbar, 0, row[0], k);
      const Vertex p1 = weighted_k43_vertex(xbar, 1, row[1], mod(k + 2 * i, xbar));
      const Vertex p2 = weighted_k43_vertex(xbar, 2, row[2], mod(k + i, xbar));
      out.g01.push_back(make_edge(p0, p1));
      out.g12.push_back(make_edge(p1, p2));
      out.g20.push_back(make_edge(p2, p0));
    }
  }
  return out;
}

}  // namespace

TwoFactor weighted_triangle_factor(int xbar, int alpha, int i) {
  require_odd(xbar, "x'");
  require_index(alpha, 4, "alpha");
  require_index(i, xbar, "i");
  std::vector<Cycle> cycles;
  for (const auto& row : gamma_rows(alpha))
    for (int k = 0; k < xbar; ++k)
      cycles.emplace_back(std::vector<Vertex>{weighted_k43_vertex(xbar, 0, row[0], k),
                                              weighted_k43_vertex(xbar, 1, row[1], mod(k + 2 * i, xbar)),
                                              weighted_k43_vertex(xbar, 2, row[2], mod(k + i, xbar))});
  return TwoFactor(12 * xbar, 3, std::move(cycles));
}

TwoFactor weighted_exchange_factor(int xbar, int alpha, int i, int beta, int j) {
  require_odd(xbar, "x'");
  require_index(alpha, 4, "alpha");
  require_index(beta, 4, "beta");
  require_index(i, xbar, "i");
  require_index(j, xbar, "j");
  if (alpha == beta && i == j) return weighted_triangle_factor(xbar, alpha, i);
  auto own = weighted_triangle_edges(xbar, alpha, i);
  auto other = weighted_triangle_edges(xbar, beta, j);
  std::vector<Edge> edges = std::move(own.g01);
  edges.insert(edges.end(), own.g12.begin(), own.g12.end());
  edges.insert(edges.end(), other.g20.begin(), other.g20.end());
  return TwoFactor::from_edges(12 * xbar, edges);
}

std::optional<std::array<int, 4>> psi_split(int xbar, int s) {
  std::array<int, 4> split{0, 0, 0, 0};
  int rem = s;
  for (int k = 0; k < 4 && rem > 0; ++k) {
    int take = std::min(rem, xbar);
    if (take == 1) take = 0;
    if (rem - take == 1 && take >= 3) --take;
    split[k] = take;
    rem -= take;
  }
  if (rem != 0) return std::nullopt;
  return split;
}

FixedPointMap psi_piecewise(int xbar, const std::array<int, 4>& split) {
  FixedPointMap f;
  f.mode = FixedPointMap::Mode::Pair;
  f.modulus = xbar;
  f.map.assign(4 * xbar, 0);
  int moved = 0;
  for (int m = 0; m < 4; ++m) {
    if (split[m] < 0 || split[m] > xbar || split[m] == 1)
      throw ParameterError("diagonal split entry " + std::to_string(split[m]) + " not in {0,2,...,x'}");
    moved += split[m];
    for (int i = 0; i < xbar; ++i) {
      const int j = piecewise_image(i, split[m]);
      f.map[mod(i + m, 4) * xbar + i] = mod(j + m, 4) * xbar + j;
    }
  }
  f.fixed_count = 4 * xbar - moved;
  return f;
}

namespace {

// Backtracking over pair maps: the first s pairs (in flat order) move, each
// to the nearest admissible pair ahead of it.
bool search_pair_map(int xbar, int s, std::vector<int>& map, std::vector<char>& used, int p) {
  const int size = 4 * xbar;
  if (p == s) return true;
  for (int d = 1; d < size; ++d) {
    const int q = (p + d) % size;
    if (q >= s || used[q]) continue;
    const int a = p / xbar, i = p % xbar, b = q / xbar, j = q % xbar;
    if (a == b || gcd_int(xbar, mod(i - j, xbar)) != 1) continue;
    used[q] = 1;
    map[p] = q;
    if (search_pair_map(xbar, s, map, used, p + 1)) return true;
    used[q] = 0;
  }
  return false;
}

}  // namespace

PsiResult psi_map(int xbar, int s) {
  require_odd(xbar, "x'");
  require_moved_count(s, 4 * xbar);
  PsiResult out;
  if (auto split = psi_split(xbar, s)) {
    out.split = *split;
    out.map = psi_piecewise(xbar, *split);
    if (!check_fixed_point_map(out.map)) return out;
  }
  out.searched = true;
  out.split = {0, 0, 0, 0};
  out.map.mode = FixedPointMap::Mode::Pair;
  out.map.modulus = xbar;
  out.map.fixed_count = 4 * xbar - s;
  out.map.map.resize(4 * xbar);
  std::iota(out.map.map.begin(), out.map.map.end(), 0);
  std::vector<char> used(4 * xbar, 0);
  if (!search_pair_map(xbar, s, out.map.map, used, 0))
    throw ParameterError("no pair map with " + std::to_string(s) + " moved points for x'=" + std::to_string(xbar));
  if (auto bad = check_fixed_point_map(out.map)) throw InternalError("searched pair map invalid: " + *bad);
  return out;
}

Decomposition decompose_k4x3(int xbar, int s) {
  const PsiResult psi = psi_map(xbar, s);
  Decomposition d;
  d.graph = GraphSpec::equipartite(4 * xbar, 3);
  d.m = 3;
  d.n = 6 * xbar;
  d.r = 4 * xbar - s;
  d.s = s;
  for (int p = 0; p < 4 * xbar; ++p) {
    const int q = psi.map.map[p];
    d.factors.push_back(weighted_exchange_factor(xbar, p / xbar, p % xbar, q / xbar, q % xbar));
  }
  return checked(std::move(d), "K_(4x':3) decomposition");
}

}  // namespace hwp
