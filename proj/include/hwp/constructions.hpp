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

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hwp/types.hpp"

// Difference-method factorizations of K_(x:3) (x odd) and K_(4x':3) (x' odd).
//
// Vertex (part a, index b) of K_(w:3) has flat id a*w + b. An edge from part
// a to part a+1 (mod 3) has difference (head index - tail index) mod w along
// the orientation 0->1, 1->2, 2->0.

namespace hwp {

int gcd_int(int a, int b);

/// A permutation with a designated number of fixed points. Difference mode
/// acts on Z_x; pair mode acts on Z_4 x Z_x' with pair (a, i) stored at
/// a*x' + i.
struct FixedPointMap {
  enum class Mode { Difference, Pair };

  Mode mode = Mode::Difference;
  int modulus = 0;  // x (difference mode) or x' (pair mode)
  std::vector<int> map;
  int fixed_count = 0;

  int domain_size() const { return static_cast<int>(map.size()); }
};

/// Empty when `f` satisfies its mode's invariants: a bijection with
/// fixed_count fixed points whose moved points all give Hamiltonian/long-cycle
/// factors (gcd condition; in pair mode also a change of the first coordinate).
std::optional<std::string> check_fixed_point_map(const FixedPointMap& f);

// ---- odd x ---------------------------------------------------------------

/// Triangles {(0,k), (1,k+2i), (2,k+i)} for k in Z_x.
TwoFactor triangle_factor(int x, int i);

/// Differences 2i (G0->G1), -i (G1->G2), -j (G2->G0). Has gcd(x, i-j) cycles
/// of length 3x/gcd(x, i-j).
TwoFactor difference_factor(int x, int i, int j);

/// Piecewise bijection of Z_x with x-s fixed points and |i - phi(i)| in {1, 2}
/// on the moved points. s must be in {0, 2, 3, ..., x}.
FixedPointMap phi_map(int x, int s);

/// K_(x:3) into s Hamilton cycles and x-s triangle factors; factor i is
/// difference_factor(x, i, phi(i)).
Decomposition decompose_kx3_odd(int x, int s);

// ---- K_(4:3) and its blow-ups ---------------------------------------------

/// One triangle (0,b[0]), (1,b[1]), (2,b[2]) of K_(4:3). Its G2-G0 edge is the
/// "dashed" one that the exchange constructions swap.
using GammaRow = std::array<int, 3>;

/// The four triangles of the fixed C_3-factorization factor gamma(i) of K_(4:3).
const std::array<GammaRow, 4>& gamma_rows(int i);
TwoFactor gamma(int i);

/// G0-G1 and G1-G2 edges of gamma(alpha), G2-G0 edges of gamma(beta). A
/// C_6-factor when alpha != beta.
TwoFactor lambda_factor(int alpha, int beta);

/// K_(4:3) into s C_6-factors and 4-s triangle factors, s in {0, 2, 3, 4}.
Decomposition decompose_k43(int s);

/// Flat id of (part a, gamma row b, weight coordinate k) in K_(4x':3).
inline Vertex weighted_k43_vertex(int xbar, int a, int b, int k) { return a * 4 * xbar + b * xbar + k; }

/// Triangle factor of K_(4x':3): each triangle of gamma(alpha) blown up by
/// weight x' and filled with triangle_factor(x', i).
TwoFactor weighted_triangle_factor(int xbar, int alpha, int i);

/// weighted_triangle_factor(x', alpha, i) with its G2-G0 edges replaced by
/// those of weighted_triangle_factor(x', beta, j).
TwoFactor weighted_exchange_factor(int xbar, int alpha, int i, int beta, int j);

struct PsiResult {
  FixedPointMap map;
  std::array<int, 4> split{};  // moved points per diagonal (piecewise path)
  bool searched = false;       // true when the piecewise rule failed validation
};

/// The per-diagonal split chosen greedily from {0, 2, ..., x'}.
std::optional<std::array<int, 4>> psi_split(int xbar, int s);

/// Piecewise pair bijection for an explicit split, without validation.
FixedPointMap psi_piecewise(int xbar, const std::array<int, 4>& split);

/// Pair-mode map with 4x'-s fixed points. Uses the piecewise diagonal rule;
/// falls back to a deterministic backtracking search when that rule does not
/// validate (always the case for x' = 1).
PsiResult psi_map(int xbar, int s);

/// K_(4x':3) into s C_{6x'}-factors and 4x'-s triangle factors; factor
/// (alpha, i) is the exchange factor toward psi(alpha, i).
Decomposition decompose_k4x3(int xbar, int s);

}  // namespace hwp
