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

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hwp/ingredients.hpp"
#include "hwp/search.hpp"
#include "hwp/types.hpp"

// Assembly of (3, 3x)-HWP(3xy; r, s) decompositions from smaller pieces, and
// the planner that picks a construction for each parameter point.

namespace hwp {

/// Weighting over a 3-RGDD: every block of class p carries class_decomps[p]
/// on its blown-up K_(w:3), every group carries group_fill on h*w points.
/// Point a with weight coordinate k becomes a*w + k.
Decomposition weight_main(const Rgdd& rgdd, int w, const std::vector<Decomposition>& class_decomps,
                          const Decomposition& group_fill);

/// As weight_main, but the last parallel class carries last_class_fill on the
/// 3w points of each block and every group carries group_decomp of K_(w:h).
Decomposition weight_main2(const Rgdd& rgdd, int w, const std::vector<Decomposition>& class_decomps,
                           const Decomposition& last_class_fill, const Decomposition& group_decomp);

/// Two copies of `half` (K_{3x} - F into triangle factors and Hamilton
/// cycles) on {0..3x-1} and {3x..6x-1}; factor i of one copy joins factor i of
/// the other, and `cross` (a C_{3x}-factorization of K_(3x:2)) fills the rest.
Decomposition doubling(int x, const Decomposition& half, const Decomposition& cross);

/// Doubling when K_(3x:2) has no C_{3x}-factorization: the paired Hamilton
/// factors and the cross edges are re-split together by the search.
std::optional<Decomposition> doubling_by_search(int x, const Decomposition& half, const SearchBudget& budget);

/// y parts of 3x points, each carrying `part` (K_{3x} - F), plus a uniform
/// factorization `cross` of K_(3x:y).
Decomposition parts_and_cross(int x, int y, const Decomposition& part, const Decomposition& cross);

enum class Strategy { Main, Main2, Double, SmallY, Direct, Oracle };
const char* to_string(Strategy s);

/// How the K_(w:3) block decompositions of a weighting are produced.
enum class ClassMaker {
  OddDifference,  // w = x odd, any s_p in {0,2,..,x}
  EvenDifference, // w = 4*xbar, any s_p in {0,2,..,w}
  AllOrNothing,   // s_p in {0, w}: uniform C_3 or C_{3w} factorization
  Pair,           // w = 2, K_(2:3) with s_p in {1,2}
  Unit,           // w = 1, a single triangle
};

struct Plan {
  Strategy strategy = Strategy::Oracle;
  int x = 0, y = 0, r = 0, s = 0;

  // Weighting (Main, Main2).
  int h = 0, u = 0, w = 0;
  ClassMaker maker = ClassMaker::OddDifference;
  std::vector<int> s_p;
  int s_beta = 0;   // group fill (Main) or last-class fill (Main2)
  int s_gamma = 0;  // K_(w:h) on the groups (Main2)

  // Double and SmallY: per-part Hamilton count and whether the cross
  // factorization is all C_{3x} (1) or all triangles (0).
  int s_part = 0;
  int cross_long = 0;

  std::vector<IngredientKey> ingredients;
  std::string route;   // which construction and why
  std::string bullet;  // non-empty when the point also matches a listed case
};

enum class PlanStatus { Constructible, Exception, Open };
const char* to_string(PlanStatus s);

struct PlanResult {
  PlanStatus status = PlanStatus::Open;
  std::optional<Plan> plan;  // set when Constructible
  std::string bullet;        // governing case for Exception / Open
};

/// The construction for (x, y, r, s). Throws ParameterError when the
/// necessary conditions fail or x, y < 2.
PlanResult plan(int x, int y, int r, int s);

/// The listed possible-exception cases matched by (x, y, s), in list order.
std::vector<std::string> matching_bullets(int x, int y, int s);

struct TableRow {
  int s = 0;
  int r = 0;
  PlanStatus status = PlanStatus::Open;
  std::string note;
};

/// One row per s in [0, floor((3xy-1)/2)].
std::vector<TableRow> table(int x, int y);
std::string format_table(int x, int y, const std::vector<TableRow>& rows);

enum class SolveStatus { Ok, Exception, Open, NotFound };
const char* to_string(SolveStatus s);

struct SolveResult {
  SolveStatus status = SolveStatus::NotFound;
  std::optional<Decomposition> decomposition;
  std::optional<Plan> plan;
  std::string message;  // bullet, missing ingredient, or route summary
};

/// plan, gather ingredients, assemble, verify. Anything returned passes
/// verify.
SolveResult solve(int x, int y, int r, int s, const SearchBudget& budget);

/// Block decomposition of K_(w:3) with s_p C_{3x}-factors for `maker`. Empty
/// when an ingredient is missing; throws ParameterError when `maker` cannot
/// produce s_p.
std::optional<Decomposition> class_decomposition(ClassMaker maker, int w, int x, int s_p, const SearchBudget& budget,
                                                 std::string* missing = nullptr);

}  // namespace hwp
