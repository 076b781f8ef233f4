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

#include <filesystem>
#include <optional>
#include <string>

#include "hwp/search.hpp"
#include "hwp/types.hpp"

// Small designs consumed by the composer: a theory gate, a catalog of direct
// constructions, the search oracle, and an on-disk cache.

namespace hwp {

enum class IngredientKind { Design, Rgdd };

/// A 2-factorization of `graph` into r C_m-factors and s C_n-factors
/// (Design), or a 3-RGDD(h^u) (Rgdd). Uniform factorizations use m == n,
/// s == 0.
struct IngredientKey {
  IngredientKind kind = IngredientKind::Design;
  GraphSpec graph;
  int m = 3, n = 3, r = 0, s = 0;
  int h = 0, u = 0;

  static IngredientKey design(const GraphSpec& g, int m, int n, int r, int s);
  /// (m,n)-HWP(v; r, s) on K_v or K_v - F.
  static IngredientKey base_hwp(int v, int m, int n, int r, int s);
  static IngredientKey kts(int v);
  static IngredientKey equipartite_fact(int h, int u, int m);
  static IngredientKey rgdd(int h, int u);

  /// Stable, filename-safe identifier.
  std::string id() const;
  bool operator==(const IngredientKey&) const = default;
};

enum class NotFoundReason {
  None,
  InfeasibleByTheory,  // a cited existence clause rules it out
  SearchNonexistent,   // complete enumeration found nothing
  BudgetExhausted,
  OutOfReach,          // too large for the search and not in the catalog
};

const char* to_string(NotFoundReason r);

struct Ingredient {
  std::optional<Decomposition> design;
  std::optional<Rgdd> rgdd;
  NotFoundReason reason = NotFoundReason::None;
  std::string detail;  // clause or search summary
  std::string source;  // cache | catalog | oracle

  bool found() const { return design.has_value() || rgdd.has_value(); }
};

enum class BaseStatus { Exists, Nonexistent, Open };

/// Known status of a (3, v)-HWP(v; r, s) on K_v or K_v - F (for v in {6, 12}
/// the (3,6) rows, which coincide).
BaseStatus hamilton_base_status(int v, int s);
const char* to_string(BaseStatus s);

/// The existence clause that rules `key` out, if any.
std::optional<std::string> theory_infeasible(const IngredientKey& key);

/// Cache, then theory, then catalog, then search. Everything returned is
/// verified; found objects and certified nonexistence are cached.
Ingredient get(const IngredientKey& key, const SearchBudget& budget);

/// get() for an Rgdd key.
Ingredient rgdd3(int h, int u, const SearchBudget& budget);

/// Hamilton decomposition of K_v, v odd (Walecki).
Decomposition walecki(int v);
/// Hamilton decomposition of K_v - F, v even: zigzag paths on Z_{v-1} closed
/// through a point at infinity; F is what remains.
Decomposition zigzag_minus_f(int v);

/// A triangle factorization of K_(h:u) read as a 3-RGDD and back.
Rgdd rgdd_from_factorization(const Decomposition& d);
Decomposition factorization_from_rgdd(const Rgdd& g);

/// Cache directory for `budget`: budget.cache_root, else $HWP_CACHE, else none.
std::optional<std::filesystem::path> cache_root(const SearchBudget& budget);

/// Drops the in-process memo (tests use this to force cold lookups).
void clear_memo();

}  // namespace hwp
