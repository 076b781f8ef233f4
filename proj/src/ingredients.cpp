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

#include "hwp/ingredients.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include "hwp/constructions.hpp"
#include "hwp/text_format.hpp"
#include "hwp/verify.hpp"
#include "tabulated.hpp"

namespace hwp {

namespace {

std::mutex g_memo_mutex;
std::map<std::string, Ingredient> g_memo;
std::mutex g_disk_mutex;

int mod(int a, int b) { return ((a % b) + b) % b; }

std::string graph_id(const GraphSpec& g) {
  switch (g.kind) {
    case GraphKind::Complete:
      return "K" + std::to_string(g.v);
    case GraphKind::CompleteMinusOneFactor:
      return "K" + std::to_string(g.v) + "-F";
    case GraphKind::Equipartite:
      return "K" + std::to_string(g.h) + "x" + std::to_string(g.u);
  }
  return "?";
}

bool uniform(const IngredientKey& k) { return k.r == 0 || k.s == 0 || k.m == k.n; }

int uniform_length(const IngredientKey& k) { return k.s == 0 ? k.m : (k.r == 0 ? k.n : k.m); }

bool is_complete_or_minus(const GraphSpec& g) {
  return g.kind == GraphKind::Complete ? g.v % 2 == 1
                                       : g.kind == GraphKind::CompleteMinusOneFactor;
}

std::optional<std::string> basic_infeasible(const IngredientKey& k) {
  const GraphSpec& g = k.graph;
  if (k.m < 3 || k.n < 3 || k.r < 0 || k.s < 0) return "cycle lengths below 3 or negative factor counts";
  const int deg = g.two_factor_degree();
  if (deg % 2 == 1) return "every vertex needs even degree once F is removed";
  if (2 * (k.r + k.s) != deg)
    return "factor count r+s must equal " + std::to_string(deg / 2) + " for " + g.describe();
  if (k.r > 0 && g.v % k.m != 0) return "m must divide v";
  if (k.s > 0 && g.v % k.n != 0) return "n must divide v";
  return std::nullopt;
}

// Uniform C_L-factorizations.
std::optional<std::string> uniform_infeasible(const GraphSpec& g, int len) {
  if (g.kind == GraphKind::Equipartite) {
    const int h = g.h, u = g.u;
    if ((h * u) % len != 0) return "C_L-factorization of K_(h:u) needs L | hu";
    if ((h * (u - 1)) % 2 != 0) return "C_L-factorization of K_(h:u) needs h(u-1) even";
    if (u == 2 && len % 2 != 0) return "C_L-factorization of K_(h:2) needs L even";
    const int bad[][3] = {{2, 3, 3}, {6, 3, 3}, {2, 6, 3}, {6, 2, 6}};
    for (const auto& b : bad)
      if (h == b[0] && u == b[1] && len == b[2])
        return "no C_" + std::to_string(len) + "-factorization of K_(" + std::to_string(h) + ":" +
               std::to_string(u) + ") (known excluded case)";
    return std::nullopt;
  }
  if (g.v % len != 0) return "C_L-factorization of K_v needs L | v";
  if (len == 3 && (g.v == 6 || g.v == 12))
    return "no C_3-factorization of K_" + std::to_string(g.v) + "-F (v in {6,12})";
  return std::nullopt;
}

Ingredient not_found(NotFoundReason why, std::string detail) {
  Ingredient out;
  out.reason = why;
  out.detail = std::move(detail);
  return out;
}

Decomposition require_valid(Decomposition d, const char* what) {
  auto rep = verify(d);
  if (!rep) throw InternalError(std::string(what) + " failed verification: " + rep.violation);
  return d;
}

Ingredient wrap(const IngredientKey& key, Decomposition d, std::string source) {
  Ingredient out;
  out.source = std::move(source);
  if (key.kind == IngredientKind::Rgdd) {
    out.rgdd = rgdd_from_factorization(d);
  } else {
    out.design = std::move(d);
  }
  return out;
}

// Relabels a triangle factorization into the canonical (m, n, r, s) of `key`.
Decomposition as_key(const IngredientKey& key, Decomposition d) {
  d.m = key.kind == IngredientKind::Rgdd ? 3 : key.m;
  d.n = key.kind == IngredientKind::Rgdd ? 3 : key.n;
  return d;
}

std::optional<Decomposition> catalog(const IngredientKey& key) {
  const GraphSpec& g = key.graph;
  if (key.kind == IngredientKind::Rgdd) {
    if (key.u == 3 && key.h % 2 == 1) {
      auto d = decompose_kx3_odd(key.h, 0);
      return as_key(key, std::move(d));
    }
    if (key.u == 3 && key.h % 4 == 0 && (key.h / 4) % 2 == 1) return as_key(key, decompose_k4x3(key.h / 4, 0));
    return std::nullopt;
  }
  if (const char* text = detail::tabulated_design(key.id())) return as_key(key, parse_text(text));
  if (!uniform(key)) return std::nullopt;
  const int len = uniform_length(key);
  Decomposition d;
  if (g.kind == GraphKind::Complete && g.v % 2 == 1 && len == g.v) {
    d = walecki(g.v);
  } else if (g.kind == GraphKind::CompleteMinusOneFactor && len == g.v) {
    d = zigzag_minus_f(g.v);
  } else if (g.kind == GraphKind::Equipartite && g.u == 3 && g.h % 2 == 1 && (len == 3 || len == 3 * g.h)) {
    d = decompose_kx3_odd(g.h, len == 3 ? 0 : g.h);
  } else if (g.kind == GraphKind::Equipartite && g.u == 3 && g.h % 4 == 0 && (g.h / 4) % 2 == 1 &&
             (len == 3 || len == 3 * g.h / 2)) {
    d = decompose_k4x3(g.h / 4, len == 3 ? 0 : g.h);
  } else {
    return std::nullopt;
  }
  d.m = key.m;
  d.n = key.n;
  d.r = len == key.m ? static_cast<int>(d.factors.size()) : 0;
  d.s = static_cast<int>(d.factors.size()) - d.r;
  if (key.m == key.n) {
    d.r = key.r;
    d.s = key.s;
  }
  return d;
}

std::filesystem::path file_for(const std::filesystem::path& root, const IngredientKey& key) {
  return root / (key.id() + ".hwp");
}

std::optional<std::string> load_infeasible(const std::filesystem::path& root, const std::string& id) {
  std::ifstream in(root / "infeasible.txt");
  std::string line;
  while (std::getline(in, line)) {
    auto tab = line.find('\t');
    if (tab != std::string::npos && line.compare(0, tab, id) == 0 && tab == id.size()) return line.substr(tab + 1);
  }
  return std::nullopt;
}

void atomic_write(const std::filesystem::path& path, const std::string& text) {
  std::filesystem::create_directories(path.parent_path());
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << text;
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

void store_infeasible(const std::filesystem::path& root, const std::string& id, const std::string& clause) {
  std::lock_guard lock(g_disk_mutex);
  if (load_infeasible(root, id)) return;
  std::string text;
  {
    std::ifstream in(root / "infeasible.txt", std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  std::string entry = clause;
  std::replace(entry.begin(), entry.end(), '\n', ' ');
  std::replace(entry.begin(), entry.end(), '\t', ' ');
  text += id + "\t" + entry + "\n";
  atomic_write(root / "infeasible.txt", text);
}

void store_found(const std::filesystem::path& root, const IngredientKey& key, const Ingredient& ing) {
  std::lock_guard lock(g_disk_mutex);
  const Decomposition d = ing.design ? *ing.design : factorization_from_rgdd(*ing.rgdd);
  atomic_write(file_for(root, key), to_text(d));
}

// Reads a cached object; a file that fails to parse or verify is ignored.
std::optional<Decomposition> load_found(const std::filesystem::path& root, const IngredientKey& key) {
  const auto path = file_for(root, key);
  if (!std::filesystem::exists(path)) return std::nullopt;
  try {
    Decomposition d = read_file(path);
    if (!verify(d)) return std::nullopt;
    if (key.kind == IngredientKind::Design &&
        (d.graph != key.graph || d.m != key.m || d.n != key.n || d.r != key.r || d.s != key.s))
      return std::nullopt;
    if (key.kind == IngredientKind::Rgdd && d.graph != GraphSpec::equipartite(key.h, key.u)) return std::nullopt;
    return d;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

Ingredient compute(const IngredientKey& key, const SearchBudget& budget) {
  if (auto why = theory_infeasible(key)) return not_found(NotFoundReason::InfeasibleByTheory, *why);
  if (auto d = catalog(key)) {
    auto checked = require_valid(std::move(*d), "catalog construction");
    return wrap(key, std::move(checked), "catalog");
  }
  const GraphSpec g = key.kind == IngredientKind::Rgdd ? GraphSpec::equipartite(key.h, key.u) : key.graph;
  if (g.v > 64) return not_found(NotFoundReason::OutOfReach, "v=" + std::to_string(g.v) + " exceeds the search range");
  SearchResult res = key.kind == IngredientKind::Rgdd
                         ? search_oracle(g, 3, 3, key.h * (key.u - 1) / 2, 0, budget)
                         : search_oracle(g, key.m, key.n, key.r, key.s, budget);
  switch (res.status) {
    case SearchStatus::Found:
      return wrap(key, as_key(key, std::move(*res.decomposition)), "oracle");
    case SearchStatus::Nonexistent:
      return not_found(NotFoundReason::SearchNonexistent, "search: " + res.detail);
    case SearchStatus::BudgetExhausted:
      break;
  }
  return not_found(NotFoundReason::BudgetExhausted, "search: " + res.detail);
}

}  // namespace

IngredientKey IngredientKey::design(const GraphSpec& g, int m, int n, int r, int s) {
  IngredientKey k;
  k.kind = IngredientKind::Design;
  k.graph = g;
  k.m = m;
  k.n = n;
  k.r = r;
  k.s = s;
  return k;
}

IngredientKey IngredientKey::base_hwp(int v, int m, int n, int r, int s) {
  return design(GraphSpec::complete_or_minus(v), m, n, r, s);
}

IngredientKey IngredientKey::kts(int v) { return design(GraphSpec::complete(v), 3, 3, (v - 1) / 2, 0); }

IngredientKey IngredientKey::equipartite_fact(int h, int u, int m) {
  const GraphSpec g = GraphSpec::equipartite(h, u);
  return design(g, m, m, g.two_factor_degree() / 2, 0);
}

IngredientKey IngredientKey::rgdd(int h, int u) {
  IngredientKey k;
  k.kind = IngredientKind::Rgdd;
  k.h = h;
  k.u = u;
  k.graph = GraphSpec{GraphKind::Equipartite, h * u, h, u};
  k.m = k.n = 3;
  k.r = h * (u - 1) / 2;
  return k;
}

std::string IngredientKey::id() const {
  if (kind == IngredientKind::Rgdd) return "rgdd3_" + std::to_string(h) + "^" + std::to_string(u);
  std::ostringstream os;
  os << "hwp_" << graph_id(graph) << "_m" << m << "_n" << n << "_r" << r << "_s" << s;
  return os.str();
}

const char* to_string(NotFoundReason r) {
  switch (r) {
    case NotFoundReason::None:
      return "none";
    case NotFoundReason::InfeasibleByTheory:
      return "infeasible-by-theory";
    case NotFoundReason::SearchNonexistent:
      return "search-exhausted";
    case NotFoundReason::BudgetExhausted:
      return "budget-exhausted";
    case NotFoundReason::OutOfReach:
      return "out-of-reach";
  }
  return "?";
}

BaseStatus hamilton_base_status(int v, int s) {
  if (v < 3 || s < 0 || s > factor_count_for(v)) return BaseStatus::Nonexistent;
  if (s == 0) return (v % 3 == 0 && v != 6 && v != 12) ? BaseStatus::Exists : BaseStatus::Nonexistent;
  if (v % 3 != 0) return BaseStatus::Nonexistent;
  if (v == 6) return BaseStatus::Exists;
  if (v == 12) return BaseStatus::Exists;
  if (v % 2 == 1) {
    if (s == 1) {
      if (v == 9) return BaseStatus::Nonexistent;
      return (v >= 93 && v <= 249) ? BaseStatus::Open : BaseStatus::Exists;
    }
    if (v % 18 == 15 && (s <= (v - 3) / 6 || s == (v + 3) / 6 + 1)) return BaseStatus::Open;
    return BaseStatus::Exists;
  }
  if (s == 1) return (v == 18 || v % 18 == 12 || v % 36 == 6) ? BaseStatus::Open : BaseStatus::Exists;
  if (v == 36 && (s == 2 || s == 4)) return BaseStatus::Open;
  if (v % 18 == 12 && s <= v / 6 - 1) return BaseStatus::Open;
  return BaseStatus::Exists;
}

const char* to_string(BaseStatus s) {
  switch (s) {
    case BaseStatus::Exists:
      return "exists";
    case BaseStatus::Nonexistent:
      return "nonexistent";
    case BaseStatus::Open:
      return "open";
  }
  return "?";
}

std::optional<std::string> theory_infeasible(const IngredientKey& key) {
  if (key.kind == IngredientKind::Rgdd) {
    const int h = key.h, u = key.u;
    if (h < 1 || u < 3 || (h * (u - 1)) % 2 != 0 || (h * u) % 3 != 0 || (h == 2 && u == 6) || (h == 6 && u == 3))
      return "3-RGDD(h^u) needs u >= 3, h(u-1) even, 3 | hu and (h,u) not in {(2,6),(6,3)}";
    return std::nullopt;
  }
  if (auto why = basic_infeasible(key)) return why;
  if (uniform(key)) return uniform_infeasible(key.graph, uniform_length(key));
  if (key.m == 3 && is_complete_or_minus(key.graph)) {
    const int v = key.graph.v;
    const bool small = (v == 6 || v == 12) && key.n == 6;
    if ((key.n == v || small) && hamilton_base_status(v, key.s) == BaseStatus::Nonexistent)
      return "no (3," + std::to_string(key.n) + ")-HWP(" + std::to_string(v) + "; " + std::to_string(key.r) + ", " +
             std::to_string(key.s) + ") (excluded base case)";
  }
  return std::nullopt;
}

std::optional<std::filesystem::path> cache_root(const SearchBudget& budget) {
  if (!budget.cache_root.empty()) return std::filesystem::path(budget.cache_root);
  if (const char* env = std::getenv("HWP_CACHE"); env && *env) return std::filesystem::path(env);
  return std::nullopt;
}

void clear_memo() {
  std::lock_guard lock(g_memo_mutex);
  g_memo.clear();
}

Ingredient get(const IngredientKey& key, const SearchBudget& budget) {
  const std::string id = key.id();
  const auto root = cache_root(budget);
  const std::string memo_id = (root ? root->string() : std::string()) + "|" + id;
  {
    std::lock_guard lock(g_memo_mutex);
    if (auto it = g_memo.find(memo_id); it != g_memo.end()) return it->second;
  }
  Ingredient out;
  bool from_disk = false;
  if (root) {
    if (auto d = load_found(*root, key)) {
      out = wrap(key, as_key(key, std::move(*d)), "cache");
      from_disk = true;
    } else if (auto clause = load_infeasible(*root, id)) {
      const bool searched = clause->starts_with("search:");
      out = not_found(searched ? NotFoundReason::SearchNonexistent : NotFoundReason::InfeasibleByTheory, *clause);
      out.source = "cache";
      from_disk = true;
    }
  }
  if (!from_disk) {
    out = compute(key, budget);
    if (root) {
      if (out.found())
        store_found(*root, key, out);
      else if (out.reason == NotFoundReason::InfeasibleByTheory || out.reason == NotFoundReason::SearchNonexistent)
        store_infeasible(*root, id, out.detail);
    }
  }
  if (out.found() || out.reason == NotFoundReason::InfeasibleByTheory ||
      out.reason == NotFoundReason::SearchNonexistent) {
    std::lock_guard lock(g_memo_mutex);
    g_memo.emplace(memo_id, out);
  }
  return out;
}

Ingredient rgdd3(int h, int u, const SearchBudget& budget) { return get(IngredientKey::rgdd(h, u), budget); }

Decomposition walecki(int v) {
  if (v < 3 || v % 2 == 0) throw ParameterError("Walecki decomposition needs odd v >= 3");
  const int ring = v - 1;  // points 0..v-2 on a circle, v-1 at the centre
  Decomposition d;
  d.graph = GraphSpec::complete(v);
  d.m = d.n = v;
  d.r = (v - 1) / 2;
  for (int i = 0; i < d.r; ++i) {
    std::vector<Vertex> c{static_cast<Vertex>(v - 1), static_cast<Vertex>(i)};
    for (int j = 1; static_cast<int>(c.size()) < v; ++j) {
      c.push_back(mod(i + j, ring));
      if (static_cast<int>(c.size()) < v) c.push_back(mod(i - j, ring));
    }
    d.factors.emplace_back(v, v, std::vector<Cycle>{Cycle(std::move(c))});
  }
  return require_valid(std::move(d), "Walecki decomposition");
}

Decomposition zigzag_minus_f(int v) {
  if (v < 4 || v % 2 == 1) throw ParameterError("zigzag decomposition needs even v >= 4");
  const int ring = v - 1;
  const int k = v / 2;
  Decomposition d;
  d.graph = GraphSpec::minus_one_factor(v);
  d.m = d.n = v;
  d.r = k - 1;
  for (int i = 0; i < k - 1; ++i) {
    std::vector<Vertex> c{static_cast<Vertex>(v - 1), static_cast<Vertex>(i)};
    for (int j = 1; j < k; ++j) {
      c.push_back(mod(i + j, ring));
      c.push_back(mod(i - j, ring));
    }
    d.factors.emplace_back(v, v, std::vector<Cycle>{Cycle(std::move(c))});
  }
  // Pairs summing to -1 are the only ones no path uses; k-1 pairs with the centre.
  std::vector<Edge> f{make_edge(k - 1, v - 1)};
  for (int a = 0; a < ring; ++a) {
    const int b = mod(-1 - a, ring);
    if (a < b) f.push_back(make_edge(a, b));
  }
  d.one_factor = OneFactor::from_edges(std::move(f));
  return require_valid(std::move(d), "zigzag decomposition");
}

Rgdd rgdd_from_factorization(const Decomposition& d) {
  if (d.graph.kind != GraphKind::Equipartite) throw ParameterError("an RGDD needs an equipartite host");
  Rgdd g;
  g.h = d.graph.h;
  g.u = d.graph.u;
  for (int p = 0; p < g.u; ++p) {
    std::vector<Vertex> grp(g.h);
    for (int k = 0; k < g.h; ++k) grp[k] = p * g.h + k;
    g.groups.push_back(std::move(grp));
  }
  for (const auto& f : d.factors) {
    if (f.cycle_length() != 3) throw ParameterError("an RGDD needs triangle factors");
    std::vector<Rgdd::Triple> cls;
    for (const auto& c : f.cycles()) {
      Rgdd::Triple t{c.vertices()[0], c.vertices()[1], c.vertices()[2]};
      std::sort(t.begin(), t.end());
      cls.push_back(t);
    }
    std::sort(cls.begin(), cls.end());
    g.classes.push_back(std::move(cls));
  }
  if (auto why = check_rgdd(g)) throw InternalError("factorization is not an RGDD: " + *why);
  return g;
}

Decomposition factorization_from_rgdd(const Rgdd& g) {
  if (auto why = check_rgdd(g)) throw ParameterError("invalid RGDD: " + *why);
  // Relabel so that group p holds points p*h .. p*h+h-1.
  std::vector<Vertex> label(g.points());
  for (int p = 0; p < g.u; ++p)
    for (int k = 0; k < g.h; ++k) label[g.groups[p][k]] = p * g.h + k;
  Decomposition d;
  d.graph = GraphSpec::equipartite(g.h, g.u);
  d.m = d.n = 3;
  d.r = static_cast<int>(g.classes.size());
  for (const auto& cls : g.classes) {
    std::vector<Cycle> cycles;
    for (const auto& t : cls) cycles.emplace_back(std::vector<Vertex>{label[t[0]], label[t[1]], label[t[2]]});
    d.factors.emplace_back(g.points(), 3, std::move(cycles));
  }
  return require_valid(std::move(d), "RGDD factorization");
}

}  // namespace hwp
