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

#include "hwp/search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <numeric>

#include "hwp/verify.hpp"

namespace hwp {

namespace {

using Mask = std::uint64_t;
using Clock = std::chrono::steady_clock;

constexpr Mask bit(int i) { return Mask{1} << i; }
inline int low(Mask m) { return std::countr_zero(m); }
inline Mask above(int i) { return i >= 63 ? 0 : ~Mask{0} << (i + 1); }

std::uint64_t splitmix(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

enum class Outcome { Found, Exhausted, Aborted };

// Dancing-links exact cover over primary items only.
class Dlx {
 public:
  explicit Dlx(int items) : items_(items) {
    const int n = items + 1;
    l_.resize(n);
    r_.resize(n);
    u_.resize(n);
    d_.resize(n);
    c_.resize(n);
    row_.assign(n, -1);
    size_.assign(items, 0);
    active_.assign(items, 1);
    for (int i = 0; i <= items; ++i) {
      l_[i] = i == 0 ? items : i - 1;
      r_[i] = i == items ? 0 : i + 1;
      u_[i] = d_[i] = c_[i] = i;
    }
  }

  void add_row(int row, const std::vector<int>& cols) {
    int first = -1;
    for (int col : cols) {
      const int node = static_cast<int>(l_.size());
      l_.push_back(node);
      r_.push_back(node);
      c_.push_back(col);
      row_.push_back(row);
      u_.push_back(u_[col]);
      d_.push_back(col);
      d_[u_[col]] = node;
      u_[col] = node;
      ++size_[col];
      if (first < 0) {
        first = node;
      } else {
        l_[node] = l_[first];
        r_[node] = first;
        r_[l_[first]] = node;
        l_[first] = node;
      }
    }
  }

  bool empty() const { return r_[items_] == items_; }
  bool active(int col) const { return active_[col]; }
  int size(int col) const { return size_[col]; }
  int down(int node) const { return d_[node]; }
  int row(int node) const { return row_[node]; }

  int smallest() const {
    int best = -1;
    for (int col = r_[items_]; col != items_; col = r_[col])
      if (best < 0 || size_[col] < size_[best]) {
        best = col;
        if (size_[col] == 0) break;
      }
    return best;
  }

  void cover(int col) {
    active_[col] = 0;
    l_[r_[col]] = l_[col];
    r_[l_[col]] = r_[col];
    for (int i = d_[col]; i != col; i = d_[i])
      for (int j = r_[i]; j != i; j = r_[j]) {
        u_[d_[j]] = u_[j];
        d_[u_[j]] = d_[j];
        --size_[c_[j]];
      }
  }

  void uncover(int col) {
    for (int i = u_[col]; i != col; i = u_[i])
      for (int j = l_[i]; j != i; j = l_[j]) {
        ++size_[c_[j]];
        u_[d_[j]] = j;
        d_[u_[j]] = j;
      }
    l_[r_[col]] = col;
    r_[l_[col]] = col;
    active_[col] = 1;
  }

  void select(int node) {
    for (int j = r_[node]; j != node; j = r_[j]) cover(c_[j]);
  }
  void unselect(int node) {
    for (int j = l_[node]; j != node; j = l_[j]) uncover(c_[j]);
  }

 private:
  int items_;
  std::vector<int> l_, r_, u_, d_, c_, row_, size_;
  std::vector<char> active_;
};

class Searcher {
 public:
  Searcher(const SearchRequest& req, std::uint64_t seed, std::uint64_t node_limit, Clock::time_point deadline,
           const std::vector<int>& symmetry, std::uint64_t tail_cap)
      : v_(req.host.v), rem_(req.host.adj), fix_first_(req.fix_first_factor), node_limit_(node_limit),
        deadline_(deadline), tail_cap_(tail_cap) {
    if (!symmetry.empty()) {
      std::vector<int> g = symmetry;
      while (g != identity(v_)) {
        group_.push_back(g);
        std::vector<int> next(v_);
        for (int w = 0; w < v_; ++w) next[w] = symmetry[g[w]];
        g = std::move(next);
      }
    }
    // Long cycles first; any triangle factors form the tail.
    const bool n_first = !(req.n == 3 && req.m != 3);
    is_n_.assign(n_first ? req.s : req.r, n_first);
    is_n_.insert(is_n_.end(), n_first ? req.r : req.s, !n_first);
    for (char t : is_n_) len_.push_back(t ? req.n : req.m);
    const int total = static_cast<int>(len_.size());
    key_.assign(total, -1);
    same_tail_.assign(total + 1, 1);
    for (int f = total - 2; f >= 0; --f) same_tail_[f] = len_[f] == len_[f + 1] && same_tail_[f + 1];
    triangle_tail_.assign(total + 1, 1);
    for (int f = total - 1; f >= 0; --f) triangle_tail_[f] = len_[f] == 3 && triangle_tail_[f + 1];
    factors_.assign(total, {});
    order_.resize(total);
    for (int f = 0; f < total; ++f) {
      auto& ord = order_[f];
      ord.resize(v_);
      std::iota(ord.begin(), ord.end(), 0);
      if (seed != 0) {
        std::uint64_t st = seed ^ (0xD1B54A32D192ED03ull * static_cast<std::uint64_t>(f + 1));
        for (int i = v_ - 1; i > 0; --i) std::swap(ord[i], ord[splitmix(st) % static_cast<std::uint64_t>(i + 1)]);
      }
    }
    seeded_ = seed != 0;
  }

  Outcome run() {
    const bool found = factor_step(0);
    if (found) return Outcome::Found;
    return aborted_ || tail_capped_ ? Outcome::Aborted : Outcome::Exhausted;
  }

  std::uint64_t nodes() const { return nodes_; }
  const std::vector<std::vector<std::vector<Vertex>>>& factors() const { return factors_; }
  const std::vector<int>& lengths() const { return len_; }
  bool is_n_type(int f) const { return is_n_[f]; }

 private:
  // Visits the members of `m` in this factor's branch order.
  template <class Fn>
  bool each(int f, Mask m, Fn&& fn) {
    if (!seeded_) {
      while (m) {
        const int x = low(m);
        m &= m - 1;
        if (fn(x)) return true;
        if (aborted_) return false;
      }
      return false;
    }
    for (int x : order_[f]) {
      if (!(m & bit(x))) continue;
      if (fn(x)) return true;
      if (aborted_) return false;
    }
    return false;
  }

  bool tick() {
    ++nodes_;
    if (node_limit_ && nodes_ > node_limit_) aborted_ = true;
    if ((nodes_ & 0x3FF) == 0 && Clock::now() > deadline_) aborted_ = true;
    return !aborted_;
  }

  void remove_cycle(const std::vector<Vertex>& c) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      const int a = c[k], b = c[(k + 1) % c.size()];
      rem_[a] &= ~bit(b);
      rem_[b] &= ~bit(a);
    }
  }
  void restore_cycle(const std::vector<Vertex>& c) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      const int a = c[k], b = c[(k + 1) % c.size()];
      rem_[a] |= bit(b);
      rem_[b] |= bit(a);
    }
  }

  bool matchable(Mask set) const {
    if (!set) return true;
    const int x = low(set);
    Mask rest = set & ~bit(x);
    Mask cand = rem_[x] & rest;
    while (cand) {
      const int y = low(cand);
      cand &= cand - 1;
      if (matchable(rest & ~bit(y))) return true;
    }
    return false;
  }

  // Every vertex's remaining neighbourhood splits into triangle partners.
  bool neighbourhoods_matchable() const {
    for (int w = 0; w < v_; ++w)
      if (!matchable(rem_[w])) return false;
    return true;
  }

  // Bounds on the neighbour of vertex 0 that opens factor f.
  Mask opening_choices(int f) const {
    Mask c = rem_[0];
    if (f > 0 && len_[f - 1] == len_[f] && key_[f - 1] >= 0) c &= above(key_[f - 1]);
    if (same_tail_[f] && rem_[0]) c &= bit(low(rem_[0]));
    return c;
  }

  bool factor_step(int f) {
    if (f == static_cast<int>(len_.size())) return true;
    if (triangle_tail_[f] && !neighbourhoods_matchable()) return false;
    const Mask full = v_ == 64 ? ~Mask{0} : bit(v_) - 1;
    if (f == 0 && fix_first_) {
      const int len = len_[0];
      for (int start = 0; start < v_; start += len) {
        std::vector<Vertex> c(len);
        std::iota(c.begin(), c.end(), start);
        for (int k = 0; k < len; ++k)
          if (!(rem_[c[k]] & bit(c[(k + 1) % len]))) throw InternalError("fixed first factor is not in the host");
        factors_[0].push_back(c);
      }
      for (const auto& c : factors_[0]) remove_cycle(c);
      key_[0] = 1;
      const bool ok = factor_step(1);
      if (!ok) {
        for (const auto& c : factors_[0]) restore_cycle(c);
        factors_[0].clear();
      }
      return ok;
    }
    if (triangle_tail_[f]) return cover_triangles(f);
    return place(f, full);
  }

  // Exact cover for the all-triangle tail: every remaining edge once, every
  // (vertex, factor) slot once. Factor order is fixed by taking vertex 0's
  // slots in order, each through the smallest neighbour of 0 still free.
  bool cover_triangles(int f0) {
    const int tcount = static_cast<int>(len_.size()) - f0;
    // Items are orbits of edges and of vertices under the symmetry group
    // (singletons without one). A row is a triangle orbit whose members are
    // disjoint and cover each orbit they touch exactly once.
    std::vector<int> vorbit(v_), vsize(v_, 0);
    for (int w = 0; w < v_; ++w) {
      vorbit[w] = w;
      for (const auto& g : group_) vorbit[w] = std::min(vorbit[w], g[w]);
    }
    for (int w = 0; w < v_; ++w) ++vsize[vorbit[w]];
    auto edge_key = [&](int a, int b) { return std::min(a, b) * v_ + std::max(a, b); };
    auto edge_rep = [&](int a, int b) {
      int best = edge_key(a, b);
      for (const auto& g : group_) best = std::min(best, edge_key(g[a], g[b]));
      return best;
    };
    std::vector<int> edge_id(static_cast<std::size_t>(v_) * v_, -1);
    std::vector<int> esize(static_cast<std::size_t>(v_) * v_, 0);
    int items = 0;
    for (int a = 0; a < v_; ++a)
      for (Mask it = rem_[a] & above(a); it; it &= it - 1) {
        const int rep = edge_rep(a, low(it));
        if (edge_id[rep] < 0) edge_id[rep] = items++;
        ++esize[rep];
      }
    std::vector<int> slot_id(v_, -1);
    int orbit_count = 0;
    for (int w = 0; w < v_; ++w)
      if (vorbit[w] == w) slot_id[w] = orbit_count++;
    const int slot0 = items;
    items += orbit_count * tcount;

    std::vector<std::vector<std::array<Vertex, 3>>> orbits;
    std::vector<std::vector<int>> orbit_cols;
    for (int a = 0; a < v_; ++a)
      for (Mask it = rem_[a] & above(a); it; it &= it - 1) {
        const int b = low(it);
        for (Mask jt = rem_[a] & rem_[b] & above(b); jt; jt &= jt - 1) {
          const std::array<Vertex, 3> t{a, b, low(jt)};
          std::vector<std::array<Vertex, 3>> orb{t};
          bool rep = true;
          for (const auto& g : group_) {
            std::array<Vertex, 3> u{g[t[0]], g[t[1]], g[t[2]]};
            std::sort(u.begin(), u.end());
            if (u < t) rep = false;
            if (std::find(orb.begin(), orb.end(), u) == orb.end()) orb.push_back(u);
          }
          if (!rep) continue;
          Mask touched = 0;
          bool disjoint = true;
          for (const auto& u : orb)
            for (Vertex w : u) {
              if (touched & bit(w)) disjoint = false;
              touched |= bit(w);
            }
          if (!disjoint) continue;
          std::vector<int> vs{vorbit[t[0]], vorbit[t[1]], vorbit[t[2]]};
          std::sort(vs.begin(), vs.end());
          vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
          std::vector<int> es{edge_rep(t[0], t[1]), edge_rep(t[0], t[2]), edge_rep(t[1], t[2])};
          std::sort(es.begin(), es.end());
          es.erase(std::unique(es.begin(), es.end()), es.end());
          const int members = 3 * static_cast<int>(orb.size());
          int vcover = 0, ecover = 0;
          for (int o : vs) vcover += vsize[o];
          for (int e : es) ecover += esize[e];
          if (vcover != members || ecover != members) continue;
          std::vector<int> cols;
          for (int e : es) cols.push_back(edge_id[e]);
          for (int o : vs) cols.push_back(-1 - slot_id[o]);
          orbits.push_back(std::move(orb));
          orbit_cols.push_back(std::move(cols));
        }
      }
    if (seeded_) {
      std::uint64_t st = order_[f0][0] * 0x9E3779B97F4A7C15ull + static_cast<std::uint64_t>(orbits.size());
      for (std::size_t i = orbits.size(); i > 1; --i) {
        const std::size_t k = splitmix(st) % i;
        std::swap(orbits[i - 1], orbits[k]);
        std::swap(orbit_cols[i - 1], orbit_cols[k]);
      }
    }

    Dlx dlx(items);
    for (std::size_t o = 0; o < orbits.size(); ++o)
      for (int k = 0; k < tcount; ++k) {
        std::vector<int> cols;
        for (int c : orbit_cols[o]) cols.push_back(c >= 0 ? c : slot0 + (-1 - c) * tcount + k);
        dlx.add_row(static_cast<int>(o * tcount + k), cols);
      }
    std::vector<int> chosen;
    tail_start_ = nodes_;
    const bool ok = cover_search(dlx, chosen, slot0 + slot_id[0] * tcount, tcount, orbits, rem_[0]);
    if (ok)
      for (int row : chosen)
        for (const auto& t : orbits[row / tcount]) factors_[f0 + row % tcount].push_back({t[0], t[1], t[2]});
    return ok;
  }

  bool cover_search(Dlx& dlx, std::vector<int>& chosen, int slot0, int tcount,
                    const std::vector<std::vector<std::array<Vertex, 3>>>& orbits, Mask zero_free) {
    if (dlx.empty()) return true;
    if (!tick()) return false;
    if (tail_cap_ && nodes_ - tail_start_ > tail_cap_) {
      tail_capped_ = true;
      return false;
    }
    int col = -1;
    int need = -1;
    for (int k = 0; k < tcount; ++k)
      if (dlx.active(slot0 + k)) {
        col = slot0 + k;
        need = low(zero_free);
        break;
      }
    if (col < 0) col = dlx.smallest();
    if (dlx.size(col) == 0) return false;
    dlx.cover(col);
    for (int node = dlx.down(col); node != col; node = dlx.down(node)) {
      const int row = dlx.row(node);
      const std::array<Vertex, 3>* t = nullptr;
      for (const auto& tri : orbits[row / tcount])
        if (tri[0] == 0) t = &tri;
      if (need >= 0 && (!t || ((*t)[1] != need && (*t)[2] != need))) continue;
      dlx.select(node);
      chosen.push_back(row);
      Mask zf = zero_free;
      if (t) zf &= ~(bit((*t)[1]) | bit((*t)[2]));
      if (cover_search(dlx, chosen, slot0, tcount, orbits, zf)) return true;
      chosen.pop_back();
      dlx.unselect(node);
      if (aborted_ || (tail_cap_ && nodes_ - tail_start_ > tail_cap_)) break;
    }
    dlx.uncover(col);
    return false;
  }

  bool place(int f, Mask free) {
    if (!tick()) return false;
    if (!free) return factor_step(f + 1);
    return place_long(f, free, low(free));
  }

  bool place_long(int f, Mask free, int a) {
    path_.assign(1, a);
    return extend(f, free, bit(a));
  }

  bool extend(int f, Mask free, Mask used) {
    if (!tick()) return false;
    const int len = len_[f];
    const int depth = static_cast<int>(path_.size());
    const int a = path_[0];
    const int last = path_.back();
    Mask cand = rem_[last] & free & ~used;
    if (depth == 1 && a == 0) cand &= opening_choices(f);
    if (depth == len - 1) cand &= rem_[a] & above(path_[1]);
    return each(f, cand, [&](int nx) {
      const Mask u2 = used | bit(nx);
      path_.push_back(nx);
      if (depth + 1 == len) {
        std::vector<std::vector<Vertex>> orbit;
        Mask occupied = u2;
        if (cycle_orbit(path_, free, occupied, orbit)) {
          for (const auto& c : orbit) remove_cycle(c);
          if (a == 0) key_[f] = path_[1];
          for (const auto& c : orbit) factors_[f].push_back(c);
          const std::vector<Vertex> saved = path_;
          if (place(f, free & ~occupied)) return true;
          path_ = saved;
          factors_[f].resize(factors_[f].size() - orbit.size());
          for (const auto& c : orbit) restore_cycle(c);
        }
      } else {
        const Mask open = free & ~u2;
        const Mask ends = bit(a) | bit(nx);
        bool ok = true;
        for (Mask it = open; it && ok; it &= it - 1) ok = std::popcount(rem_[low(it)] & (open | ends)) >= 2;
        if (ok && extend(f, free, u2)) return true;
      }
      path_.pop_back();
      return false;
    });
  }

  static std::vector<int> identity(int v) {
    std::vector<int> id(v);
    std::iota(id.begin(), id.end(), 0);
    return id;
  }

  std::vector<Vertex> image(const std::vector<int>& g, const std::vector<Vertex>& c) const {
    std::vector<Vertex> out(c.size());
    for (std::size_t k = 0; k < c.size(); ++k) out[k] = g[c[k]];
    return out;
  }

  // The cycle and its distinct images under the symmetry group, when they
  // are pairwise disjoint, inside `free`, and on remaining edges.
  bool cycle_orbit(const std::vector<Vertex>& c, Mask free, Mask& occupied,
                   std::vector<std::vector<Vertex>>& orbit) const {
    orbit.assign(1, c);
    const auto base = canonical_rotation(c);
    for (const auto& g : group_) {
      auto img = image(g, c);
      const auto canon = canonical_rotation(img);
      bool seen = canon == base;
      for (std::size_t k = 1; k < orbit.size() && !seen; ++k) seen = canonical_rotation(orbit[k]) == canon;
      if (seen) continue;
      for (Vertex w : img)
        if (!(free & ~occupied & bit(w))) return false;
      for (std::size_t k = 0; k < img.size(); ++k)
        if (!(rem_[img[k]] & bit(img[(k + 1) % img.size()]))) return false;
      for (Vertex w : img) occupied |= bit(w);
      orbit.push_back(std::move(img));
    }
    return true;
  }

  int v_;
  std::vector<std::vector<int>> group_;  // non-identity elements
  std::vector<Mask> rem_;
  bool fix_first_;
  std::uint64_t node_limit_;
  Clock::time_point deadline_;
  std::uint64_t tail_cap_;
  std::uint64_t tail_start_ = 0;
  bool tail_capped_ = false;
  bool seeded_ = false;
  bool aborted_ = false;
  std::uint64_t nodes_ = 0;
  std::vector<int> len_;
  std::vector<char> is_n_;
  std::vector<int> key_;
  std::vector<char> same_tail_;
  std::vector<char> triangle_tail_;
  std::vector<std::vector<int>> order_;
  std::vector<std::vector<std::vector<Vertex>>> factors_;
  std::vector<Vertex> path_;
};

std::string precheck(const SearchRequest& req) {
  const auto& h = req.host;
  const int count = req.r + req.s;
  for (int w = 0; w < h.v; ++w)
    if (std::popcount(h.adj[w]) != 2 * count)
      return "vertex " + std::to_string(w) + " has degree " + std::to_string(std::popcount(h.adj[w])) +
             ", need " + std::to_string(2 * count);
  if (req.r > 0 && h.v % req.m != 0) return "m does not divide v";
  if (req.s > 0 && h.v % req.n != 0) return "n does not divide v";
  return "";
}

bool preserves(const SearchRequest& req, const std::vector<int>& sigma) {
  const int v = req.host.v;
  for (int a = 0; a < v; ++a)
    for (int b = 0; b < v; ++b)
      if (((req.host.adj[a] >> b) & 1) != ((req.host.adj[sigma[a]] >> sigma[b]) & 1)) return false;
  if (!req.fix_first_factor) return true;
  const int len = (req.n == 3 && req.m != 3) ? (req.r ? req.m : req.n) : (req.s ? req.n : req.m);
  std::vector<std::vector<Vertex>> blocks;
  for (int start = 0; start < v; start += len) {
    std::vector<Vertex> c(len);
    std::iota(c.begin(), c.end(), start);
    blocks.push_back(canonical_rotation(c));
  }
  for (const auto& c : blocks) {
    std::vector<Vertex> img(c.size());
    for (std::size_t k = 0; k < c.size(); ++k) img[k] = sigma[c[k]];
    if (std::find(blocks.begin(), blocks.end(), canonical_rotation(img)) == blocks.end()) return false;
  }
  return true;
}

// Fixed-point-free host automorphisms used by the symmetric attempts: a
// shift of order 3 (by v/3, or by a third of the pairs {2k, 2k+1} when those
// are non-edges) and the involution swapping 2k with 2k+1.
std::vector<std::vector<int>> symmetry_candidates(const SearchRequest& req) {
  const int v = req.host.v;
  std::vector<std::vector<int>> out;
  bool paired = v % 2 == 0;
  for (int w = 0; w < v && paired; ++w) paired = (req.host.adj[w] & bit(w ^ 1)) == 0;
  if (v % 3 == 0) {
    std::vector<int> sigma(v);
    for (int w = 0; w < v; ++w)
      sigma[w] = paired && v % 6 == 0 ? 2 * ((w / 2 + v / 6) % (v / 2)) + (w & 1) : (w + v / 3) % v;
    if (preserves(req, sigma)) out.push_back(std::move(sigma));
  }
  if (v % 2 == 0) {
    std::vector<int> sigma(v);
    for (int w = 0; w < v; ++w) sigma[w] = w ^ 1;
    if (preserves(req, sigma)) out.push_back(std::move(sigma));
  }
  return out;
}

}  // namespace

HostGraph HostGraph::from_spec(const GraphSpec& g) {
  if (g.v > 64) throw ParameterError("search hosts are limited to 64 vertices, got " + std::to_string(g.v));
  HostGraph h;
  h.v = g.v;
  h.adj.assign(g.v, 0);
  for (int a = 0; a < g.v; ++a)
    for (int b = 0; b < g.v; ++b)
      if (a != b && g.adjacent(a, b) && !(g.needs_one_factor() && a / 2 == b / 2)) h.adj[a] |= bit(b);
  return h;
}

std::int64_t HostGraph::edge_count() const {
  std::int64_t deg = 0;
  for (auto m : adj) deg += std::popcount(m);
  return deg / 2;
}

const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found:
      return "found";
    case SearchStatus::Nonexistent:
      return "nonexistent";
    case SearchStatus::BudgetExhausted:
      return "budget-exhausted";
  }
  return "?";
}

SearchResult search_factors(const SearchRequest& req, const SearchBudget& budget) {
  if (req.m < 3 || req.n < 3) throw ParameterError("cycle lengths must be at least 3");
  if (req.r < 0 || req.s < 0) throw ParameterError("factor counts must be non-negative");
  if (req.host.v < 3 || req.host.v > 64) throw ParameterError("search hosts need 3 <= v <= 64");
  SearchResult out;
  if (auto why = precheck(req); !why.empty()) {
    out.status = SearchStatus::Nonexistent;
    out.detail = why;
    return out;
  }
  const auto deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                           std::chrono::duration<double>(std::max(budget.seconds, 0.0)));
  constexpr std::uint64_t kFirstLimit = 1u << 20;
  const auto symmetries = budget.node_limit ? std::vector<std::vector<int>>{} : symmetry_candidates(req);
  // A cap on each triangle-tail cover only helps when searched long factors
  // precede the tail.
  int long_factors = (req.n == 3 && req.m != 3) ? req.r : req.s;
  if (req.m == req.n) long_factors = req.m == 3 ? 0 : req.r + req.s;
  if (req.fix_first_factor && long_factors > 0) --long_factors;
  const bool capped = long_factors > 0 && (req.m == 3 || req.n == 3) && req.m != req.n;
  const int modes = 1 + (capped ? 1 : 0) + static_cast<int>(symmetries.size());
  const std::vector<int> none;
  for (int attempt = 0;; ++attempt) {
    std::uint64_t seed = budget.seed;
    if (attempt > 0) {
      std::uint64_t st = budget.seed + static_cast<std::uint64_t>(attempt);
      seed = splitmix(st) | 1;
    }
    // Symmetric attempts look only for invariant solutions; their exhaustion
    // proves nothing about the general case.
    // Modes: plain, plain with capped tails, then one per symmetry (capped
    // when capping applies).
    const int mode = attempt % modes;
    const int sym_index = mode - 1 - (capped ? 1 : 0);
    const bool symmetric = sym_index >= 0;
    const int round = attempt / modes;
    const std::uint64_t limit = budget.node_limit ? budget.node_limit : kFirstLimit << std::min(round, 30);
    const std::uint64_t cap = mode > 0 && capped ? std::max<std::uint64_t>(limit >> 8, 4096) : 0;
    Searcher s(req, seed, limit, deadline, symmetric ? symmetries[sym_index] : none, cap);
    const Outcome oc = s.run();
    out.nodes += s.nodes();
    out.attempts = attempt + 1;
    if (oc == Outcome::Found) {
      out.status = SearchStatus::Found;
      Decomposition d;
      d.m = req.m;
      d.n = req.n;
      d.r = req.r;
      d.s = req.s;
      std::vector<TwoFactor> n_type, m_type;
      const auto& lens = s.lengths();
      for (std::size_t f = 0; f < lens.size(); ++f) {
        std::vector<Cycle> cycles;
        for (const auto& c : s.factors()[f]) cycles.emplace_back(c);
        (s.is_n_type(static_cast<int>(f)) ? n_type : m_type).emplace_back(req.host.v, lens[f], std::move(cycles));
      }
      d.factors = std::move(m_type);
      d.factors.insert(d.factors.end(), n_type.begin(), n_type.end());
      out.decomposition = std::move(d);
      out.detail = "found after " + std::to_string(out.nodes) + " nodes";
      return out;
    }
    if (oc == Outcome::Exhausted && !symmetric && cap == 0) {
      out.status = SearchStatus::Nonexistent;
      out.detail = "complete enumeration (" + std::to_string(out.nodes) + " nodes)";
      return out;
    }
    if (budget.node_limit || Clock::now() > deadline) {
      out.status = SearchStatus::BudgetExhausted;
      out.detail = "budget exhausted after " + std::to_string(out.nodes) + " nodes";
      return out;
    }
  }
}

SearchResult search_oracle(const GraphSpec& g, int m, int n, int r, int s, const SearchBudget& budget) {
  if (g.kind == GraphKind::Equipartite && g.two_factor_degree() % 2 == 1)
    throw ParameterError("equipartite hosts of odd degree are not supported by the search");
  SearchRequest req;
  req.host = HostGraph::from_spec(g);
  req.m = m;
  req.n = n;
  req.r = r;
  req.s = s;
  req.fix_first_factor = g.kind == GraphKind::Complete;
  SearchResult res = search_factors(req, budget);
  if (res.decomposition) {
    auto& d = *res.decomposition;
    d.graph = g;
    if (g.needs_one_factor()) {
      std::vector<Edge> f;
      for (int k = 0; k + 1 < g.v; k += 2) f.emplace_back(k, k + 1);
      d.one_factor = OneFactor::from_edges(std::move(f));
    }
    auto rep = verify(d);
    if (!rep) throw InternalError("search produced an invalid decomposition: " + rep.violation);
  }
  return res;
}

}  // namespace hwp
