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

#include "hwp/types.hpp"

#include <algorithm>
#include <unordered_set>

namespace hwp {

GraphSpec GraphSpec::complete(int v) {
  if (v < 3) throw ParameterError("complete graph needs v >= 3, got " + std::to_string(v));
  return GraphSpec{GraphKind::Complete, v, 0, 0};
}

GraphSpec GraphSpec::minus_one_factor(int v) {
  if (v < 4 || v % 2 != 0)
    throw ParameterError("K_v - F needs even v >= 4, got " + std::to_string(v));
  return GraphSpec{GraphKind::CompleteMinusOneFactor, v, 0, 0};
}

GraphSpec GraphSpec::equipartite(int h, int u) {
  if (h < 1 || u < 2 || h * u < 3)
    throw ParameterError("K_(h:u) needs h >= 1, u >= 2, hu >= 3");
  return GraphSpec{GraphKind::Equipartite, h * u, h, u};
}

GraphSpec GraphSpec::complete_or_minus(int v) {
  return v % 2 == 0 ? minus_one_factor(v) : complete(v);
}

std::int64_t GraphSpec::edge_count() const {
  const std::int64_t n = v;
  switch (kind) {
    case GraphKind::Complete:
      return n * (n - 1) / 2;
    case GraphKind::CompleteMinusOneFactor:
      return n * (n - 2) / 2;
    case GraphKind::Equipartite:
      return static_cast<std::int64_t>(h) * h * u * (u - 1) / 2;
  }
  return 0;
}

bool GraphSpec::adjacent(Vertex a, Vertex b) const {
  if (a == b || a < 0 || b < 0 || a >= v || b >= v) return false;
  if (kind == GraphKind::Equipartite) return a / h != b / h;
  return true;
}

int GraphSpec::two_factor_degree() const {
  switch (kind) {
    case GraphKind::Complete:
      return v - 1;
    case GraphKind::CompleteMinusOneFactor:
      return v - 2;
    case GraphKind::Equipartite:
      return h * (u - 1);
  }
  return 0;
}

std::string GraphSpec::describe() const {
  switch (kind) {
    case GraphKind::Complete:
      return "K_" + std::to_string(v);
    case GraphKind::CompleteMinusOneFactor:
      return "K_" + std::to_string(v) + "-F";
    case GraphKind::Equipartite:
      return "K_(" + std::to_string(h) + ":" + std::to_string(u) + ")";
  }
  return "?";
}

StructuredVertex::StructuredVertex(std::vector<Coord> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw ParameterError("structured vertex needs at least one coordinate");
  Vertex flat = 0;
  for (const auto& c : coords_) {
    if (c.size <= 0 || c.index < 0 || c.index >= c.size)
      throw ParameterError("coordinate index out of range");
    flat = flat * c.size + c.index;
  }
  flat_ = flat;
}

StructuredVertex StructuredVertex::from_flat(std::span<const int> layer_sizes, Vertex flat) {
  std::vector<Coord> coords(layer_sizes.size());
  Vertex rest = flat;
  for (std::size_t k = layer_sizes.size(); k-- > 0;) {
    coords[k] = Coord{layer_sizes[k], rest % layer_sizes[k]};
    rest /= layer_sizes[k];
  }
  if (rest != 0 || flat < 0) throw ParameterError("flat id out of range for layer sizes");
  return StructuredVertex(std::move(coords));
}

std::vector<Vertex> canonical_rotation(std::vector<Vertex> vertices) {
  const std::size_t len = vertices.size();
  if (len < 3) throw StructuralError("cycle of length " + std::to_string(len) + " (< 3)");
  {
    std::unordered_set<Vertex> seen;
    for (Vertex x : vertices) {
      if (x < 0) throw StructuralError("negative vertex id " + std::to_string(x));
      if (!seen.insert(x).second)
        throw StructuralError("vertex " + std::to_string(x) + " repeated within a cycle");
    }
  }
  auto lowest = std::min_element(vertices.begin(), vertices.end());
  std::rotate(vertices.begin(), lowest, vertices.end());
  if (vertices[len - 1] < vertices[1]) std::reverse(vertices.begin() + 1, vertices.end());
  return vertices;
}

Cycle::Cycle(std::vector<Vertex> vertices) : vertices_(canonical_rotation(std::move(vertices))) {}

std::vector<Edge> Cycle::edges() const {
  std::vector<Edge> out;
  out.reserve(vertices_.size());
  for (std::size_t k = 0; k < vertices_.size(); ++k)
    out.push_back(make_edge(vertices_[k], vertices_[(k + 1) % vertices_.size()]));
  return out;
}

TwoFactor::TwoFactor(int span, int cycle_length, std::vector<Cycle> cycles)
    : span_(span), cycle_length_(cycle_length), cycles_(std::move(cycles)) {
  std::sort(cycles_.begin(), cycles_.end(),
            [](const Cycle& a, const Cycle& b) { return a.front() < b.front(); });
}

std::vector<Cycle> cycles_of_two_regular(int span, std::span<const Edge> edges) {
  std::vector<std::array<Vertex, 2>> nbr(span, {-1, -1});
  for (const auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= span || b >= span || a == b)
      throw InternalError("edge out of range while assembling cycles");
    for (auto [p, q] : {std::pair{a, b}, std::pair{b, a}}) {
      if (nbr[p][0] < 0)
        nbr[p][0] = q;
      else if (nbr[p][1] < 0)
        nbr[p][1] = q;
      else
        throw InternalError("vertex " + std::to_string(p) + " has degree > 2");
    }
  }
  std::vector<char> done(span, 0);
  std::vector<Cycle> cycles;
  for (Vertex start = 0; start < span; ++start) {
    if (done[start]) continue;
    if (nbr[start][1] < 0) throw InternalError("vertex " + std::to_string(start) + " has degree < 2");
    std::vector<Vertex> walk{start};
    done[start] = 1;
    Vertex prev = start;
    Vertex cur = nbr[start][0];
    while (cur != start) {
      if (done[cur]) throw InternalError("edge set is not a union of cycles");
      done[cur] = 1;
      walk.push_back(cur);
      if (nbr[cur][1] < 0) throw InternalError("vertex " + std::to_string(cur) + " has degree < 2");
      const Vertex next = nbr[cur][0] == prev ? nbr[cur][1] : nbr[cur][0];
      prev = cur;
      cur = next;
    }
    cycles.emplace_back(std::move(walk));
  }
  return cycles;
}

TwoFactor TwoFactor::from_edges(int span, std::span<const Edge> edges) {
  auto cycles = cycles_of_two_regular(span, edges);
  if (cycles.empty()) throw InternalError("empty 2-factor");
  const int len = static_cast<int>(cycles.front().size());
  for (const auto& c : cycles)
    if (static_cast<int>(c.size()) != len) throw InternalError("2-factor has mixed cycle lengths");
  return TwoFactor(span, len, std::move(cycles));
}

std::vector<Edge> TwoFactor::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (const auto& c : cycles_) {
    auto e = c.edges();
    out.insert(out.end(), e.begin(), e.end());
  }
  return out;
}

std::size_t TwoFactor::edge_count() const {
  std::size_t total = 0;
  for (const auto& c : cycles_) total += c.size();
  return total;
}

OneFactor OneFactor::from_edges(std::vector<Edge> edges) {
  for (auto& e : edges) e = make_edge(e.first, e.second);
  std::sort(edges.begin(), edges.end());
  return OneFactor{std::move(edges)};
}

}  // namespace hwp
