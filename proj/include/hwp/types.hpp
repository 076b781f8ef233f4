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
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hwp {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Raised when caller-supplied parameters are outside an operation's domain.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a decomposition is malformed (vertex out of range, repeated
/// vertex inside a cycle, cycle shorter than 3). Distinct from a failed
/// verification of a well-formed object.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A construction produced something the verifier rejected. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

enum class GraphKind { Complete, CompleteMinusOneFactor, Equipartite };

struct GraphSpec {
  GraphKind kind = GraphKind::Complete;
  int v = 0;
  int h = 0;  // part size, equipartite only
  int u = 0;  // part count, equipartite only

  static GraphSpec complete(int v);
  static GraphSpec minus_one_factor(int v);
  static GraphSpec equipartite(int h, int u);
  // K_v for odd v, K_v - F for even v.
  static GraphSpec complete_or_minus(int v);

  std::int64_t edge_count() const;
  // Edge of the underlying graph (for K_v - F, of K_v; F is carried by the
  // decomposition).
  bool adjacent(Vertex a, Vertex b) const;
  bool needs_one_factor() const { return kind == GraphKind::CompleteMinusOneFactor; }
  // Degree of every vertex once a one-factor is removed.
  int two_factor_degree() const;

  std::string describe() const;
  bool operator==(const GraphSpec&) const = default;
};

/// A point of a layered product, e.g. (part, index) of K_(x:3) or
/// (K_(4:3) vertex, weight coordinate). The first coordinate is the most
/// significant digit of the flat id.
class StructuredVertex {
 public:
  struct Coord {
    int size;
    int index;
  };

  explicit StructuredVertex(std::vector<Coord> coords);
  static StructuredVertex from_flat(std::span<const int> layer_sizes, Vertex flat);

  const std::vector<Coord>& coords() const { return coords_; }
  Vertex flat() const { return flat_; }

 private:
  std::vector<Coord> coords_;
  Vertex flat_ = 0;
};

inline Vertex flatten(int part, int part_size, int index) { return part * part_size + index; }

/// Cyclic vertex sequence in canonical rotation: smallest id first, the
/// smaller of its two neighbours second.
class Cycle {
 public:
  Cycle() = default;
  // Canonicalizes; throws StructuralError on a repeated vertex or length < 3.
  explicit Cycle(std::vector<Vertex> vertices);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  Vertex front() const { return vertices_.front(); }
  std::vector<Edge> edges() const;

  bool operator==(const Cycle&) const = default;
  auto operator<=>(const Cycle&) const = default;

 private:
  std::vector<Vertex> vertices_;
};

std::vector<Vertex> canonical_rotation(std::vector<Vertex> vertices);

/// A 2-factor of uniform cycle length over `span` vertices. The constructor
/// only orders the cycles; spanning and disjointness are the verifier's job so
/// that corrupted inputs can still be represented and reported.
class TwoFactor {
 public:
  TwoFactor() = default;
  TwoFactor(int span, int cycle_length, std::vector<Cycle> cycles);

  // Assembles cycles from the edge set of a 2-regular spanning subgraph.
  // Throws InternalError when the edges are not 2-regular or the resulting
  // cycle lengths are not uniform.
  static TwoFactor from_edges(int span, std::span<const Edge> edges);

  int span() const { return span_; }
  int cycle_length() const { return cycle_length_; }
  const std::vector<Cycle>& cycles() const { return cycles_; }
  std::vector<Edge> edges() const;
  std::size_t edge_count() const;

  bool operator==(const TwoFactor&) const = default;

 private:
  int span_ = 0;
  int cycle_length_ = 0;
  std::vector<Cycle> cycles_;
};

// Cycles of a 2-regular graph on [0, span); throws InternalError otherwise.
std::vector<Cycle> cycles_of_two_regular(int span, std::span<const Edge> edges);

struct OneFactor {
  std::vector<Edge> edges;  // sorted, each (a, b) with a < b
  static OneFactor from_edges(std::vector<Edge> edges);
  bool operator==(const OneFactor&) const = default;
};

/// A (m, n)-decomposition of `graph`: r factors of m-cycles, s of n-cycles,
/// plus a one-factor when the graph is K_v - F.
struct Decomposition {
  GraphSpec graph;
  int m = 3;
  int n = 3;
  int r = 0;
  int s = 0;
  std::vector<TwoFactor> factors;
  std::optional<OneFactor> one_factor;

  int v() const { return graph.v; }
  bool operator==(const Decomposition&) const = default;
};

/// 3-RGDD(h^u): point set [0, hu), groups of size h, parallel classes of
/// transverse triples (each triple sorted ascending).
struct Rgdd {
  using Triple = std::array<Vertex, 3>;
  int h = 0;
  int u = 0;
  std::vector<std::vector<Vertex>> groups;
  std::vector<std::vector<Triple>> classes;

  int points() const { return h * u; }
  int expected_classes() const { return h * (u - 1) / 2; }
};

}  // namespace hwp
