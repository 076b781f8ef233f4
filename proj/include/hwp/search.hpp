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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hwp/types.hpp"

// Backtracking 2-factorization search over hosts of at most 64 vertices.

namespace hwp {

struct SearchBudget {
  double seconds = 60.0;        // wall clock for the whole call, all restarts
  std::uint64_t node_limit = 0;  // 0: use the restart schedule
  std::uint64_t seed = 0;        // 0: ascending-id branch order on the first attempt
  std::string cache_root;        // empty: HWP_CACHE, or no disk cache
};

enum class SearchStatus {
  Found,
  Nonexistent,      // a complete enumeration found nothing
  BudgetExhausted,  // stopped by node or time limits
};

struct SearchResult {
  SearchStatus status = SearchStatus::BudgetExhausted;
  std::optional<Decomposition> decomposition;
  std::uint64_t nodes = 0;
  int attempts = 0;
  std::string detail;
};

/// A host graph on v <= 64 vertices as adjacency bitmasks.
struct HostGraph {
  int v = 0;
  std::vector<std::uint64_t> adj;

  static HostGraph from_spec(const GraphSpec& g);
  std::int64_t edge_count() const;
  bool operator==(const HostGraph&) const = default;
};

struct SearchRequest {
  HostGraph host;
  int m = 3;
  int n = 3;
  int r = 0;
  int s = 0;
  // Relabelling symmetry lets the first factor be fixed without loss.
  bool fix_first_factor = false;
};

/// Finds r C_m-factors and s C_n-factors partitioning the host's edges.
/// n-type factors are searched first. Deterministic for a fixed request and
/// budget unless the wall clock runs out.
SearchResult search_factors(const SearchRequest& req, const SearchBudget& budget);

/// search_factors on the graph of `g` (for K_v - F, F = {2k, 2k+1}). The
/// returned decomposition is verified.
SearchResult search_oracle(const GraphSpec& g, int m, int n, int r, int s, const SearchBudget& budget);

const char* to_string(SearchStatus s);

}  // namespace hwp
