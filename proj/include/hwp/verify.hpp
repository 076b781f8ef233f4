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
#include <vector>

#include "hwp/types.hpp"

namespace hwp {

struct VerificationReport {
  bool pass = false;
  std::string violation;             // empty on pass
  int factor = -1;                   // offending factor, -1 if none / one-factor
  std::optional<Edge> edge;          // offending edge, if the violation is about one
  std::int64_t edges_covered = 0;    // edges counted before stopping
  std::int64_t edges_expected = 0;

  explicit operator bool() const { return pass; }
};

/// Exact check that `d` partitions the edge set of `d.graph` into its 2-factors
/// (and one-factor), with uniform cycle lengths matching the declared m/n
/// counts. Reports the first violation only.
///
/// Throws StructuralError when a vertex id is out of range; every other defect
/// is a failed report.
VerificationReport verify(const Decomposition& d);

/// Validates the resolvable GDD invariants; returns the first violation.
std::optional<std::string> check_rgdd(const Rgdd& rgdd);

/// Necessary conditions for a (3, 3x)-HWP(3xy; r, s). Empty result means ok.
std::vector<std::string> check_necessary(int x, int y, int r, int s);

/// Number of 2-factors in any 2-factorization of K_v (or K_v - F).
inline int factor_count_for(int v) { return v % 2 == 1 ? (v - 1) / 2 : (v - 2) / 2; }

}  // namespace hwp
