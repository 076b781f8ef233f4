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

// Small designs that the search oracle only finds with a long budget. Each was
// produced offline by search_oracle and is re-verified whenever it is loaded.

#include "tabulated.hpp"

#include <map>

namespace hwp::detail {

namespace {

// search_oracle(K_18 - F, m=3, n=6, r=7, s=1), 1200 s budget.
const char* const kK18MinusFr7s1 = R"(HWP v=18 graph=minusF m=3 n=6 r=7 s=1
FACTOR 0 len=3
(0 2 14)
(1 7 12)
(3 5 10)
(4 9 17)
(6 13 15)
(8 11 16)
FACTOR 1 len=3
(0 3 8)
(1 4 10)
(2 11 12)
(5 6 9)
(7 15 16)
(13 14 17)
FACTOR 2 len=3
(0 4 6)
(1 2 8)
(3 7 17)
(5 12 14)
(9 11 15)
(10 13 16)
FACTOR 3 len=3
(0 5 15)
(1 3 11)
(2 9 13)
(4 12 16)
(6 8 17)
(7 10 14)
FACTOR 4 len=3
(0 7 9)
(1 14 16)
(2 10 15)
(3 6 12)
(4 8 13)
(5 11 17)
FACTOR 5 len=3
(0 10 17)
(1 5 13)
(2 4 7)
(3 9 16)
(6 11 14)
(8 12 15)
FACTOR 6 len=3
(0 11 13)
(1 15 17)
(2 6 16)
(3 4 14)
(5 7 8)
(9 10 12)
FACTOR 7 len=6
(0 12 17 2 5 16)
(1 6 10 8 14 9)
(3 13 7 11 4 15)
ONEFACTOR
0 1
2 3
4 5
6 7
8 9
10 11
12 13
14 15
16 17
)";

}  // namespace

const char* tabulated_design(const std::string& id) {
  static const std::map<std::string, const char*> table{
      {"hwp_K18-F_m3_n6_r7_s1", kK18MinusFr7s1},
  };
  auto it = table.find(id);
  return it == table.end() ? nullptr : it->second;
}

}  // namespace hwp::detail
