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
#include <stdexcept>
#include <string>
#include <string_view>

#include "hwp/types.hpp"

// Decomposition text format:
//
//   HWP v=<v> graph=<complete|minusF|equipartite:h,u> m=<m> n=<n> r=<r> s=<s>
//   FACTOR <idx> len=<l>
//   (a b c)
//   ...
//   ONEFACTOR
//   a b
//
// Cycles are written in canonical rotation, sorted by smallest id; one-factor
// edges ascending. Output is byte-identical for equal decompositions.

namespace hwp {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

std::string to_text(const Decomposition& d);
Decomposition parse_text(std::string_view text);

void write_file(const Decomposition& d, const std::filesystem::path& path);
Decomposition read_file(const std::filesystem::path& path);

}  // namespace hwp
