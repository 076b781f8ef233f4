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

#include "hwp/hwp.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "hwp/composer.hpp"
#include "hwp/search.hpp"
#include "hwp/text_format.hpp"
#include "hwp/verify.hpp"

struct hwp_decomposition {
  hwp::Decomposition d;
};

namespace {

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void say(char** message, const std::string& s) {
  if (message) *message = dup(s);
}

hwp::SearchBudget to_budget(const hwp_budget* b) {
  hwp::SearchBudget out;
  if (!b) return out;
  if (b->seconds > 0) out.seconds = b->seconds;
  out.node_limit = b->node_limit;
  out.seed = b->seed;
  if (b->cache_root) out.cache_root = b->cache_root;
  return out;
}

hwp_status give(hwp::Decomposition d, hwp_decomposition** out) {
  if (!out) return HWP_INVALID;
  *out = new (std::nothrow) hwp_decomposition{std::move(d)};
  return *out ? HWP_OK : HWP_INTERNAL;
}

// Maps exceptions to status codes at the boundary.
template <typename F>
hwp_status guarded(char** message, F&& body) {
  try {
    return body();
  } catch (const hwp::ParseError& e) {
    say(message, e.what());
    return HWP_INVALID;
  } catch (const hwp::ParameterError& e) {
    say(message, e.what());
    return HWP_INVALID;
  } catch (const hwp::StructuralError& e) {
    say(message, e.what());
    return HWP_INVALID;
  } catch (const std::exception& e) {
    say(message, e.what());
    return HWP_INTERNAL;
  }
}

}  // namespace

extern "C" {

void hwp_budget_default(hwp_budget* b) {
  if (!b) return;
  b->seconds = hwp::SearchBudget{}.seconds;
  b->node_limit = 0;
  b->seed = 0;
  b->cache_root = nullptr;
}

hwp_status hwp_solve(int x, int y, int r, int s, const hwp_budget* budget, hwp_decomposition** out, char** message) {
  if (out) *out = nullptr;
  return guarded(message, [&]() -> hwp_status {
    auto res = hwp::solve(x, y, r, s, to_budget(budget));
    switch (res.status) {
      case hwp::SolveStatus::Ok:
        say(message, res.message);
        return give(std::move(*res.decomposition), out);
      case hwp::SolveStatus::Exception:
        say(message, res.message);
        return HWP_EXCEPTION;
      case hwp::SolveStatus::Open:
        say(message, res.message);
        return HWP_OPEN;
      case hwp::SolveStatus::NotFound:
        say(message, res.message);
        return HWP_NOT_FOUND;
    }
    return HWP_INTERNAL;
  });
}

hwp_status hwp_oracle(char graph, int v, int h, int u, int m, int n, int r, int s, const hwp_budget* budget,
                      hwp_decomposition** out, char** message) {
  if (out) *out = nullptr;
  return guarded(message, [&]() -> hwp_status {
    hwp::GraphSpec g;
    switch (graph) {
      case 'c':
        g = hwp::GraphSpec::complete(v);
        break;
      case 'f':
        g = hwp::GraphSpec::minus_one_factor(v);
        break;
      case 'e':
        g = hwp::GraphSpec::equipartite(h, u);
        break;
      default:
        say(message, "graph must be 'c', 'f' or 'e'");
        return HWP_INVALID;
    }
    auto res = hwp::search_oracle(g, m, n, r, s, to_budget(budget));
    say(message, res.detail);
    switch (res.status) {
      case hwp::SearchStatus::Found:
        return give(std::move(*res.decomposition), out);
      case hwp::SearchStatus::Nonexistent:
        return HWP_NONEXISTENT;
      case hwp::SearchStatus::BudgetExhausted:
        return HWP_BUDGET;
    }
    return HWP_INTERNAL;
  });
}

hwp_status hwp_decomposition_read(const char* path, hwp_decomposition** out, char** message) {
  if (out) *out = nullptr;
  if (!path) return HWP_INVALID;
  return guarded(message, [&]() { return give(hwp::read_file(path), out); });
}

hwp_status hwp_decomposition_parse(const char* text, hwp_decomposition** out, char** message) {
  if (out) *out = nullptr;
  if (!text) return HWP_INVALID;
  return guarded(message, [&]() { return give(hwp::parse_text(text), out); });
}

hwp_status hwp_decomposition_write(const hwp_decomposition* d, const char* path) {
  if (!d || !path) return HWP_INVALID;
  return guarded(nullptr, [&]() {
    hwp::write_file(d->d, path);
    return HWP_OK;
  });
}

char* hwp_decomposition_to_string(const hwp_decomposition* d) {
  if (!d) return nullptr;
  try {
    return dup(hwp::to_text(d->d));
  } catch (...) {
    return nullptr;
  }
}

hwp_status hwp_decomposition_info(const hwp_decomposition* d, hwp_info* info) {
  if (!d || !info) return HWP_INVALID;
  info->v = d->d.v();
  info->m = d->d.m;
  info->n = d->d.n;
  info->r = d->d.r;
  info->s = d->d.s;
  info->has_one_factor = d->d.one_factor.has_value() ? 1 : 0;
  return HWP_OK;
}

void hwp_decomposition_free(hwp_decomposition* d) { delete d; }

hwp_status hwp_verify(const hwp_decomposition* d, char** message) {
  if (!d) return HWP_INVALID;
  return guarded(message, [&]() -> hwp_status {
    auto rep = hwp::verify(d->d);
    if (rep) {
      say(message, "pass: " + std::to_string(rep.edges_covered) + " edges");
      return HWP_OK;
    }
    say(message, rep.violation);
    return HWP_VERIFY_FAILED;
  });
}

hwp_status hwp_table(int x, int y, char** text) {
  return guarded(text, [&]() {
    say(text, hwp::format_table(x, y, hwp::table(x, y)));
    return HWP_OK;
  });
}

hwp_status hwp_check_necessary(int x, int y, int r, int s, char** message) {
  return guarded(message, [&]() -> hwp_status {
    if (x < 1 || y < 1 || r < 0 || s < 0) {
      say(message, "x, y must be positive and r, s non-negative");
      return HWP_INVALID;
    }
    auto v = hwp::check_necessary(x, y, r, s);
    std::string joined;
    for (const auto& c : v) joined += c + "\n";
    say(message, joined);
    return v.empty() ? HWP_OK : HWP_INVALID;
  });
}

const char* hwp_status_string(hwp_status s) {
  switch (s) {
    case HWP_OK:
      return "ok";
    case HWP_VERIFY_FAILED:
      return "verify-failed";
    case HWP_EXCEPTION:
      return "exception";
    case HWP_OPEN:
      return "open";
    case HWP_NOT_FOUND:
      return "not-found";
    case HWP_INVALID:
      return "invalid";
    case HWP_NONEXISTENT:
      return "nonexistent";
    case HWP_BUDGET:
      return "budget-exhausted";
    case HWP_INTERNAL:
      return "internal-error";
  }
  return "unknown";
}

void hwp_string_free(char* s) { std::free(s); }

}  // extern "C"
