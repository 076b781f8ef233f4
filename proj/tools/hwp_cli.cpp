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

// Command-line front end over the C API. Exit codes follow hwp_status.

#include <CLI11.hpp>

#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "hwp/hwp.h"

namespace {

struct Message {
  char* text = nullptr;
  ~Message() { hwp_string_free(text); }
  std::string str() const { return text ? text : ""; }
};

struct Handle {
  hwp_decomposition* d = nullptr;
  ~Handle() { hwp_decomposition_free(d); }
};

struct BudgetFlags {
  double seconds = 0;
  std::uint64_t nodes = 0;
  std::uint64_t seed = 0;
  std::string cache;

  void attach(CLI::App* app) {
    app->add_option("--seconds", seconds, "Wall-clock budget per search (default 60)")->check(CLI::NonNegativeNumber);
    app->add_option("--nodes", nodes, "Node limit per search (default: restart schedule)");
    app->add_option("--seed", seed, "Branch-order seed");
    app->add_option("--cache", cache, "Ingredient cache directory (default: $HWP_CACHE)");
  }

  hwp_budget get() const {
    hwp_budget b;
    hwp_budget_default(&b);
    if (seconds > 0) b.seconds = seconds;
    b.node_limit = nodes;
    b.seed = seed;
    b.cache_root = cache.empty() ? nullptr : cache.c_str();
    return b;
  }
};

int write_out(const Handle& h, const std::string& path) {
  if (hwp_decomposition_write(h.d, path.c_str()) != HWP_OK) {
    std::fprintf(stderr, "error: cannot write %s\n", path.c_str());
    return HWP_INTERNAL;
  }
  return HWP_OK;
}

void print_ok(const Handle& h) {
  hwp_info info;
  hwp_decomposition_info(h.d, &info);
  std::printf("OK v=%d r=%d s=%d\n", info.v, info.r, info.s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hamilton-Waterloo decompositions with triangle and C_3x factors"};
  app.require_subcommand(1);

  int x = 0, y = 0, r = -1, s = -1;
  std::string out_path;
  BudgetFlags budget;

  auto* build = app.add_subcommand("build", "Construct and verify a (3,3x)-HWP(3xy; r, s)");
  build->add_option("--x", x, "Cycle length is 3x")->required()->check(CLI::NonNegativeNumber);
  build->add_option("--y", y, "v = 3xy")->required()->check(CLI::NonNegativeNumber);
  build->add_option("--r", r, "Number of triangle factors")->required()->check(CLI::NonNegativeNumber);
  build->add_option("--s", s, "Number of C_3x-factors")->required()->check(CLI::NonNegativeNumber);
  build->add_option("--out", out_path, "Output file (default hwp-<x>-<y>-<r>-<s>.txt)");
  budget.attach(build);

  std::string in_path;
  auto* verify = app.add_subcommand("verify", "Check a decomposition file");
  verify->add_option("path", in_path, "Decomposition file")->required();

  int tx = 0, ty = 0;
  auto* table = app.add_subcommand("table", "Status of every s for (x, y)");
  table->add_option("--x", tx)->required()->check(CLI::NonNegativeNumber);
  table->add_option("--y", ty)->required()->check(CLI::NonNegativeNumber);

  int complete = 0;
  bool minus_f = false;
  std::vector<int> equipartite;
  int om = 3, on = 3, orr = 0, os = 0;
  std::string oracle_out;
  BudgetFlags oracle_budget;
  auto* oracle = app.add_subcommand("oracle", "Search for a 2-factorization of a small graph");
  auto* complete_opt = oracle->add_option("--complete", complete, "K_v with v vertices");
  oracle->add_flag("--minusF", minus_f, "Remove the one-factor {2k, 2k+1}")->needs(complete_opt);
  auto* equi_opt = oracle->add_option("--equipartite", equipartite, "K_(h:u) as h,u")->delimiter(',')->expected(2);
  complete_opt->excludes(equi_opt);
  oracle->add_option("--m", om)->required();
  oracle->add_option("--n", on)->required();
  oracle->add_option("--r", orr)->required()->check(CLI::NonNegativeNumber);
  oracle->add_option("--s", os)->required()->check(CLI::NonNegativeNumber);
  oracle->add_option("--out", oracle_out, "Output file (default: print to stdout)");
  oracle_budget.attach(oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return HWP_INVALID;
  }

  if (*build) {
    const hwp_budget b = budget.get();
    Handle h;
    Message msg;
    const hwp_status st = hwp_solve(x, y, r, s, &b, &h.d, &msg.text);
    if (st != HWP_OK) {
      std::printf("%s: %s\n", hwp_status_string(st), msg.str().c_str());
      return st;
    }
    if (out_path.empty())
      out_path = "hwp-" + std::to_string(x) + "-" + std::to_string(y) + "-" + std::to_string(r) + "-" +
                 std::to_string(s) + ".txt";
    if (int rc = write_out(h, out_path); rc != HWP_OK) return rc;
    print_ok(h);
    return HWP_OK;
  }

  if (*verify) {
    Handle h;
    Message msg;
    hwp_status st = hwp_decomposition_read(in_path.c_str(), &h.d, &msg.text);
    if (st != HWP_OK) {
      std::printf("invalid: %s\n", msg.str().c_str());
      return HWP_INVALID;
    }
    Message rep;
    st = hwp_verify(h.d, &rep.text);
    std::printf("%s: %s\n", st == HWP_OK ? "PASS" : "FAIL", rep.str().c_str());
    return st;
  }

  if (*table) {
    Message text;
    const hwp_status st = hwp_table(tx, ty, &text.text);
    std::fputs(text.str().c_str(), stdout);
    if (st != HWP_OK) std::fputc('\n', stdout);
    return st;
  }

  if (*oracle) {
    char kind = 'c';
    int v = complete, h = 0, u = 0;
    if (!equipartite.empty()) {
      kind = 'e';
      h = equipartite[0];
      u = equipartite[1];
    } else if (complete <= 0) {
      std::fprintf(stderr, "error: give --complete v or --equipartite h,u\n");
      return HWP_INVALID;
    } else if (minus_f) {
      kind = 'f';
    }
    const hwp_budget b = oracle_budget.get();
    Handle hd;
    Message msg;
    const hwp_status st = hwp_oracle(kind, v, h, u, om, on, orr, os, &b, &hd.d, &msg.text);
    if (st != HWP_OK) {
      std::printf("%s: %s\n", hwp_status_string(st), msg.str().c_str());
      return st;
    }
    if (oracle_out.empty()) {
      char* text = hwp_decomposition_to_string(hd.d);
      std::fputs(text ? text : "", stdout);
      hwp_string_free(text);
    } else {
      if (int rc = write_out(hd, oracle_out); rc != HWP_OK) return rc;
      print_ok(hd);
    }
    return HWP_OK;
  }
  return HWP_INVALID;
}
