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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hwp/composer.hpp"
#include "hwp/constructions.hpp"
#include "hwp/ingredients.hpp"
#include "hwp/search.hpp"
#include "hwp/text_format.hpp"
#include "hwp/verify.hpp"

using namespace hwp;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

fs::path fresh_dir(const std::string& tag) {
  std::random_device rd;
  auto p = fs::temp_directory_path() / ("hwp-acc-" + tag + "-" + std::to_string(rd()) + std::to_string(rd()));
  fs::create_directories(p);
  return p;
}

void save(const fs::path& dir, const std::string& name, const Decomposition& d) {
  if (dir.empty()) return;
  write_file(d, dir / name);
}

int single_cycle_factors(const Decomposition& d, int len) {
  int n = 0;
  for (const auto& f : d.factors)
    if (f.cycle_length() == len && static_cast<int>(f.cycles().size()) * len == d.v()) ++n;
  return n;
}

bool counts(const Decomposition& d, int short_len, int long_len, int r, int s) {
  const bool same = short_len == long_len;
  return verify(d).pass && d.r == r && d.s == s &&
         (same || (single_cycle_factors(d, short_len) == r && single_cycle_factors(d, long_len) == s));
}

// ---- criterion 1 -----------------------------------------------------------
Outcome odd_core(const fs::path& out) {
  Outcome o;
  for (int x : {3, 5, 7, 9})
    for (int s = 0; s <= x; ++s) {
      if (s == 1) continue;
      auto d = decompose_kx3_odd(x, s);
      int hamilton = 0;
      for (const auto& f : d.factors) hamilton += f.cycles().size() == 1 && f.cycle_length() == 3 * x;
      if (!verify(d).pass || hamilton != s || single_cycle_factors(d, 3) != x - s)
        o.fail("x=" + std::to_string(x) + " s=" + std::to_string(s));
      save(out, "odd-" + std::to_string(x) + "-" + std::to_string(s) + ".txt", d);
    }
  return o;
}

// ---- criterion 2 -----------------------------------------------------------
Outcome even_core(const fs::path& out) {
  Outcome o;
  for (int s : {0, 2, 3, 4}) {
    auto d = decompose_k43(s);
    if (!counts(d, 3, 6, 4 - s, s)) o.fail("K_(4:3) s=" + std::to_string(s));
    save(out, "k43-" + std::to_string(s) + ".txt", d);
  }
  for (int s = 0; s <= 12; ++s) {
    if (s == 1) continue;
    auto d = decompose_k4x3(3, s);
    if (!counts(d, 3, 18, 12 - s, s)) o.fail("K_(12:3) s=" + std::to_string(s));
    save(out, "k12x3-" + std::to_string(s) + ".txt", d);
  }
  return o;
}

// ---- criterion 3 -----------------------------------------------------------
Outcome gcd_law(const fs::path& out) {
  Outcome o;
  std::ostringstream log;
  for (int x : {3, 5, 7, 9})
    for (int i = 0; i < x; ++i)
      for (int j = 0; j < x; ++j) {
        const int g = std::gcd(x, std::abs(i - j));
        const int want = g == 0 ? x : g;
        const auto f = difference_factor(x, i, j);
        const int got = static_cast<int>(f.cycles().size());
        log << x << " " << i << " " << j << " " << got << "\n";
        if (got != want || f.cycle_length() * got != 3 * x)
          o.fail("x=" + std::to_string(x) + " i=" + std::to_string(i) + " j=" + std::to_string(j));
      }
  if (!out.empty()) std::ofstream(out / "gcd.txt", std::ios::binary) << log.str();
  return o;
}

// ---- criterion 4 -----------------------------------------------------------
Outcome full_family(const fs::path& out, const SearchBudget& budget) {
  Outcome o;
  for (auto [x, y] : std::vector<std::pair<int, int>>{{3, 3}, {5, 3}}) {
    const int total = factor_count_for(3 * x * y);
    for (int s = 0; s <= total; ++s) {
      const int r = total - s;
      auto res = solve(x, y, r, s, budget);
      const std::string tag = "(" + std::to_string(x) + "," + std::to_string(y) + ") s=" + std::to_string(s);
      if (x == 3 && s == 1) {
        if (res.status != SolveStatus::Exception) o.fail(tag + " should be an exception");
        continue;
      }
      if (res.status != SolveStatus::Ok) {
        o.fail(tag + ": " + res.message);
        continue;
      }
      if (!counts(*res.decomposition, 3, 3 * x, r, s)) o.fail(tag + " counts");
      save(out, "hwp-" + std::to_string(x) + "-" + std::to_string(y) + "-" + std::to_string(r) + "-" +
                    std::to_string(s) + ".txt",
           *res.decomposition);
    }
  }
  return o;
}

// ---- criterion 5 -----------------------------------------------------------
Outcome doubling_and_base(const SearchBudget& budget) {
  Outcome o;
  const auto k6 = GraphSpec::minus_one_factor(6);
  auto none = search_oracle(k6, 3, 6, 2, 0, budget);
  if (none.status != SearchStatus::Nonexistent) o.fail("K6-F (2,0) not certified nonexistent");
  for (auto [r, s] : std::vector<std::pair<int, int>>{{1, 1}, {0, 2}}) {
    auto res = search_oracle(k6, 3, 6, r, s, budget);
    if (res.status != SearchStatus::Found || !counts(*res.decomposition, 3, 6, r, s))
      o.fail("K6-F (" + std::to_string(r) + "," + std::to_string(s) + ")");
  }
  for (auto [r, s] : std::vector<std::pair<int, int>>{{1, 4}, {0, 5}}) {
    auto res = solve(2, 2, r, s, budget);
    const bool doubled = res.plan && res.plan->strategy == Strategy::Double;
    if (res.status != SolveStatus::Ok || !doubled || !counts(*res.decomposition, 3, 6, r, s))
      o.fail("doubling (" + std::to_string(r) + "," + std::to_string(s) + "): " + res.message);
  }
  const auto k12 = GraphSpec::minus_one_factor(12);
  for (int s = 1; s <= 5; ++s) {
    auto res = search_oracle(k12, 3, 6, 5 - s, s, budget);
    if (res.status != SearchStatus::Found || !counts(*res.decomposition, 3, 6, 5 - s, s))
      o.fail("K12-F oracle s=" + std::to_string(s) + ": " + to_string(res.status));
  }
  return o;
}

// ---- criterion 6 -----------------------------------------------------------
Outcome x2_planner(const SearchBudget& budget) {
  Outcome o;
  for (int s : {1, 2, 4, 5, 6, 7, 8}) {
    auto res = solve(2, 3, 8 - s, s, budget);
    if (res.status != SolveStatus::Ok || !counts(*res.decomposition, 3, 6, 8 - s, s))
      o.fail("s=" + std::to_string(s) + ": " + to_string(res.status) + " " + res.message);
  }
  const auto rows = table(2, 3);
  for (const auto& row : rows) {
    const bool should_open = row.s == 3;
    if ((row.status == PlanStatus::Open) != should_open) o.fail("table row s=" + std::to_string(row.s));
    if (should_open && row.note != "s in {3,...,3(y-1)/2}, x=2, y>=3 odd") o.fail("table note: " + row.note);
  }
  return o;
}

// ---- criterion 7 -----------------------------------------------------------
bool rejected(const std::string& text) {
  try {
    return !verify(parse_text(text)).pass;
  } catch (const std::exception&) {
    return true;
  }
}

Decomposition mutate(Decomposition d, std::mt19937& rng, int kind) {
  auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<unsigned>(n)); };
  int fi = pick(static_cast<int>(d.factors.size()));
  // A rename needs a vertex outside the cycle, so skip Hamilton factors.
  while (kind == 1 && d.factors[fi].cycles().size() < 2) fi = pick(static_cast<int>(d.factors.size()));
  auto cycles = d.factors[fi].cycles();
  const int len = d.factors[fi].cycle_length();
  if (kind == 0) {
    // Edge swap: exchange vertices between two cycles, or reorder a long one.
    if (cycles.size() >= 2) {
      int a = pick(static_cast<int>(cycles.size())), b;
      do b = pick(static_cast<int>(cycles.size()));
      while (b == a);
      auto va = cycles[a].vertices(), vb = cycles[b].vertices();
      std::swap(va[pick(len)], vb[pick(len)]);
      cycles[a] = Cycle(va);
      cycles[b] = Cycle(vb);
    } else {
      auto v = cycles[0].vertices();
      const int k = pick(len);
      std::swap(v[k], v[(k + 1) % len]);
      cycles[0] = Cycle(v);
    }
    d.factors[fi] = TwoFactor(d.v(), len, cycles);
  } else if (kind == 1) {
    // Vertex rename inside one cycle.
    const int c = pick(static_cast<int>(cycles.size()));
    auto v = cycles[c].vertices();
    Vertex repl;
    do repl = static_cast<Vertex>(pick(d.v()));
    while (std::find(v.begin(), v.end(), repl) != v.end());
    v[pick(len)] = repl;
    cycles[c] = Cycle(v);
    d.factors[fi] = TwoFactor(d.v(), len, cycles);
  } else {
    // Cycle deletion.
    cycles.erase(cycles.begin() + pick(static_cast<int>(cycles.size())));
    d.factors[fi] = TwoFactor(d.v(), len, cycles);
  }
  return d;
}

Outcome robustness(const SearchBudget& budget) {
  Outcome o;
  std::vector<Decomposition> pool{decompose_kx3_odd(5, 3), decompose_k43(2), decompose_k4x3(3, 5)};
  if (auto res = solve(3, 3, 10, 3, budget); res.decomposition) pool.push_back(*res.decomposition);
  if (auto res = solve(2, 2, 2, 3, budget); res.decomposition) pool.push_back(*res.decomposition);
  std::vector<std::string> texts;
  for (const auto& d : pool) {
    auto text = to_text(d);
    if (rejected(text)) o.fail("a base file does not pass");
    texts.push_back(std::move(text));
  }
  std::mt19937 rng(20260101);
  int caught = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int which = static_cast<int>(rng() % pool.size());
    const int kind = trial % 3;
    std::string text;
    try {
      text = to_text(mutate(parse_text(texts[which]), rng, kind));
    } catch (const std::exception&) {
      ++caught;  // the mutation itself produced an unrepresentable object
      continue;
    }
    if (rejected(text))
      ++caught;
    else
      o.fail("mutation " + std::to_string(trial) + " (kind " + std::to_string(kind) + ") passed");
  }
  o.detail = o.pass ? std::to_string(caught) + "/1000 rejected" : o.detail;
  return o;
}

// ---- criterion 8 -----------------------------------------------------------
std::map<std::string, std::string> snapshot(const fs::path& dir) {
  std::map<std::string, std::string> out;
  for (const auto& e : fs::directory_iterator(dir)) {
    std::ifstream in(e.path(), std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    out[e.path().filename().string()] = ss.str();
  }
  return out;
}

struct Report {
  bool all = true;
  void line(int n, const std::string& name, const Outcome& o, double secs, double limit) {
    bool pass = o.pass;
    std::string detail = o.detail;
    if (pass && limit > 0 && secs > limit) {
      pass = false;
      detail = "over the " + std::to_string(static_cast<int>(limit)) + " s limit";
    }
    all = all && pass;
    std::printf("criterion %d %-28s %s  %.1fs%s%s\n", n, name.c_str(), pass ? "PASS" : "FAIL", secs,
                detail.empty() ? "" : "  ", detail.c_str());
    std::fflush(stdout);
  }
};

}  // namespace

int main() {
  SearchBudget budget;
  budget.seconds = 600;
  const fs::path run_a = fresh_dir("out-a"), run_b = fresh_dir("out-b");
  const fs::path cache_a = fresh_dir("cache-a"), cache_b = fresh_dir("cache-b");
  Report rep;

  auto t = Clock::now();
  auto c1 = odd_core(run_a);
  rep.line(1, "odd-x core", c1, since(t), 5);

  t = Clock::now();
  auto c2 = even_core(run_a);
  rep.line(2, "even-x core", c2, since(t), 10);

  t = Clock::now();
  auto c3 = gcd_law(run_a);
  rep.line(3, "gcd cycle law", c3, since(t), 5);

  // Criterion 4: a cold run fills the cache, a warm run is timed.
  SearchBudget b4 = budget;
  b4.cache_root = cache_a.string();
  clear_memo();
  t = Clock::now();
  auto c4 = full_family(run_a, b4);
  const double cold4 = since(t);
  clear_memo();
  t = Clock::now();
  auto warm4 = full_family({}, b4);
  const double hot4 = since(t);
  if (!warm4.pass) c4.fail("warm run: " + warm4.detail);
  if (c4.pass) c4.detail = "cold run " + std::to_string(static_cast<int>(cold4)) + " s";
  rep.line(4, "full-instance family", c4, hot4, 120);

  const fs::path cache_shared = fresh_dir("cache-56");
  SearchBudget b56 = budget;
  b56.cache_root = cache_shared.string();
  clear_memo();
  t = Clock::now();
  auto c5 = doubling_and_base(b56);
  rep.line(5, "doubling and base cases", c5, since(t), 0);

  clear_memo();
  t = Clock::now();
  auto c6 = x2_planner(b56);
  const double cold6 = since(t);
  clear_memo();
  t = Clock::now();
  auto warm6 = x2_planner(b56);
  const double hot6 = since(t);
  if (!warm6.pass) c6.fail("warm run: " + warm6.detail);
  if (c6.pass) c6.detail = "cold run " + std::to_string(static_cast<int>(cold6)) + " s";
  rep.line(6, "x=2 odd-y planner", c6, hot6, 120);

  clear_memo();
  t = Clock::now();
  auto c7 = robustness(b56);
  rep.line(7, "verifier robustness", c7, since(t), 30);

  // Criterion 8: repeat criteria 1-4 into a second clean output and cache.
  t = Clock::now();
  SearchBudget b8 = budget;
  b8.cache_root = cache_b.string();
  clear_memo();
  odd_core(run_b);
  even_core(run_b);
  gcd_law(run_b);
  full_family(run_b, b8);
  Outcome c8;
  const auto a = snapshot(run_a), b = snapshot(run_b);
  if (a.empty()) c8.fail("no output files");
  if (a.size() != b.size()) c8.fail("file sets differ");
  for (const auto& [name, bytes] : a) {
    auto it = b.find(name);
    if (it == b.end() || it->second != bytes) c8.fail("differs: " + name);
  }
  if (c8.pass) c8.detail = std::to_string(a.size()) + " files identical";
  rep.line(8, "determinism", c8, since(t), 0);

  std::error_code ec;
  for (const auto& p : {run_a, run_b, cache_a, cache_b, cache_shared}) fs::remove_all(p, ec);
  std::printf("%s\n", rep.all ? "ALL PASS" : "SOME CRITERIA FAILED");
  return rep.all ? 0 : 1;
}
