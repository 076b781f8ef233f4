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

// Runs the command-line tool as a subprocess and checks output and exit codes.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(HWP_CLI_PATH) + " " + args + " 2>&1";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("hwp-cli-" + std::to_string(rd()) + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& s) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out << s;
}

}  // namespace

TEST_CASE("build then verify") {
  TempDir dir;
  const auto file = dir.path / "d.txt";
  auto b = run("build --x 3 --y 3 --r 10 --s 3 --out " + file.string());
  CHECK(b.code == 0);
  CHECK(b.out == "OK v=27 r=10 s=3\n");
  auto v = run("verify " + file.string());
  CHECK(v.code == 0);
  CHECK(v.out.rfind("PASS", 0) == 0);

  // Dropping one cycle line breaks the partition.
  std::string text = slurp(file);
  const auto first = text.find("\n(");
  const auto end = text.find('\n', first + 1);
  spit(dir.path / "cut.txt", text.substr(0, first) + text.substr(end));
  auto cut = run("verify " + (dir.path / "cut.txt").string());
  CHECK(cut.code == 1);
  CHECK(cut.out.rfind("FAIL", 0) == 0);

  spit(dir.path / "trunc.txt", "HWP v=27 graph=comp");
  CHECK(run("verify " + (dir.path / "trunc.txt").string()).code == 5);
  CHECK(run("verify " + (dir.path / "missing.txt").string()).code == 5);
}

TEST_CASE("build status codes") {
  auto e = run("build --x 3 --y 3 --r 12 --s 1");
  CHECK(e.code == 2);
  CHECK(e.out.find("s=1 and x=3") != std::string::npos);
  auto bad = run("build --x 3 --y 3 --r 10 --s 4");
  CHECK(bad.code == 5);
  auto open = run("build --x 2 --y 3 --r 5 --s 3");
  CHECK(open.code == 3);
  CHECK(run("build --x 3").code == 5);
  CHECK(run("frobnicate").code == 5);
  CHECK(run("--help").code == 0);
}

TEST_CASE("oracle subcommand") {
  auto none = run("oracle --complete 6 --minusF --m 3 --n 3 --r 2 --s 0");
  CHECK(none.code == 6);
  auto k6 = run("oracle --complete 6 --minusF --m 3 --n 6 --r 1 --s 1");
  CHECK(k6.code == 0);
  CHECK(k6.out.rfind("HWP v=6", 0) == 0);
  TempDir dir;
  auto e = run("oracle --equipartite 2,3 --m 3 --n 6 --r 0 --s 2 --out " + (dir.path / "e.txt").string());
  CHECK(e.code == 0);
  CHECK(run("verify " + (dir.path / "e.txt").string()).code == 0);
  CHECK(run("oracle --m 3 --n 3 --r 1 --s 0").code == 5);
}

TEST_CASE("table subcommand") {
  auto t = run("table --x 3 --y 3");
  CHECK(t.code == 0);
  CHECK(t.out.rfind("# (3,9)-HWP(27; r, s) with r+s=13\n", 0) == 0);
  CHECK(t.out.find("s=1 r=12 exception s=1 and x=3\n") != std::string::npos);
  int lines = 0;
  for (char c : t.out) lines += c == '\n';
  CHECK(lines == 15);
}
