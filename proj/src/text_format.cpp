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

#include "hwp/text_format.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace hwp {

namespace {

std::string graph_token(const GraphSpec& g) {
  switch (g.kind) {
    case GraphKind::Complete:
      return "complete";
    case GraphKind::CompleteMinusOneFactor:
      return "minusF";
    case GraphKind::Equipartite:
      return "equipartite:" + std::to_string(g.h) + "," + std::to_string(g.u);
  }
  return "";
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

int to_int(std::string_view tok, int line) {
  int value = 0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc() || ptr != end) throw ParseError(line, "expected integer, got '" + std::string(tok) + "'");
  return value;
}

}  // namespace

std::string to_text(const Decomposition& d) {
  std::ostringstream os;
  os << "HWP v=" << d.graph.v << " graph=" << graph_token(d.graph) << " m=" << d.m << " n=" << d.n
     << " r=" << d.r << " s=" << d.s << '\n';
  for (std::size_t f = 0; f < d.factors.size(); ++f) {
    os << "FACTOR " << f << " len=" << d.factors[f].cycle_length() << '\n';
    for (const auto& c : d.factors[f].cycles()) {
      os << '(';
      for (std::size_t k = 0; k < c.size(); ++k) os << (k ? " " : "") << c.vertices()[k];
      os << ")\n";
    }
  }
  if (d.one_factor) {
    os << "ONEFACTOR\n";
    for (const auto& [a, b] : d.one_factor->edges) os << a << ' ' << b << '\n';
  }
  return os.str();
}

Decomposition parse_text(std::string_view text) {
  std::vector<std::string_view> lines;
  {
    std::size_t start = 0;
    while (start < text.size()) {
      std::size_t nl = text.find('\n', start);
      if (nl == std::string_view::npos) nl = text.size();
      lines.push_back(text.substr(start, nl - start));
      start = nl + 1;
    }
  }
  if (lines.empty()) throw ParseError(1, "empty input");

  auto header = split_ws(lines[0]);
  if (header.size() != 7 || header[0] != "HWP") throw ParseError(1, "malformed header");
  std::map<std::string, std::string_view> kv;
  for (std::size_t k = 1; k < header.size(); ++k) {
    auto eq = header[k].find('=');
    if (eq == std::string_view::npos) throw ParseError(1, "expected key=value, got '" + std::string(header[k]) + "'");
    kv[std::string(header[k].substr(0, eq))] = header[k].substr(eq + 1);
  }
  for (const char* key : {"v", "graph", "m", "n", "r", "s"})
    if (!kv.count(key)) throw ParseError(1, std::string("header missing ") + key);

  Decomposition d;
  const int v = to_int(kv["v"], 1);
  const std::string_view gtok = kv["graph"];
  try {
    if (gtok == "complete") {
      d.graph = GraphSpec::complete(v);
    } else if (gtok == "minusF") {
      d.graph = GraphSpec::minus_one_factor(v);
    } else if (gtok.starts_with("equipartite:")) {
      auto rest = gtok.substr(12);
      auto comma = rest.find(',');
      if (comma == std::string_view::npos) throw ParseError(1, "equipartite needs h,u");
      d.graph = GraphSpec::equipartite(to_int(rest.substr(0, comma), 1), to_int(rest.substr(comma + 1), 1));
      if (d.graph.v != v) throw ParseError(1, "equipartite h*u does not match v");
    } else {
      throw ParseError(1, "unknown graph '" + std::string(gtok) + "'");
    }
  } catch (const ParameterError& e) {
    throw ParseError(1, e.what());
  }
  d.m = to_int(kv["m"], 1);
  d.n = to_int(kv["n"], 1);
  d.r = to_int(kv["r"], 1);
  d.s = to_int(kv["s"], 1);

  enum class Mode { Start, Factor, OneF } mode = Mode::Start;
  int cur_len = 0;
  std::vector<Cycle> cur;
  std::vector<Edge> f_edges;
  auto flush = [&]() {
    if (mode == Mode::Factor) d.factors.emplace_back(v, cur_len, std::move(cur));
    cur.clear();
  };
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const int lno = static_cast<int>(li) + 1;
    auto toks = split_ws(lines[li]);
    if (toks.empty()) continue;
    if (toks[0] == "FACTOR") {
      if (mode == Mode::OneF) throw ParseError(lno, "FACTOR after ONEFACTOR");
      flush();
      if (toks.size() != 3 || !toks[2].starts_with("len=")) throw ParseError(lno, "malformed FACTOR line");
      if (to_int(toks[1], lno) != static_cast<int>(d.factors.size()))
        throw ParseError(lno, "factor index out of sequence");
      cur_len = to_int(toks[2].substr(4), lno);
      mode = Mode::Factor;
    } else if (toks[0] == "ONEFACTOR") {
      if (mode == Mode::OneF) throw ParseError(lno, "duplicate ONEFACTOR");
      flush();
      mode = Mode::OneF;
    } else if (mode == Mode::Factor) {
      std::string_view line = lines[li];
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
      while (!line.empty() && line.front() == ' ') line.remove_prefix(1);
      if (line.size() < 2 || line.front() != '(' || line.back() != ')')
        throw ParseError(lno, "cycle must be parenthesized");
      std::vector<Vertex> verts;
      for (auto t : split_ws(line.substr(1, line.size() - 2))) verts.push_back(to_int(t, lno));
      try {
        cur.emplace_back(std::move(verts));
      } catch (const StructuralError& e) {
        throw ParseError(lno, e.what());
      }
    } else if (mode == Mode::OneF) {
      if (toks.size() != 2) throw ParseError(lno, "one-factor line must be 'a b'");
      f_edges.emplace_back(to_int(toks[0], lno), to_int(toks[1], lno));
    } else {
      throw ParseError(lno, "content before first FACTOR");
    }
  }
  flush();
  if (mode == Mode::OneF) d.one_factor = OneFactor::from_edges(std::move(f_edges));
  return d;
}

void write_file(const Decomposition& d, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << to_text(d);
  if (!out) throw std::runtime_error("write to " + path.string() + " failed");
}

Decomposition read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str());
}

}  // namespace hwp
