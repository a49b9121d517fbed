// Copyright 2026 The ART Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "art/artwork.hpp"

#include <zlib.h>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <utility>
#include <vector>

#include "art/call_graph.hpp"
#include "art/cfg.hpp"
#include "art/error.hpp"
#include "art/producer.hpp"

namespace art {

namespace {

constexpr std::string_view kHeader = "ART/1";
constexpr std::string_view kNaiveHeader = "NAIVE/1";
constexpr std::string_view kIndent = "  ";

std::string key_text(const LoopKey& key) {
  return "m:" + key.method + " l:" + std::to_string(key.label);
}

std::string key_text(const std::string& method) { return "m:" + method; }

std::string body_text(const PointsToGraph& g) {
  std::string out;
  for (const auto& line : render_lines(g)) {
    out += kIndent;
    out += line;
    out += '\n';
  }
  return out;
}

struct Section {
  std::string_view name;
  std::vector<std::pair<std::string, const PointsToGraph*>> entries;
};

template <typename Map>
Section make_section(std::string_view name, const Map& map) {
  Section s{name, {}};
  for (const auto& [key, graph] : map) s.entries.emplace_back(key_text(key), &graph);
  std::sort(s.entries.begin(), s.entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return s;
}

std::string encode_with(const Artwork& a, bool dedup) {
  Section sections[] = {make_section("loop", a.i_loop), make_section("in", a.i_in),
                        make_section("out", a.i_out)};

  // Greedy pool: a graph referenced at least twice is shared when that
  // saves bytes. Candidates are taken in order of their rendered body.
  std::map<std::string, std::size_t> pool_index;
  std::vector<const std::string*> pool;
  if (dedup) {
    std::map<std::string, std::size_t> refs;
    for (const auto& s : sections) {
      for (const auto& [key, g] : s.entries) {
        if (!g->empty()) ++refs[body_text(*g)];
      }
    }
    for (const auto& [body, n] : refs) {
      if (n < 2) continue;
      const std::string ref = " g" + std::to_string(pool.size());
      const std::size_t inline_cost = n * body.size();
      // The first shared graph also pays for the section header.
      const std::size_t header = pool.empty() ? sizeof("[pool]\n") - 1 : 0;
      const std::size_t pooled_cost =
          n * ref.size() + ref.size() + 1 + body.size() + header;
      if (pooled_cost >= inline_cost) continue;
      auto [it, inserted] = pool_index.emplace(body, pool.size());
      pool.push_back(&it->first);
    }
  }

  std::string out(kHeader);
  out += '\n';
  if (!pool.empty()) {
    out += "[pool]\n";
    for (std::size_t k = 0; k < pool.size(); ++k) {
      out += "g" + std::to_string(k) + ":\n";
      out += *pool[k];
    }
  }
  for (const auto& s : sections) {
    out += "[";
    out += s.name;
    out += "]\n";
    for (const auto& [key, g] : s.entries) {
      std::string body = body_text(*g);
      auto it = pool_index.find(body);
      if (it != pool_index.end()) {
        out += key + " = g" + std::to_string(it->second) + "\n";
      } else {
        out += key + " =\n";
        out += body;
      }
    }
  }
  return out;
}

[[noreturn]] void malformed(std::size_t line, const std::string& what) {
  throw MalformedArtwork("artwork line " + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> split_lines(std::string_view bytes,
                                          std::string_view what) {
  if (bytes.empty() || bytes.back() != '\n') {
    throw MalformedArtwork(std::string(what) + " does not end with a newline");
  }
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < bytes.size()) {
    const std::size_t end = bytes.find('\n', start);
    lines.push_back(bytes.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

std::optional<std::size_t> parse_pool_ref(std::string_view text) {
  if (text.size() < 2 || text[0] != 'g') return std::nullopt;
  const auto digits = text.substr(1);
  if (digits.size() > 1 && digits[0] == '0') return std::nullopt;
  std::size_t k = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) return std::nullopt;
  return k;
}

bool is_identifier(std::string_view text) {
  if (text.empty() || std::isdigit(static_cast<unsigned char>(text[0]))) return false;
  return std::all_of(text.begin(), text.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

/// Reads the edge lines that follow position i into g.
void read_edges(const std::vector<std::string_view>& lines, std::size_t& i,
                PointsToGraph& g) {
  while (i < lines.size() && lines[i].substr(0, kIndent.size()) == kIndent) {
    auto edge = parse_edge(lines[i].substr(kIndent.size()));
    if (!edge) malformed(i + 1, "bad edge '" + std::string(lines[i]) + "'");
    if (!g.add(*edge)) malformed(i + 1, "duplicate edge");
    ++i;
  }
}

}  // namespace

std::string encode(const Artwork& a) { return encode_with(a, a.dedup); }

Artwork parse_artwork(std::string_view bytes) {
  const auto lines = split_lines(bytes, "artwork");
  if (lines[0] != kHeader) malformed(1, "expected header 'ART/1'");
  Artwork a;
  std::vector<PointsToGraph> pool;
  std::size_t i = 1;

  if (i < lines.size() && lines[i] == "[pool]") {
    ++i;
    a.dedup = true;
    while (i < lines.size() && !lines[i].empty() && lines[i][0] == 'g') {
      const auto line = lines[i];
      if (line.back() != ':') malformed(i + 1, "expected 'g<k>:'");
      auto k = parse_pool_ref(line.substr(0, line.size() - 1));
      if (!k || *k != pool.size()) malformed(i + 1, "pool index out of sequence");
      ++i;
      PointsToGraph g;
      read_edges(lines, i, g);
      pool.push_back(std::move(g));
    }
  }

  auto entry_graph = [&](std::string_view rest, std::size_t line_no) {
    PointsToGraph g;
    if (rest.empty()) {
      ++i;
      read_edges(lines, i, g);
      return g;
    }
    if (rest[0] != ' ') malformed(line_no, "expected ' g<k>' or end of line");
    auto k = parse_pool_ref(rest.substr(1));
    if (!k || *k >= pool.size()) malformed(line_no, "unknown pool reference");
    ++i;
    return pool[*k];
  };

  for (std::string_view section : {"[loop]", "[in]", "[out]"}) {
    if (i >= lines.size() || lines[i] != section) {
      malformed(i + 1, "expected section " + std::string(section));
    }
    ++i;
    while (i < lines.size() && !lines[i].empty() && lines[i][0] != '[') {
      const std::size_t line_no = i + 1;
      const auto line = lines[i];
      const auto eq = line.find(" =");
      if (line.substr(0, 2) != "m:" || eq == std::string_view::npos) {
        malformed(line_no, "expected 'm:<method> ... ='");
      }
      const auto key = line.substr(2, eq - 2);
      const auto rest = line.substr(eq + 2);
      if (section == "[loop]") {
        const auto space = key.find(" l:");
        if (space == std::string_view::npos) malformed(line_no, "expected ' l:<label>'");
        const auto method = key.substr(0, space);
        const auto digits = key.substr(space + 3);
        int label = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), label);
        if (!is_identifier(method) || ec != std::errc() ||
            ptr != digits.data() + digits.size() || label <= 0 || digits[0] == '0') {
          malformed(line_no, "bad loop key");
        }
        LoopKey lk{std::string(method), label};
        if (a.i_loop.count(lk) != 0) malformed(line_no, "duplicate entry");
        a.i_loop.emplace(std::move(lk), entry_graph(rest, line_no));
      } else {
        if (!is_identifier(key)) malformed(line_no, "bad method name");
        auto& map = section == "[in]" ? a.i_in : a.i_out;
        if (map.count(std::string(key)) != 0) malformed(line_no, "duplicate entry");
        map.emplace(std::string(key), entry_graph(rest, line_no));
      }
    }
  }
  if (i != lines.size()) malformed(i + 1, "unexpected content after [out]");
  return a;
}

void validate(const Artwork& a, const Program& p) {
  const CallGraph cg = CallGraph::build(p);
  std::map<std::string, ControlFlowGraph> cfgs;
  auto method = [&](const std::string& name, const std::string& where) -> const Method& {
    const Method* m = p.find(name);
    if (m == nullptr) throw UnknownReference(where + ": unknown method '" + name + "'");
    return *m;
  };
  auto check_object = [&](const ObjectId& o, const std::string& where) {
    if (o.is_null()) return;
    const Method& m = method(o.method, where);
    if (o.kind == ObjectId::Kind::kPlaceholder) {
      if (static_cast<std::size_t>(o.index) >= m.params().size()) {
        throw UnknownReference(where + ": no parameter " + std::to_string(o.index) +
                               " in '" + m.name() + "'");
      }
      return;
    }
    const Statement* s = m.find_label(o.index);
    if (s == nullptr || s->kind != StmtKind::kAlloc) {
      throw UnknownReference(where + ": " + render(o) + " is not an allocation site");
    }
  };
  auto check_graph = [&](const PointsToGraph& g, const std::string& where) {
    for (const auto& e : g.var_edges()) {
      const Method& m = method(e.var.method, where);
      if (!e.var.is_ret() &&
          (e.var.slot < 0 || static_cast<std::size_t>(e.var.slot) >= m.variable_count())) {
        throw UnknownReference(where + ": no slot " + std::to_string(e.var.slot) +
                               " in '" + m.name() + "'");
      }
      check_object(e.target, where);
    }
    for (const auto& e : g.field_edges()) {
      check_object(e.source, where);
      check_object(e.target, where);
    }
  };

  for (const auto& [key, g] : a.i_loop) {
    const std::string where = "[loop] " + key_text(key);
    const Method& m = method(key.method, where);
    auto it = cfgs.find(m.name());
    if (it == cfgs.end()) it = cfgs.emplace(m.name(), ControlFlowGraph::build(m)).first;
    auto index = m.index_of_label(key.label);
    if (!index || !it->second.is_loop_header(*index)) {
      throw UnknownReference(where + ": label is not a loop header");
    }
    check_graph(g, where);
  }
  for (const auto& [name, g] : a.i_in) {
    const std::string where = "[in] " + key_text(name);
    method(name, where);
    check_graph(g, where);
  }
  for (const auto& [name, g] : a.i_out) {
    const std::string where = "[out] " + key_text(name);
    method(name, where);
    if (!cg.in_cyclic_scc(name)) {
      throw UnknownReference(where + ": method is not recursive");
    }
    check_graph(g, where);
  }
}

Artwork decode(std::string_view bytes, const Program& p) {
  Artwork a = parse_artwork(bytes);
  validate(a, p);
  return a;
}

std::string naive_encode(const AnalysisResult& r) {
  std::string out(kNaiveHeader);
  out += '\n';
  for (const auto& [point, g] : r.out) {
    if (point.kind != ProgramPoint::Kind::kStmt) continue;
    out += render(point);
    out += '\n';
    out += body_text(g);
  }
  return out;
}

AnalysisResult parse_naive(std::string_view bytes) {
  const auto lines = split_lines(bytes, "results dump");
  if (lines[0] != kNaiveHeader) malformed(1, "expected header 'NAIVE/1'");
  AnalysisResult r;
  std::size_t i = 1;
  while (i < lines.size()) {
    auto point = parse_point(lines[i]);
    if (!point) malformed(i + 1, "expected a program point");
    if (r.out.count(*point) != 0) malformed(i + 1, "duplicate program point");
    ++i;
    PointsToGraph g;
    read_edges(lines, i, g);
    r.out.emplace(std::move(*point), std::move(g));
  }
  return r;
}

namespace {

std::size_t compressed_size(const std::string& data) {
  uLongf size = compressBound(static_cast<uLong>(data.size()));
  std::vector<Bytef> buffer(size);
  compress2(buffer.data(), &size, reinterpret_cast<const Bytef*>(data.data()),
            static_cast<uLong>(data.size()), Z_BEST_COMPRESSION);
  return size;
}

}  // namespace

ArtworkStats stats(const Program& p, const Artwork& a, const AnalysisResult& r) {
  (void)p;
  ArtworkStats s;
  const std::string art = encode(a);
  const std::string naive = naive_encode(r);
  s.bytes_art = art.size() - encode(Artwork{}).size();
  s.bytes_naive = naive.size() - (kNaiveHeader.size() + 1);
  s.entries_loop = a.i_loop.size();
  s.entries_in = a.i_in.size();
  s.entries_out = a.i_out.size();
  s.dedup_savings = encode_with(a, false).size() - encode_with(a, true).size();
  if (s.bytes_art > 0 || s.bytes_naive > 0) {
    s.compressed_art = compressed_size(art);
    s.compressed_naive = compressed_size(naive);
  }
  return s;
}

}  // namespace art
