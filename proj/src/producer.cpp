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

#include "art/producer.hpp"

#include <cctype>
#include <charconv>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "art/call_graph.hpp"
#include "art/cfg.hpp"
#include "art/error.hpp"

namespace art {

std::string render(const ProgramPoint& point) {
  std::string out = "m:" + point.method;
  switch (point.kind) {
    case ProgramPoint::Kind::kEntry: return out + " entry";
    case ProgramPoint::Kind::kExit: return out + " exit";
    case ProgramPoint::Kind::kStmt: return out + " l:" + std::to_string(point.label);
  }
  return out;
}

std::optional<ProgramPoint> parse_point(std::string_view text) {
  if (text.substr(0, 2) != "m:") return std::nullopt;
  text.remove_prefix(2);
  const auto space = text.find(' ');
  if (space == std::string_view::npos || space == 0) return std::nullopt;
  std::string method(text.substr(0, space));
  for (char c : method) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return std::nullopt;
  }
  const auto rest = text.substr(space + 1);
  if (rest == "entry") return ProgramPoint::entry(std::move(method));
  if (rest == "exit") return ProgramPoint::exit(std::move(method));
  if (rest.substr(0, 2) != "l:") return std::nullopt;
  const auto digits = rest.substr(2);
  int label = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), label);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || label <= 0 ||
      digits[0] == '0') {
    return std::nullopt;
  }
  return ProgramPoint::stmt(std::move(method), label);
}

const PointsToGraph& AnalysisResult::at(const ProgramPoint& point) const {
  auto it = out.find(point);
  if (it == out.end()) {
    throw std::out_of_range("no result at " + render(point));
  }
  return it->second;
}

bool same_results(const AnalysisResult& a, const AnalysisResult& b) {
  return a.out == b.out && a.in_summary == b.in_summary &&
         a.out_summary == b.out_summary;
}

std::optional<std::string> first_difference(const AnalysisResult& a,
                                            const AnalysisResult& b) {
  for (const auto& [point, g] : a.out) {
    auto it = b.out.find(point);
    if (it == b.out.end()) return render(point) + ": missing on the right";
    if (it->second != g) return render(point) + ": graphs differ";
  }
  for (const auto& [point, g] : b.out) {
    if (a.out.count(point) == 0) return render(point) + ": missing on the left";
  }
  if (a.in_summary != b.in_summary) return std::string("IN-summaries differ");
  if (a.out_summary != b.out_summary) return std::string("OUT-summaries differ");
  return std::nullopt;
}

namespace {

/// Per-method analysis state shared by the engines.
struct Frame {
  const Method* method = nullptr;
  ControlFlowGraph cfg;
  std::vector<std::size_t> order;   // statement indices in topo order
  std::vector<std::size_t> pos_of;  // statement index -> position in order
  std::vector<PointsToGraph> out;
  std::vector<const PointsToGraph*> header_seed;
  PointsToGraph exit;

  explicit Frame(const Method& m)
      : method(&m), cfg(ControlFlowGraph::build(m)) {
    order = cfg.statement_order();
    pos_of.assign(order.size(), 0);
    for (std::size_t k = 0; k < order.size(); ++k) pos_of[order[k]] = k;
    out.assign(order.size(), {});
    header_seed.assign(order.size(), nullptr);
  }

  PointsToGraph in_of(std::size_t node, const PointsToGraph& entry) const {
    PointsToGraph in;
    for (std::size_t p : cfg.predecessors(node)) {
      in.meet_with(p == cfg.entry() ? entry : out[p]);
    }
    if (node < header_seed.size() && header_seed[node] != nullptr) {
      for (const auto& e : header_seed[node]->field_edges()) in.add(e);
    }
    return in;
  }
};

void store(const Frame& f, const PointsToGraph& entry, AnalysisResult& r) {
  const std::string& name = f.method->name();
  r.out[ProgramPoint::entry(name)] = entry;
  for (std::size_t i = 0; i < f.out.size(); ++i) {
    r.out[ProgramPoint::stmt(name, f.method->body()[i].label)] = f.out[i];
  }
  r.out[ProgramPoint::exit(name)] = f.exit;
}

void require_call_free(const Method& m) {
  for (const auto& s : m.body()) {
    if (s.kind == StmtKind::kCall) {
      throw std::invalid_argument("method '" + m.name() +
                                  "' contains calls; use the inter-procedural analysis");
    }
  }
}

}  // namespace

AnalysisResult analyze_intra(const Method& m,
                             const std::optional<PointsToGraph>& entry_graph) {
  require_call_free(m);
  Frame f(m);
  const PointsToGraph entry = entry_graph ? *entry_graph : placeholder_entry(m);
  AnalysisResult r;
  std::set<std::size_t> work;
  for (std::size_t k = 0; k < f.order.size(); ++k) work.insert(k);
  while (!work.empty()) {
    const std::size_t i = f.order[*work.begin()];
    work.erase(work.begin());
    PointsToGraph next = transfer(m, m.body()[i], f.in_of(i, entry));
    ++r.iteration_count;
    if (next != f.out[i]) {
      f.out[i] = std::move(next);
      for (std::size_t s : f.cfg.successors(i)) {
        if (s < f.order.size()) work.insert(f.pos_of[s]);
      }
    }
  }
  f.exit = f.in_of(f.cfg.exit(), entry);
  store(f, entry, r);
  r.in_summary[m.name()] = entry;
  r.out_summary[m.name()] = out_summary(f.exit);
  return r;
}

AnalysisResult analyze_inter(const Program& p, const Seeds& seeds) {
  const CallGraph cg = CallGraph::build(p);
  const auto& methods = p.methods();
  const std::size_t count = methods.size();

  std::vector<Frame> frames;
  frames.reserve(count);
  for (const auto& m : methods) frames.emplace_back(m);

  std::vector<PointsToGraph> in_sum(count);
  std::vector<PointsToGraph> out_sum(count);
  for (std::size_t k = 0; k < count; ++k) {
    auto it = seeds.in.find(methods[k].name());
    if (it != seeds.in.end()) in_sum[k] = it->second;
    for (std::size_t i = 0; i < methods[k].body().size(); ++i) {
      auto h = seeds.header.find(LoopKey{methods[k].name(), methods[k].body()[i].label});
      if (h != seeds.header.end() && frames[k].cfg.is_loop_header(i)) {
        frames[k].header_seed[i] = &h->second;
      }
    }
  }

  // Call sites that may invoke each method, as (caller index, statement).
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> callers(count);
  for (std::size_t k = 0; k < count; ++k) {
    const auto& body = methods[k].body();
    for (std::size_t i = 0; i < body.size(); ++i) {
      if (body[i].kind != StmtKind::kCall) continue;
      for (const auto& t : body[i].targets) callers[*p.index_of(t)].emplace_back(k, i);
    }
  }

  std::set<std::pair<std::size_t, std::size_t>> method_work;  // (scc rank, index)
  std::vector<std::set<std::size_t>> dirty(count);
  auto schedule = [&](std::size_t k) {
    method_work.emplace(cg.scc_of(methods[k].name()), k);
  };
  for (std::size_t k = 0; k < count; ++k) {
    for (std::size_t pos = 0; pos < frames[k].order.size(); ++pos) dirty[k].insert(pos);
    schedule(k);
  }

  AnalysisResult r;
  while (!method_work.empty()) {
    const std::size_t k = method_work.begin()->second;
    method_work.erase(method_work.begin());
    Frame& f = frames[k];
    const Method& m = methods[k];
    std::set<std::size_t> work;
    work.swap(dirty[k]);
    while (!work.empty()) {
      const std::size_t i = f.order[*work.begin()];
      work.erase(work.begin());
      const Statement& s = m.body()[i];
      const PointsToGraph in = f.in_of(i, in_sum[k]);
      PointsToGraph next;
      if (s.kind == StmtKind::kCall) {
        PointsToGraph summary;
        for (const auto& target : s.targets) {
          const std::size_t t = *p.index_of(target);
          if (in_sum[t].meet_with(project_in(in, s, m, methods[t]))) {
            if (!frames[t].order.empty()) dirty[t].insert(frames[t].pos_of[0]);
            schedule(t);
          }
          summary.meet_with(out_sum[t]);
        }
        next = project_out(summary, s, m, in);
      } else {
        next = transfer(m, s, in);
      }
      ++r.iteration_count;
      if (next != f.out[i]) {
        f.out[i] = std::move(next);
        for (std::size_t succ : f.cfg.successors(i)) {
          if (succ < f.order.size()) work.insert(f.pos_of[succ]);
        }
      }
    }
    // A self-call may have grown this method's own IN-summary meanwhile;
    // stale statements were re-marked dirty and the method rescheduled.
    f.exit = f.in_of(f.cfg.exit(), in_sum[k]);
    PointsToGraph summary = out_summary(f.exit);
    if (summary != out_sum[k]) {
      out_sum[k] = std::move(summary);
      for (const auto& [caller, stmt] : callers[k]) {
        dirty[caller].insert(frames[caller].pos_of[stmt]);
        schedule(caller);
      }
    }
  }

  for (std::size_t k = 0; k < count; ++k) {
    store(frames[k], in_sum[k], r);
    r.in_summary[methods[k].name()] = in_sum[k];
    r.out_summary[methods[k].name()] = out_sum[k];
  }
  return r;
}

AnalysisResult chaotic_oracle(const Program& p) {
  const auto& methods = p.methods();
  const std::size_t count = methods.size();
  std::vector<Frame> frames;
  frames.reserve(count);
  for (const auto& m : methods) frames.emplace_back(m);
  std::vector<PointsToGraph> in_sum(count);
  std::vector<PointsToGraph> out_sum(count);

  AnalysisResult r;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t k = 0; k < count; ++k) {
      Frame& f = frames[k];
      const Method& m = methods[k];
      for (std::size_t i = 0; i < m.body().size(); ++i) {
        const Statement& s = m.body()[i];
        const PointsToGraph in = f.in_of(i, in_sum[k]);
        PointsToGraph next;
        if (s.kind == StmtKind::kCall) {
          PointsToGraph summary;
          for (const auto& target : s.targets) {
            const std::size_t t = *p.index_of(target);
            changed |= in_sum[t].meet_with(project_in(in, s, m, methods[t]));
            summary.meet_with(out_sum[t]);
          }
          next = project_out(summary, s, m, in);
        } else {
          next = transfer(m, s, in);
        }
        ++r.iteration_count;
        if (next != f.out[i]) {
          f.out[i] = std::move(next);
          changed = true;
        }
      }
      f.exit = f.in_of(f.cfg.exit(), in_sum[k]);
      PointsToGraph summary = out_summary(f.exit);
      if (summary != out_sum[k]) {
        out_sum[k] = std::move(summary);
        changed = true;
      }
    }
  }
  for (std::size_t k = 0; k < count; ++k) {
    store(frames[k], in_sum[k], r);
    r.in_summary[methods[k].name()] = in_sum[k];
    r.out_summary[methods[k].name()] = out_sum[k];
  }
  return r;
}

AnalysisResult chaotic_oracle_intra(const Method& m) {
  require_call_free(m);
  Frame f(m);
  const PointsToGraph entry = placeholder_entry(m);
  AnalysisResult r;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < m.body().size(); ++i) {
      PointsToGraph next = transfer(m, m.body()[i], f.in_of(i, entry));
      ++r.iteration_count;
      if (next != f.out[i]) {
        f.out[i] = std::move(next);
        changed = true;
      }
    }
  }
  f.exit = f.in_of(f.cfg.exit(), entry);
  store(f, entry, r);
  r.in_summary[m.name()] = entry;
  r.out_summary[m.name()] = out_summary(f.exit);
  return r;
}

std::optional<std::string> check_flow_equations(const Program& p,
                                                const AnalysisResult& r) {
  auto lookup = [&](const auto& map, const std::string& key)
      -> const PointsToGraph* {
    auto it = map.find(key);
    return it == map.end() ? nullptr : &it->second;
  };
  for (const auto& m : p.methods()) {
    const std::string& name = m.name();
    const PointsToGraph* in_sum = lookup(r.in_summary, name);
    const PointsToGraph* out_sum = lookup(r.out_summary, name);
    if (in_sum == nullptr || out_sum == nullptr) return name + ": missing summary";
    auto entry_it = r.out.find(ProgramPoint::entry(name));
    if (entry_it == r.out.end() || entry_it->second != *in_sum) {
      return name + ": entry graph differs from the IN-summary";
    }
    Frame f(m);
    for (std::size_t i = 0; i < m.body().size(); ++i) {
      auto it = r.out.find(ProgramPoint::stmt(name, m.body()[i].label));
      if (it == r.out.end()) return render(ProgramPoint::stmt(name, m.body()[i].label)) + ": missing";
      f.out[i] = it->second;
    }
    for (std::size_t i = 0; i < m.body().size(); ++i) {
      const Statement& s = m.body()[i];
      const PointsToGraph in = f.in_of(i, *in_sum);
      PointsToGraph expected;
      if (s.kind == StmtKind::kCall) {
        PointsToGraph summary;
        for (const auto& target : s.targets) {
          const Method& callee = p.method(target);
          const PointsToGraph* callee_in = lookup(r.in_summary, target);
          const PointsToGraph* callee_out = lookup(r.out_summary, target);
          if (callee_in == nullptr || callee_out == nullptr) {
            return target + ": missing summary";
          }
          if (!callee_in->subsumes(project_in(in, s, m, callee))) {
            return render(ProgramPoint::stmt(name, s.label)) +
                   ": IN-summary of '" + target + "' misses the projection";
          }
          summary.meet_with(*callee_out);
        }
        expected = project_out(summary, s, m, in);
      } else {
        expected = transfer(m, s, in);
      }
      if (expected != f.out[i]) {
        return render(ProgramPoint::stmt(name, s.label)) + ": OUT is not f(IN)";
      }
    }
    const PointsToGraph exit = f.in_of(f.cfg.exit(), *in_sum);
    auto exit_it = r.out.find(ProgramPoint::exit(name));
    if (exit_it == r.out.end() || exit_it->second != exit) {
      return name + ": exit graph is not the meet of its predecessors";
    }
    if (out_summary(exit) != *out_sum) return name + ": OUT-summary is not the exit restriction";
  }
  return std::nullopt;
}

Artwork emit_artwork(const Program& p, const AnalysisResult& r) {
  const CallGraph cg = CallGraph::build(p);
  Artwork a;
  for (const auto& m : p.methods()) {
    const ControlFlowGraph cfg = ControlFlowGraph::build(m);
    for (std::size_t h : cfg.loop_headers()) {
      const int label = m.body()[h].label;
      a.i_loop[LoopKey{m.name(), label}] = r.at_stmt(m.name(), label);
    }
    auto in = r.in_summary.find(m.name());
    a.i_in[m.name()] = in == r.in_summary.end() ? PointsToGraph{} : in->second;
    if (cg.in_cyclic_scc(m.name())) {
      auto out = r.out_summary.find(m.name());
      a.i_out[m.name()] = out == r.out_summary.end() ? PointsToGraph{} : out->second;
    }
  }
  return a;
}

}  // namespace art
