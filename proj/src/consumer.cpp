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

#include "art/consumer.hpp"

#include <deque>
#include <functional>
#include <stdexcept>
#include <utility>

#include "art/call_graph.hpp"

namespace art {

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kLoopInvariant: return "LoopInvariant";
    case ViolationKind::kInSummary: return "InSummary";
    case ViolationKind::kOutSummary: return "OutSummary";
  }
  return "?";
}

std::string describe(const Violation& v) {
  std::string out = std::string(to_string(v.kind)) + " violation at " + v.location;
  out += "\n  expected (recomputed):\n";
  for (const auto& line : render_lines(v.expected)) out += "    " + line + "\n";
  out += "  found (artwork):\n";
  for (const auto& line : render_lines(v.found)) out += "    " + line + "\n";
  return out;
}

namespace {

Violation loop_violation(const Method& m, std::size_t header,
                         PointsToGraph expected, PointsToGraph found) {
  const int label = m.body()[header].label;
  return Violation{ViolationKind::kLoopInvariant, m.name(), label,
                   "m:" + m.name() + " l:" + std::to_string(label),
                   std::move(expected), std::move(found)};
}

PointsToGraph meet_preds(const ControlFlowGraph& cfg, std::size_t node,
                         const std::vector<PointsToGraph>& outs,
                         const PointsToGraph& entry, bool forward_only) {
  PointsToGraph in;
  for (std::size_t p : cfg.predecessors(node)) {
    if (p == cfg.entry()) {
      in.meet_with(entry);
    } else if (!forward_only || !cfg.is_back_edge(p, node)) {
      in.meet_with(outs[p]);
    }
  }
  return in;
}

class Abort {};

class Regenerator {
 public:
  Regenerator(const Program* program, const Artwork& artwork,
              const RegenOptions& options)
      : program_(program), artwork_(artwork), options_(options) {
    if (program_ != nullptr) {
      call_graph_ = CallGraph::build(*program_);
      for (const auto& m : program_->methods()) {
        cfgs_.emplace(m.name(), ControlFlowGraph::build(m));
      }
    }
  }

  RegenOutcome run_program() {
    const Program& p = *program_;
    try {
      if (!p.entry().empty()) regenerate(p.method(p.entry()));
      drain();
      const auto& sccs = call_graph_.sccs();
      for (auto it = sccs.rbegin(); it != sccs.rend(); ++it) {
        for (const auto& name : *it) {
          if (state_[name] == State::kNotStarted) regenerate(p.method(name));
          drain();
        }
      }
    } catch (const Abort&) {
    }
    return std::move(outcome_);
  }

  RegenOutcome run_method(const Method& m) {
    for (const auto& s : m.body()) {
      if (s.kind == StmtKind::kCall) {
        throw std::invalid_argument("method '" + m.name() +
                                    "' contains calls; use regen_inter");
      }
    }
    cfgs_.emplace(m.name(), ControlFlowGraph::build(m));
    try {
      regenerate(m, placeholder_entry(m));
    } catch (const Abort&) {
    }
    return std::move(outcome_);
  }

 private:
  enum class State { kNotStarted, kInProgress, kDone };

  void report(Violation v) {
    outcome_.violations.push_back(std::move(v));
    if (!options_.keep_going) throw Abort{};
  }

  void drain() {
    while (!pending_.empty()) {
      const std::string name = pending_.front();
      pending_.pop_front();
      if (state_[name] == State::kNotStarted) regenerate(program_->method(name));
    }
  }

  /// The IN-summary in force for m, fixed the first time anyone asks.
  const PointsToGraph& effective_in(const std::string& m,
                                    const PointsToGraph* projection) {
    auto it = effective_in_.find(m);
    if (it != effective_in_.end()) return it->second;
    PointsToGraph fallback = projection != nullptr ? *projection : PointsToGraph{};
    outcome_.in_default[m] = fallback;
    auto stored = artwork_.i_in.find(m);
    return effective_in_
        .emplace(m, stored != artwork_.i_in.end() ? stored->second : std::move(fallback))
        .first->second;
  }

  const PointsToGraph& effective_out(const std::string& m) {
    auto stored = artwork_.i_out.find(m);
    if (stored != artwork_.i_out.end()) return stored->second;
    return effective_in(m, nullptr);
  }

  PointsToGraph eval(const Method& m, const Statement& s, const PointsToGraph& in) {
    ++outcome_.transfer_count;
    if (s.kind != StmtKind::kCall) return transfer(m, s, in);
    PointsToGraph summary;
    for (const auto& target : s.targets) {
      const Method& callee = program_->method(target);
      const PointsToGraph projected = project_in(in, s, m, callee);
      const PointsToGraph& callee_in = effective_in(target, &projected);
      if (auto v = check_in_safety(s, m, callee, callee_in, projected)) report(std::move(*v));
      if (call_graph_.is_recursive(m.name(), target)) {
        if (state_[target] == State::kNotStarted) pending_.push_back(target);
        summary.meet_with(effective_out(target));
      } else {
        if (state_[target] == State::kNotStarted) regenerate(callee);
        summary.meet_with(summaries_[target]);
      }
    }
    return project_out(summary, s, m, in);
  }

  void regenerate(const Method& m) {
    regenerate(m, std::nullopt);
  }

  void regenerate(const Method& m, std::optional<PointsToGraph> fixed_entry) {
    const std::string& name = m.name();
    state_[name] = State::kInProgress;
    outcome_.methods_analyzed.insert(name);
    const PointsToGraph entry =
        fixed_entry ? std::move(*fixed_entry) : effective_in(name, nullptr);
    const ControlFlowGraph& cfg = cfgs_.at(name);
    const auto& body = m.body();
    std::vector<PointsToGraph> outs(body.size());

    for (std::size_t i : cfg.statement_order()) {
      ++outcome_.visits[ProgramPoint::stmt(name, body[i].label)];
      if (cfg.is_loop_header(i)) {
        auto stored = artwork_.i_loop.find(LoopKey{name, body[i].label});
        outs[i] = stored != artwork_.i_loop.end()
                      ? stored->second
                      : meet_preds(cfg, i, outs, entry, /*forward_only=*/true);
      } else {
        outs[i] = eval(m, body[i], meet_preds(cfg, i, outs, entry, false));
      }
    }
    for (std::size_t h : cfg.loop_headers()) {
      PointsToGraph recomputed = eval(m, body[h], meet_preds(cfg, h, outs, entry, false));
      if (recomputed != outs[h]) report(loop_violation(m, h, std::move(recomputed), outs[h]));
    }
    const PointsToGraph exit = meet_preds(cfg, cfg.exit(), outs, entry, false);
    PointsToGraph summary = out_summary(exit);
    if (program_ != nullptr && call_graph_.in_cyclic_scc(name)) {
      if (auto v = check_out_safety(m, summary, effective_out(name))) report(std::move(*v));
    }

    AnalysisResult& r = outcome_.result;
    r.out[ProgramPoint::entry(name)] = entry;
    for (std::size_t i = 0; i < body.size(); ++i) {
      r.out[ProgramPoint::stmt(name, body[i].label)] = std::move(outs[i]);
    }
    r.out[ProgramPoint::exit(name)] = exit;
    r.in_summary[name] = entry;
    r.out_summary[name] = summary;
    summaries_[name] = std::move(summary);
    r.iteration_count = outcome_.transfer_count;
    state_[name] = State::kDone;
  }

  const Program* program_;
  const Artwork& artwork_;
  RegenOptions options_;
  CallGraph call_graph_;
  std::map<std::string, ControlFlowGraph> cfgs_;
  std::map<std::string, State> state_;
  std::map<std::string, PointsToGraph> effective_in_;
  std::map<std::string, PointsToGraph> summaries_;
  std::deque<std::string> pending_;
  RegenOutcome outcome_;
};

}  // namespace

RegenOutcome regen_intra(const Method& m, const Artwork& a,
                         const RegenOptions& options) {
  return Regenerator(nullptr, a, options).run_method(m);
}

RegenOutcome regen_inter(const Program& p, const Artwork& a,
                         const RegenOptions& options) {
  return Regenerator(&p, a, options).run_program();
}

std::optional<Violation> check_intra_safety(const Method& m,
                                            const ControlFlowGraph& cfg,
                                            std::size_t header,
                                            const std::vector<PointsToGraph>& outs,
                                            const PointsToGraph& entry) {
  const Statement& s = m.body()[header];
  if (s.kind == StmtKind::kCall) {
    throw std::invalid_argument("check_intra_safety: header is a call");
  }
  PointsToGraph recomputed = transfer(m, s, meet_preds(cfg, header, outs, entry, false));
  if (recomputed == outs[header]) return std::nullopt;
  return loop_violation(m, header, std::move(recomputed), outs[header]);
}

std::optional<Violation> check_in_safety(const Statement& call,
                                         const Method& caller,
                                         const Method& callee,
                                         const PointsToGraph& effective_in,
                                         const PointsToGraph& projected) {
  if (effective_in.subsumes(projected)) return std::nullopt;
  return Violation{ViolationKind::kInSummary, callee.name(), call.label,
                   "m:" + callee.name() + " (call site m:" + caller.name() +
                       " l:" + std::to_string(call.label) + ")",
                   projected, effective_in};
}

std::optional<Violation> check_out_safety(const Method& m,
                                          const PointsToGraph& regenerated,
                                          const PointsToGraph& effective_out) {
  if (regenerated == effective_out) return std::nullopt;
  return Violation{ViolationKind::kOutSummary, m.name(), 0, "m:" + m.name(),
                   regenerated, effective_out};
}

}  // namespace art
