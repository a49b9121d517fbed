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

// Reference solver for the inter-procedural equations. Every sweep computes
// the whole next state from the previous one (Jacobi iteration), which shares
// no scheduling logic with the producer's worklist or its chaotic oracle.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "art/cfg.hpp"
#include "art/ir.hpp"
#include "art/producer.hpp"
#include "art/ptg.hpp"

namespace art::testing {

inline AnalysisResult jacobi_oracle(const Program& p) {
  struct State {
    std::map<std::string, std::vector<PointsToGraph>> out;
    std::map<std::string, PointsToGraph> in_sum, out_sum;
    bool operator==(const State&) const = default;
  };
  std::map<std::string, ControlFlowGraph> cfgs;
  State s;
  for (const auto& m : p.methods()) {
    cfgs.emplace(m.name(), ControlFlowGraph::build(m));
    s.out[m.name()].resize(m.body().size());
    s.in_sum[m.name()];
    s.out_sum[m.name()];
  }
  auto in_of = [&](const State& st, const Method& m, std::size_t node) {
    const auto& cfg = cfgs.at(m.name());
    PointsToGraph in;
    for (auto pred : cfg.predecessors(node)) {
      in.meet_with(pred == cfg.entry() ? st.in_sum.at(m.name()) : st.out.at(m.name())[pred]);
    }
    return in;
  };
  for (;;) {
    State next = s;
    for (auto& [name, g] : next.in_sum) g = PointsToGraph{};
    for (const auto& m : p.methods()) {
      const auto& cfg = cfgs.at(m.name());
      for (std::size_t i = 0; i < m.body().size(); ++i) {
        const Statement& st = m.body()[i];
        const PointsToGraph in = in_of(s, m, i);
        if (st.kind != StmtKind::kCall) {
          next.out[m.name()][i] = transfer(m, st, in);
          continue;
        }
        PointsToGraph summary;
        for (const auto& t : st.targets) {
          next.in_sum[t].meet_with(project_in(in, st, m, p.method(t)));
          summary.meet_with(s.out_sum.at(t));
        }
        next.out[m.name()][i] = project_out(summary, st, m, in);
      }
      next.out_sum[m.name()] = out_summary(in_of(s, m, cfg.exit()));
    }
    if (next == s) break;
    s = std::move(next);
  }
  AnalysisResult r;
  for (const auto& m : p.methods()) {
    const auto& cfg = cfgs.at(m.name());
    r.out[ProgramPoint::entry(m.name())] = s.in_sum.at(m.name());
    for (std::size_t i = 0; i < m.body().size(); ++i) {
      r.out[ProgramPoint::stmt(m.name(), m.body()[i].label)] = s.out.at(m.name())[i];
    }
    r.out[ProgramPoint::exit(m.name())] = in_of(s, m, cfg.exit());
  }
  r.in_summary = s.in_sum;
  r.out_summary = s.out_sum;
  return r;
}

}  // namespace art::testing
