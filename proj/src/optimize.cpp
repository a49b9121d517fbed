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

#include "art/cfg.hpp"
#include "art/consumer.hpp"
#include "art/producer.hpp"

namespace art {

Artwork optimize_artwork(const Program& p, const Artwork& a) {
  Artwork out = a;

  // Loops without reference instructions: the header's IN is already the
  // fixed point, which is what the consumer falls back to.
  for (const auto& [key, graph] : a.i_loop) {
    const Method* m = p.find(key.method);
    if (m == nullptr) continue;
    const ControlFlowGraph cfg = ControlFlowGraph::build(*m);
    auto header = m->index_of_label(key.label);
    if (!header || !cfg.is_loop_header(*header)) continue;
    bool references = false;
    for (std::size_t i : cfg.loop_body(*header)) {
      references |= m->body()[i].is_reference_instruction();
    }
    if (!references) out.i_loop.erase(key);
  }

  // Summaries equal to the values the consumer would default to.
  const RegenOutcome regen = regen_inter(p, a);
  if (regen.safe()) {
    for (const auto& [name, graph] : a.i_in) {
      auto fallback = regen.in_default.find(name);
      if (fallback != regen.in_default.end() && fallback->second == graph) {
        out.i_in.erase(name);
      }
    }
    for (const auto& [name, graph] : a.i_out) {
      auto in = regen.result.in_summary.find(name);
      if (in != regen.result.in_summary.end() && in->second == graph) {
        out.i_out.erase(name);
      }
    }
  }

  out.dedup = true;
  return out;
}

}  // namespace art
