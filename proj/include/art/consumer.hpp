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

// The consumer: one-pass regeneration of the analysis from an artwork,
// checking that every invariant it used is a fixed point.

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "art/artwork.hpp"
#include "art/cfg.hpp"
#include "art/ir.hpp"
#include "art/producer.hpp"
#include "art/ptg.hpp"

namespace art {

enum class ViolationKind { kLoopInvariant, kInSummary, kOutSummary };

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind = ViolationKind::kLoopInvariant;
  std::string method;  // method owning the invariant
  /// Header label for loop invariants; call-site label for IN checks; 0
  /// for OUT checks.
  int label = 0;
  std::string location;
  PointsToGraph expected;  // recomputed by the consumer
  PointsToGraph found;     // taken from the artwork (or its default)
};

/// One-line summary plus the two graphs.
std::string describe(const Violation& v);

struct RegenOptions {
  /// Record every violation instead of stopping at the first one.
  bool keep_going = false;
};

struct RegenOutcome {
  std::vector<Violation> violations;
  /// Regenerated results; complete only when safe().
  AnalysisResult result;
  std::map<ProgramPoint, std::size_t> visits;
  std::set<std::string> methods_analyzed;
  /// Statement evaluations plus the recomputations done by the checks.
  std::size_t transfer_count = 0;
  /// What each method's IN-summary defaults to when its entry is absent:
  /// the projection at the first call site that demanded it, or empty when
  /// the method was entered before any call site reached it.
  std::map<std::string, PointsToGraph> in_default;

  bool safe() const { return violations.empty(); }
};

RegenOutcome regen_intra(const Method& m, const Artwork& a,
                         const RegenOptions& options = {});
RegenOutcome regen_inter(const Program& p, const Artwork& a,
                         const RegenOptions& options = {});

/// Recomputes the header's OUT from all of its predecessors, back edges
/// included, and compares it with the value the pass started from.
std::optional<Violation> check_intra_safety(const Method& m,
                                            const ControlFlowGraph& cfg,
                                            std::size_t header,
                                            const std::vector<PointsToGraph>& outs,
                                            const PointsToGraph& entry);

std::optional<Violation> check_in_safety(const Statement& call,
                                         const Method& caller,
                                         const Method& callee,
                                         const PointsToGraph& effective_in,
                                         const PointsToGraph& projected);

std::optional<Violation> check_out_safety(const Method& m,
                                          const PointsToGraph& regenerated,
                                          const PointsToGraph& effective_out);

}  // namespace art
