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

// The producer: least fixed-point flow-sensitive, context-insensitive
// points-to analysis, a naive chaotic-iteration oracle, and artwork
// emission.

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "art/artwork.hpp"
#include "art/ir.hpp"
#include "art/ptg.hpp"

namespace art {

struct ProgramPoint {
  enum class Kind { kEntry, kStmt, kExit };

  std::string method;
  Kind kind = Kind::kStmt;
  int label = 0;

  static ProgramPoint entry(std::string m) { return {std::move(m), Kind::kEntry, 0}; }
  static ProgramPoint stmt(std::string m, int label) {
    return {std::move(m), Kind::kStmt, label};
  }
  static ProgramPoint exit(std::string m) { return {std::move(m), Kind::kExit, 0}; }

  auto operator<=>(const ProgramPoint&) const = default;
};

/// "m:<method> entry", "m:<method> l:<label>" or "m:<method> exit".
std::string render(const ProgramPoint& point);
std::optional<ProgramPoint> parse_point(std::string_view text);

struct AnalysisResult {
  std::map<ProgramPoint, PointsToGraph> out;
  std::map<std::string, PointsToGraph> in_summary;
  std::map<std::string, PointsToGraph> out_summary;
  /// Statement evaluations performed; Entry and Exit are not counted.
  std::size_t iteration_count = 0;

  const PointsToGraph& at(const ProgramPoint& point) const;
  const PointsToGraph& at_stmt(const std::string& method, int label) const {
    return at(ProgramPoint::stmt(method, label));
  }
};

/// Equality of the computed graphs; iteration counts are ignored.
bool same_results(const AnalysisResult& a, const AnalysisResult& b);
/// First point, in a fixed order, where a and b differ.
std::optional<std::string> first_difference(const AnalysisResult& a,
                                            const AnalysisResult& b);

/// Extra facts forced into the fixed point: edges met into a method's
/// IN-summary, and field edges met into a loop header's IN.
struct Seeds {
  std::map<std::string, PointsToGraph> in;
  std::map<LoopKey, PointsToGraph> header;

  bool empty() const { return in.empty() && header.empty(); }
};

/// Analyzes a call-free method on its own. The entry graph defaults to
/// placeholder_entry(m).
AnalysisResult analyze_intra(const Method& m,
                             const std::optional<PointsToGraph>& entry = std::nullopt);

AnalysisResult analyze_inter(const Program& p, const Seeds& seeds = {});

/// Round-robin evaluation of every equation until a sweep changes nothing.
AnalysisResult chaotic_oracle(const Program& p);
/// Intra-procedural variant; every method starts from its placeholders.
AnalysisResult chaotic_oracle_intra(const Method& m);

/// Checks every flow equation of r against p; returns a description of the
/// first failure.
std::optional<std::string> check_flow_equations(const Program& p,
                                                const AnalysisResult& r);

Artwork emit_artwork(const Program& p, const AnalysisResult& r);

/// Drops entries the consumer can rebuild from its defaults and enables the
/// shared pool.
Artwork optimize_artwork(const Program& p, const Artwork& a);

}  // namespace art
