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

// Seeded artwork mutations and tampering campaigns.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "art/artwork.hpp"
#include "art/consumer.hpp"
#include "art/ir.hpp"

namespace art {

enum class TamperKind {
  kRemoveEdge,
  kRemoveNode,
  kReplaceObject,
  kShrinkPointsToSet,
  kDeleteEntry,
  kAddEdge,
};

std::string_view to_string(TamperKind kind);
std::optional<TamperKind> parse_tamper_kind(std::string_view text);

/// Kinds that take away something the artwork holds.
bool is_reductive(TamperKind kind);
inline constexpr TamperKind kReductiveKinds[] = {
    TamperKind::kRemoveEdge, TamperKind::kRemoveNode, TamperKind::kReplaceObject,
    TamperKind::kShrinkPointsToSet};

struct TamperSpec {
  std::uint64_t seed = 0;
  TamperKind kind = TamperKind::kRemoveEdge;
  std::string target;  // "[section] key" plus the element touched
};

/// Deterministic in (a, kind, seed). AddEdge needs the program: after adding
/// the edge it closes the artwork under the analysis so that it describes a
/// fixed point again. Throws NothingToTamper when nothing is eligible.
std::pair<Artwork, TamperSpec> tamper(const Artwork& a, TamperKind kind,
                                      std::uint64_t seed,
                                      const Program* program = nullptr);

struct TrialReport {
  TamperSpec spec;
  bool detected = false;
  std::optional<ViolationKind> violation;
};

struct CampaignReport {
  std::vector<TrialReport> trials;

  std::size_t detected() const;
  /// One "kind target verdict" line per trial, then "detected k/n".
  std::string render() const;
};

/// n trials drawn from kinds; each trial derives its own seed from seed.
/// A trial whose kind has nothing eligible falls back to the next kind.
CampaignReport run_campaign(const Program& p, const Artwork& a,
                            const std::vector<TamperKind>& kinds, std::size_t n,
                            std::uint64_t seed);

/// Campaign over the reductive kinds.
CampaignReport rq2_campaign(const Program& p, const Artwork& a, std::size_t n,
                            std::uint64_t seed);

}  // namespace art
