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

// The artwork: the invariants a producer ships so that a consumer can
// rebuild the analysis in one pass. The text codec writes
//
//   ART/1
//   [pool]                      only when some graph is shared
//   g0:
//     main/0 -> main:3
//   [loop]
//   m:main l:8 = g0
//   [in]
//   m:foo =
//     foo/0 -> main:1
//   [out]
//   m:foo = g0
//
// Entries are sorted by key text and graph edges by their canonical
// rendering, so equal artworks encode to identical bytes.

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "art/ir.hpp"
#include "art/ptg.hpp"

namespace art {

struct AnalysisResult;

struct LoopKey {
  std::string method;
  int label = 0;
  auto operator<=>(const LoopKey&) const = default;
};

struct Artwork {
  std::map<LoopKey, PointsToGraph> i_loop;
  std::map<std::string, PointsToGraph> i_in;
  std::map<std::string, PointsToGraph> i_out;
  /// Share repeated graphs through the pool when encoding. An encoding
  /// choice only; it does not take part in equality.
  bool dedup = false;

  std::size_t entry_count() const {
    return i_loop.size() + i_in.size() + i_out.size();
  }

  bool operator==(const Artwork& other) const {
    return i_loop == other.i_loop && i_in == other.i_in &&
           i_out == other.i_out;
  }
};

std::string encode(const Artwork& a);

/// Structural parse only; no program is consulted.
Artwork parse_artwork(std::string_view bytes);

/// Parses and checks every method, slot, label and header reference against
/// p. Throws MalformedArtwork or UnknownReference.
Artwork decode(std::string_view bytes, const Program& p);

/// Rejects references that do not exist in p; throws UnknownReference.
void validate(const Artwork& a, const Program& p);

/// Dump of every program point's OUT graph; the size baseline and the
/// results format used by diff.
std::string naive_encode(const AnalysisResult& r);
AnalysisResult parse_naive(std::string_view bytes);

struct ArtworkStats {
  std::size_t bytes_art = 0;    // payload bytes, framing excluded
  std::size_t bytes_naive = 0;  // payload bytes, framing excluded
  std::size_t entries_loop = 0;
  std::size_t entries_in = 0;
  std::size_t entries_out = 0;
  std::size_t dedup_savings = 0;
  std::optional<std::size_t> compressed_art;
  std::optional<std::size_t> compressed_naive;
};

ArtworkStats stats(const Program& p, const Artwork& a, const AnalysisResult& r);

}  // namespace art
