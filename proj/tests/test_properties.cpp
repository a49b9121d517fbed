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

#include <gtest/gtest.h>

#include <random>

#include "art/artwork.hpp"
#include "art/corpus.hpp"
#include "art/error.hpp"
#include "art/producer.hpp"
#include "art/tamper.hpp"
#include "properties.hpp"

namespace art {
namespace {

constexpr int kCases = 1000;

TEST(Properties, MeetLaws) { EXPECT_EQ(testing::meet_law_failures(kCases, 1), 0u); }

TEST(Properties, SubsumptionIsAPartialOrder) {
  EXPECT_EQ(testing::partial_order_failures(kCases, 2), 0u);
}

TEST(Properties, TransferIsMonotone) { EXPECT_EQ(testing::monotonicity_failures(kCases, 3), 0u); }

TEST(Properties, CodecRoundTrip) { EXPECT_EQ(testing::codec_failures(kCases, 4), 0u); }

TEST(Properties, CorruptionsAreRejectedOrHarmless) {
  const Program p = parse_program(fixtures::loopy());
  const std::string valid = encode(emit_artwork(p, analyze_inter(p)));
  std::mt19937_64 rng(5);
  int rejected = 0;
  for (int i = 0; i < kCases; ++i) {
    std::string bad = valid;
    const std::size_t at = rng() % (bad.size() - 16);
    for (std::size_t k = 0; k < 16; ++k) bad[at + k] = static_cast<char>(rng() & 0xff);
    try {
      const Artwork a = decode(bad, p);
      // Anything accepted must be a canonical, valid artwork again.
      EXPECT_EQ(parse_artwork(encode(a)), a);
    } catch (const MalformedArtwork&) {
      ++rejected;
    } catch (const UnknownReference&) {
      ++rejected;
    }
  }
  EXPECT_GT(rejected, kCases * 9 / 10);
}

TEST(Properties, TamperedArtworksStillDecode) {
  CorpusConfig cfg;
  cfg.program_count = 10;
  for (const auto& cp : generate_corpus(cfg)) {
    const Program p = parse_program(cp.text);
    const Artwork a = emit_artwork(p, analyze_inter(p));
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      for (auto kind : {TamperKind::kRemoveEdge, TamperKind::kRemoveNode,
                        TamperKind::kReplaceObject, TamperKind::kShrinkPointsToSet,
                        TamperKind::kDeleteEntry, TamperKind::kAddEdge}) {
        try {
          const auto [t, spec] = tamper(a, kind, seed, &p);
          EXPECT_EQ(decode(encode(t), p), t) << cp.name << " " << spec.target;
        } catch (const NothingToTamper&) {
        }
      }
    }
  }
}

}  // namespace
}  // namespace art
