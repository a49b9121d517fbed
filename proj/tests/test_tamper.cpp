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

#include "art/consumer.hpp"
#include "art/corpus.hpp"
#include "art/error.hpp"
#include "art/producer.hpp"
#include "art/tamper.hpp"
#include "oracle.hpp"

namespace art {
namespace {

struct Fixture {
  Program p;
  AnalysisResult r;
  Artwork a;
  explicit Fixture(std::string_view text)
      : p(parse_program(text)), r(analyze_inter(p)), a(emit_artwork(p, r)) {}
};

// Every graph of b is a subgraph of the same entry in a; missing entries
// count as empty.
bool artwork_subsumes(const Artwork& a, const Artwork& b) {
  auto covers = [](const auto& big, const auto& small) {
    for (const auto& [key, g] : small) {
      auto it = big.find(key);
      if (it == big.end() ? !g.empty() : !it->second.subsumes(g)) return false;
    }
    return true;
  };
  return covers(a.i_loop, b.i_loop) && covers(a.i_in, b.i_in) && covers(a.i_out, b.i_out);
}

TEST(Tamper, KindNames) {
  for (auto kind : {TamperKind::kRemoveEdge, TamperKind::kRemoveNode, TamperKind::kReplaceObject,
                    TamperKind::kShrinkPointsToSet, TamperKind::kDeleteEntry,
                    TamperKind::kAddEdge}) {
    EXPECT_EQ(parse_tamper_kind(to_string(kind)), kind);
  }
  EXPECT_EQ(to_string(TamperKind::kShrinkPointsToSet), "shrink-set");
  EXPECT_EQ(parse_tamper_kind("flip"), std::nullopt);
  EXPECT_FALSE(is_reductive(TamperKind::kAddEdge));
  EXPECT_FALSE(is_reductive(TamperKind::kDeleteEntry));
  EXPECT_TRUE(is_reductive(TamperKind::kReplaceObject));
}

TEST(Tamper, DeterministicPerSeed) {
  Fixture f(fixtures::loopy());
  for (auto kind : kReductiveKinds) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto [x, sx] = tamper(f.a, kind, seed);
      const auto [y, sy] = tamper(f.a, kind, seed);
      EXPECT_EQ(x, y);
      EXPECT_EQ(sx.target, sy.target);
      EXPECT_EQ(encode(x), encode(y));
    }
  }
}

TEST(Tamper, ReductiveKindsStrictlyReduceAndAreDetected) {
  for (auto text : {fixtures::loopy(), fixtures::rec(), fixtures::arith()}) {
    Fixture f(text);
    for (auto kind : kReductiveKinds) {
      for (std::uint64_t seed = 0; seed < 25; ++seed) {
        std::pair<Artwork, TamperSpec> t;
        try {
          t = tamper(f.a, kind, seed);
        } catch (const NothingToTamper&) {
          continue;
        }
        const Artwork& bad = t.first;
        EXPECT_NE(bad, f.a);
        if (kind == TamperKind::kReplaceObject) {
          EXPECT_FALSE(artwork_subsumes(bad, f.a)) << t.second.target;
        } else {
          EXPECT_TRUE(artwork_subsumes(f.a, bad)) << t.second.target;
        }
        EXPECT_NO_THROW(decode(encode(bad), f.p));
        EXPECT_FALSE(regen_inter(f.p, bad).safe()) << t.second.target;
      }
    }
  }
}

TEST(Tamper, AddEdgeStaysSafeAndAboveTheOracle) {
  for (auto text : {fixtures::loopy(), fixtures::rec(), fixtures::arith()}) {
    Fixture f(text);
    const AnalysisResult oracle = testing::jacobi_oracle(f.p);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto [grown, spec] = tamper(f.a, TamperKind::kAddEdge, seed, &f.p);
      EXPECT_TRUE(artwork_subsumes(grown, f.a));
      EXPECT_NE(grown, f.a);
      const RegenOutcome g = regen_inter(f.p, grown);
      ASSERT_TRUE(g.safe()) << spec.target;
      for (const auto& [point, graph] : oracle.out) {
        EXPECT_TRUE(g.result.at(point).subsumes(graph)) << render(point);
      }
    }
  }
  Fixture f(fixtures::loopy());
  EXPECT_THROW(tamper(f.a, TamperKind::kAddEdge, 1), Error);
}

TEST(Tamper, DeleteEntryVerdictFollowsTheDefault) {
  Fixture rec_same(fixtures::rec_same());
  Fixture rec(fixtures::rec());
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto [a, spec] = tamper(rec_same.a, TamperKind::kDeleteEntry, seed);
    EXPECT_EQ(a.entry_count() + 1, rec_same.a.entry_count());
    EXPECT_TRUE(regen_inter(rec_same.p, a).safe()) << spec.target;

    const auto [b, bspec] = tamper(rec.a, TamperKind::kDeleteEntry, seed);
    const bool safe = regen_inter(rec.p, b).safe();
    // I_in[main] is empty, and so is its default; foo's entries are not.
    EXPECT_EQ(safe, bspec.target == "[in] m:main") << bspec.target;
  }
}

TEST(Tamper, NothingToTamper) {
  Fixture f(fixtures::rec_same());
  for (auto kind : kReductiveKinds) EXPECT_THROW(tamper(f.a, kind, 0), NothingToTamper);
  EXPECT_THROW(tamper(Artwork{}, TamperKind::kDeleteEntry, 0), NothingToTamper);
  EXPECT_THROW(rq2_campaign(f.p, f.a, 3, 1), NothingToTamper);
}

TEST(Tamper, CampaignReport) {
  Fixture f(fixtures::loopy());
  EXPECT_TRUE(rq2_campaign(f.p, f.a, 0, 1).trials.empty());
  EXPECT_EQ(rq2_campaign(f.p, f.a, 0, 1).render(), "detected 0/0\n");
  const CampaignReport report = rq2_campaign(f.p, f.a, 10, 42);
  ASSERT_EQ(report.trials.size(), 10u);
  EXPECT_EQ(report.detected(), 10u);
  const std::string text = report.render();
  EXPECT_NE(text.find(" UNSAFE (LoopInvariant)\n"), std::string::npos);
  EXPECT_EQ(text.substr(text.size() - 15), "detected 10/10\n");
  EXPECT_EQ(rq2_campaign(f.p, f.a, 10, 42).render(), text);
}

TEST(Tamper, DeleteEntryOnArithmeticLoopIsSafe) {
  Fixture f(fixtures::arith());
  const CampaignReport r = run_campaign(f.p, f.a, {TamperKind::kDeleteEntry}, 10, 3);
  ASSERT_EQ(r.trials.size(), 10u);
  EXPECT_EQ(r.detected(), 0u);
  bool loop_deleted = false;
  for (const auto& t : r.trials) loop_deleted |= t.spec.target == "[loop] m:main l:2";
  EXPECT_TRUE(loop_deleted);
}

}  // namespace
}  // namespace art
