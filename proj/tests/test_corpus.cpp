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

#include <stdexcept>

#include "art/call_graph.hpp"
#include "art/cfg.hpp"
#include "art/corpus.hpp"

namespace art {
namespace {

TEST(Corpus, DeterministicPerSeed) {
  CorpusConfig cfg;
  cfg.program_count = 8;
  const auto a = generate_corpus(cfg);
  const auto b = generate_corpus(cfg);
  ASSERT_EQ(a.size(), 10u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].name, b[i].name);
    EXPECT_EQ(a[i].text, b[i].text);
  }
  EXPECT_EQ(a[0].name, "loopy");
  EXPECT_EQ(a[1].name, "rec");
  EXPECT_EQ(a[2].name, "gen00");
  cfg.seed = 2;
  EXPECT_NE(generate_corpus(cfg)[2].text, a[2].text);
}

TEST(Corpus, ProgramsAreWellFormed) {
  CorpusConfig cfg;
  cfg.program_count = 40;
  cfg.seed = 5;
  for (const auto& cp : generate_corpus(cfg)) {
    const Program p = parse_program(cp.text);
    EXPECT_EQ(print_program(p), cp.text);
    if (cp.name.rfind("gen", 0) != 0) continue;
    EXPECT_GE(p.methods().size(), cfg.min_methods);
    EXPECT_LE(p.methods().size(), cfg.max_methods);
    for (const auto& m : p.methods()) {
      EXPECT_NO_THROW(ControlFlowGraph::build(m)) << cp.name << " " << m.name();
      EXPECT_GE(m.body().size(), cfg.min_statements);
      for (const auto& s : m.body()) {
        for (const auto& t : s.targets) {
          EXPECT_EQ(p.method(t).params().size(), s.args.size());
        }
      }
    }
  }
}

TEST(Corpus, FullRecursionProbabilityAlwaysRecurses) {
  CorpusConfig cfg;
  cfg.recursion_probability = 1.0;
  cfg.program_count = 30;
  const auto corpus = generate_corpus(cfg);
  for (std::size_t i = 2; i < corpus.size(); ++i) {
    const Program p = parse_program(corpus[i].text);
    EXPECT_FALSE(CallGraph::build(p).recursive_call_sites().empty()) << corpus[i].name;
  }
}

TEST(Corpus, NoLoopsWhenLoopProbabilityIsZero) {
  CorpusConfig cfg;
  cfg.loop_probability = 0.0;
  cfg.recursion_probability = 0.0;
  cfg.program_count = 10;
  const auto corpus = generate_corpus(cfg);
  for (std::size_t i = 2; i < corpus.size(); ++i) {
    const Program p = parse_program(corpus[i].text);
    for (const auto& m : p.methods()) {
      EXPECT_TRUE(ControlFlowGraph::build(m).loop_headers().empty());
    }
    EXPECT_TRUE(CallGraph::build(p).recursive_call_sites().empty());
  }
}

TEST(Corpus, ConfigValidation) {
  auto bad = [](auto mutate) {
    CorpusConfig cfg;
    mutate(cfg);
    return cfg;
  };
  EXPECT_THROW(bad([](CorpusConfig& c) { c.min_methods = 6; }).validate(), std::invalid_argument);
  EXPECT_THROW(bad([](CorpusConfig& c) { c.min_methods = 0; }).validate(), std::invalid_argument);
  EXPECT_THROW(bad([](CorpusConfig& c) { c.max_statements = 3; }).validate(),
               std::invalid_argument);
  EXPECT_THROW(bad([](CorpusConfig& c) { c.loop_probability = 1.5; }).validate(),
               std::invalid_argument);
  EXPECT_THROW(bad([](CorpusConfig& c) { c.recursion_probability = -0.1; }).validate(),
               std::invalid_argument);
  EXPECT_NO_THROW(CorpusConfig{}.validate());
}

}  // namespace
}  // namespace art
