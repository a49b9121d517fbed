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

#include <algorithm>

#include "art/call_graph.hpp"
#include "art/cfg.hpp"
#include "art/corpus.hpp"
#include "art/error.hpp"

namespace art {
namespace {

std::vector<int> labels(const Method& m, const std::vector<std::size_t>& idx) {
  std::vector<int> out;
  for (auto i : idx) out.push_back(m.body()[i].label);
  return out;
}

TEST(Cfg, LoopyHasOneHeader) {
  const Program p = parse_program(fixtures::loopy());
  const Method& m = p.method("main");
  const auto cfg = ControlFlowGraph::build(m);
  EXPECT_EQ(labels(m, cfg.loop_headers()), std::vector<int>{8});
  ASSERT_EQ(cfg.back_edges().size(), 1u);
  EXPECT_TRUE(cfg.is_back_edge(*m.index_of_label(15), *m.index_of_label(8)));
  const auto body = cfg.loop_body(*m.index_of_label(8));
  EXPECT_EQ(body.size(), 8u);  // labels 8..15
  EXPECT_TRUE(cfg.dominates(*m.index_of_label(8), *m.index_of_label(16)));
  EXPECT_FALSE(cfg.dominates(*m.index_of_label(16), *m.index_of_label(8)));
  EXPECT_EQ(cfg.predecessors(0), std::vector<std::size_t>{cfg.entry()});
  EXPECT_EQ(cfg.successors(*m.index_of_label(17)), std::vector<std::size_t>{cfg.exit()});
}

TEST(Cfg, BlocksSplitAtHeadersAndJumps) {
  const Program p = parse_program(fixtures::loopy());
  const Method& m = p.method("main");
  const auto cfg = ControlFlowGraph::build(m);
  // [3..7] [8..15] [16..17]
  ASSERT_EQ(cfg.blocks().size(), 3u);
  EXPECT_EQ(m.body()[cfg.blocks()[1].first].label, 8);
  EXPECT_EQ(m.body()[cfg.blocks()[1].last].label, 15);
  EXPECT_EQ(cfg.topo_order(), (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(labels(m, cfg.statement_order()),
            (std::vector<int>{3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17}));
}

TEST(Cfg, WhileLoopOrderVisitsBodyBeforeExit) {
  const Program p = parse_program(
      "method main() { 1: a = new A 2: if goto 5 3: b = a 4: goto 2 5: return }");
  const Method& m = p.method("main");
  const auto cfg = ControlFlowGraph::build(m);
  EXPECT_EQ(labels(m, cfg.loop_headers()), std::vector<int>{2});
  const auto order = labels(m, cfg.statement_order());
  EXPECT_EQ(order.size(), 5u);
  // Forward edges respected: each statement after all forward predecessors.
  EXPECT_LT(std::find(order.begin(), order.end(), 3), std::find(order.begin(), order.end(), 4));
  EXPECT_LT(std::find(order.begin(), order.end(), 2), std::find(order.begin(), order.end(), 5));
}

TEST(Cfg, IrreducibleIsRejected) {
  const Program p = parse_program(fixtures::irreducible());
  EXPECT_THROW(ControlFlowGraph::build(p.method("main")), IrreducibleCfg);
}

TEST(Cfg, DeadLoopStillGetsAHeader) {
  const Program p = parse_program(
      "method main() { 1: return 2: nop 3: if goto 2 4: return }");
  const Method& m = p.method("main");
  const auto cfg = ControlFlowGraph::build(m);
  EXPECT_EQ(labels(m, cfg.loop_headers()), std::vector<int>{2});
  EXPECT_TRUE(cfg.predecessors(1) == std::vector<std::size_t>{2});
}

TEST(Cfg, NestedLoops) {
  const Program p = parse_program(R"(method main() {
    1: a = new A
    2: b = a
    3: c = b
    4: if goto 3
    5: if goto 2
    6: return
  })");
  const Method& m = p.method("main");
  const auto cfg = ControlFlowGraph::build(m);
  EXPECT_EQ(labels(m, cfg.loop_headers()), (std::vector<int>{2, 3}));
  EXPECT_EQ(cfg.loop_body(1).size(), 4u);
  EXPECT_EQ(cfg.loop_body(2).size(), 2u);
}

TEST(CallGraph, RecursionInRec) {
  const Program p = parse_program(fixtures::rec());
  const auto cg = CallGraph::build(p);
  ASSERT_EQ(cg.sccs().size(), 2u);
  EXPECT_EQ(cg.sccs()[0], std::vector<std::string>{"foo"});
  EXPECT_EQ(cg.sccs()[1], std::vector<std::string>{"main"});
  EXPECT_TRUE(cg.in_cyclic_scc("foo"));
  EXPECT_FALSE(cg.in_cyclic_scc("main"));
  EXPECT_EQ(cg.recursive_call_sites(), (std::set<CallSite>{{"foo", 10}}));
  EXPECT_TRUE(cg.is_recursive("foo", "foo"));
  EXPECT_FALSE(cg.is_recursive("main", "foo"));
  EXPECT_EQ(cg.callers_of("foo"), (std::vector<CallSite>{{"main", 2}, {"foo", 10}}));
}

TEST(CallGraph, MutualRecursionAndCalleeFirstOrder) {
  const Program p = parse_program(R"(
    method main() { 1: call [a]() 2: call [d]() 3: return }
    method a() { 4: call [b]() 5: return }
    method b() { 6: call [a, c]() 7: return }
    method c() { 8: return }
    method d() { 9: return }
  )");
  const auto cg = CallGraph::build(p);
  const auto& sccs = cg.sccs();
  auto rank = [&](const std::string& m) { return cg.scc_of(m); };
  EXPECT_EQ(rank("a"), rank("b"));
  EXPECT_LT(rank("c"), rank("a"));
  EXPECT_LT(rank("a"), rank("main"));
  EXPECT_LT(rank("d"), rank("main"));
  EXPECT_EQ(sccs[rank("a")], (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(cg.recursive_call_sites(), (std::set<CallSite>{{"a", 4}, {"b", 6}}));
  EXPECT_TRUE(cg.is_recursive(CallEdge{"b", 6, "a"}));
  EXPECT_FALSE(cg.is_recursive(CallEdge{"b", 6, "c"}));

  // Independent of the order in which discovery visits methods.
  std::vector<std::size_t> order{4, 3, 2, 1, 0};
  const auto other = CallGraph::build(p, order);
  EXPECT_EQ(other.sccs(), cg.sccs());
  EXPECT_EQ(other.recursive_call_sites(), cg.recursive_call_sites());
}

TEST(Cfg, StraightLineIsOneBlock) {
  const Program p = parse_program("method main() { 1: a = new A 2: b = a 3: return }");
  const auto cfg = ControlFlowGraph::build(p.method("main"));
  EXPECT_EQ(cfg.blocks().size(), 1u);
  EXPECT_TRUE(cfg.back_edges().empty());
  EXPECT_EQ(cfg.topo_order().size(), 1u);
}

TEST(CallGraph, NoCalls) {
  const Program p = parse_program("method main() { 1: return } method f() { 2: return }");
  const auto cg = CallGraph::build(p);
  EXPECT_TRUE(cg.edges().empty());
  EXPECT_EQ(cg.sccs().size(), 2u);
  EXPECT_FALSE(cg.in_cyclic_scc("main"));
  EXPECT_TRUE(cg.recursive_call_sites().empty());
}

TEST(CallGraph, CycleBelowEntry) {
  const Program p = parse_program(R"(
    method main() { 1: call [foo]() 2: return }
    method foo() { 3: call [bar]() 4: return }
    method bar() { 5: call [foo]() 6: return }
  )");
  const auto cg = CallGraph::build(p);
  EXPECT_EQ(cg.recursive_call_sites(), (std::set<CallSite>{{"foo", 3}, {"bar", 5}}));
  EXPECT_FALSE(cg.is_recursive("main", "foo"));
}

}  // namespace
}  // namespace art
