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

#include "art/corpus.hpp"
#include "art/error.hpp"
#include "art/ir.hpp"

namespace art {
namespace {

TEST(Ir, ParsesEveryStatementForm) {
  const Program p = parse_program(R"(
    method main() {
      1: a = new T   # allocation
      2: b = a
      3: c = null
      4: a.f = b
      5: d = a.f
      6: e = call [g, h](a, b)
      7: call [g, h](d, e)
      8: if goto 10
      9: goto 11
      10: nop
      11: return
    }
    method g(x, y) { 12: return x }
    method h(x, y) { 13: return y }
  )");
  const Method& m = p.method("main");
  ASSERT_EQ(m.body().size(), 11u);
  EXPECT_EQ(m.body()[0].kind, StmtKind::kAlloc);
  EXPECT_EQ(m.body()[0].type_tag, "T");
  EXPECT_EQ(m.body()[1].kind, StmtKind::kCopy);
  EXPECT_EQ(m.body()[2].kind, StmtKind::kAssignNull);
  EXPECT_EQ(m.body()[3].kind, StmtKind::kFieldStore);
  EXPECT_EQ(m.body()[4].kind, StmtKind::kFieldLoad);
  EXPECT_EQ(m.body()[5].kind, StmtKind::kCall);
  EXPECT_TRUE(m.body()[5].binds_result());
  EXPECT_FALSE(m.body()[6].binds_result());
  EXPECT_EQ(m.body()[6].targets, (std::vector<std::string>{"g", "h"}));
  EXPECT_EQ(m.body()[7].kind, StmtKind::kBranch);
  EXPECT_EQ(m.body()[7].jump_target, 10);
  EXPECT_EQ(m.body()[8].kind, StmtKind::kGoto);
  EXPECT_EQ(m.body()[9].kind, StmtKind::kNop);
  EXPECT_EQ(m.body()[10].kind, StmtKind::kReturn);
  EXPECT_TRUE(p.method("g").body()[0].returns_value());
  EXPECT_EQ(p.entry(), "main");
  EXPECT_EQ(p.statement_count(), 13u);
  EXPECT_EQ(p.fields(), std::vector<std::string>{"f"});
}

TEST(Ir, SlotsParamsFirstThenLocalsByFirstAssignment) {
  const Program p = parse_program(
      "method main() { 1: return }\n"
      "method f(p, q) { 2: z = new A 3: y = p 4: z = q 5: return }");
  const Method& f = p.method("f");
  EXPECT_EQ(f.variables(), (std::vector<std::string>{"p", "q", "z", "y"}));
  EXPECT_EQ(f.slot_of("y"), 3);
  EXPECT_EQ(f.slot_of("w"), std::nullopt);
  EXPECT_EQ(f.body()[2].dst_slot, 2);
  EXPECT_EQ(f.body()[2].src_slot, 1);
  EXPECT_EQ(f.index_of_label(4), 2u);
  EXPECT_EQ(f.find_label(9), nullptr);
}

TEST(Ir, ReferenceInstructions) {
  const Program p = parse_program(fixtures::arith());
  const auto& body = p.method("main").body();
  EXPECT_TRUE(body[0].is_reference_instruction());   // new
  EXPECT_FALSE(body[1].is_reference_instruction());  // nop
  EXPECT_FALSE(body[3].is_reference_instruction());  // if goto
  EXPECT_TRUE(body[4].is_reference_instruction());   // copy
  EXPECT_FALSE(body[5].is_reference_instruction());  // void return
}

TEST(Ir, PrintParseRoundTripOnFixtures) {
  for (auto text : {fixtures::loopy(), fixtures::rec(), fixtures::rec_same(),
                    fixtures::arith(), fixtures::irreducible()}) {
    const Program p = parse_program(text);
    const std::string printed = print_program(p);
    EXPECT_EQ(parse_program(printed), p);
    EXPECT_EQ(print_program(parse_program(printed)), printed);
  }
}

TEST(Ir, CanonicalPrintedForm) {
  const Program p = parse_program("method main(){1:x=new A 2:call[main]() 3:return x}");
  EXPECT_EQ(print_program(p),
            "method main() {\n  1: x = new A\n  2: call [main]()\n  3: return x\n}\n");
}

TEST(Ir, SyntaxErrorsCarryPosition) {
  try {
    parse_program("method main() {\n  1: x = = y\n}");
    FAIL() << "no exception";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 10u);
  }
  EXPECT_THROW(parse_program("method main() { 1: x = new A"), SyntaxError);
  EXPECT_THROW(parse_program("method main() { 1: x = $ }"), SyntaxError);
  EXPECT_THROW(parse_program("method main() { x = new A }"), SyntaxError);
  EXPECT_THROW(parse_program("method main() { 1: call []() }"), SyntaxError);
  EXPECT_THROW(parse_program(""), SyntaxError);
}

TEST(Ir, ResolutionErrors) {
  EXPECT_THROW(parse_program("method main() { 1: y = x }"), ResolutionError);
  EXPECT_THROW(parse_program("method main() { 1: goto 7 }"), ResolutionError);
  EXPECT_THROW(parse_program("method main() { 1: call [nope]() }"), ResolutionError);
  EXPECT_THROW(parse_program("method main() { 0: nop }"), ResolutionError);
  EXPECT_THROW(parse_program("method main(a) { 1: return }"), ResolutionError);
  EXPECT_THROW(parse_program("method main() { 1: nop 1: nop }"), DuplicateName);
  EXPECT_THROW(parse_program("method f(a, a) { 1: nop }"), DuplicateName);
  EXPECT_THROW(parse_program("method main() { 1: nop } method main() { 2: nop }"),
               DuplicateName);
}

TEST(Ir, EntryDefaultsToFirstMethodWithoutMain) {
  const Program p = parse_program("method start() { 1: return }");
  EXPECT_EQ(p.entry(), "start");
}

TEST(Ir, EmptyBody) {
  const Program p = parse_program("method main() { }");
  EXPECT_EQ(p.methods().size(), 1u);
  EXPECT_EQ(p.statement_count(), 0u);
}

}  // namespace
}  // namespace art
