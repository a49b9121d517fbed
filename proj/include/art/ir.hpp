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

// The mini IR analyzed by the producer and the consumer.
//
// A program is a list of methods; a method is a list of labeled statements.
// Control falls through to the textually next statement unless the statement
// is a goto or a return. Branch conditions are not modeled: "if goto L" may
// either jump or fall through.

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace art {

enum class StmtKind {
  kAlloc,       // x = new T
  kCopy,        // x = y
  kAssignNull,  // x = null
  kFieldStore,  // x.f = y
  kFieldLoad,   // x = y.f
  kCall,        // [x =] call [t1, t2](a, b)
  kReturn,      // return [x]
  kBranch,      // if goto L
  kGoto,        // goto L
  kNop,
};

std::string_view to_string(StmtKind kind);

/// One labeled statement. Operand roles depend on the kind:
///   Alloc       dst = new type_tag
///   Copy        dst = src
///   AssignNull  dst = null
///   FieldStore  dst.field = src
///   FieldLoad   dst = src.field
///   Call        dst (optional) = call [targets](args)
///   Return      return src (optional)
///   Branch/Goto jump_target
/// The *_slot members are filled in when the enclosing program is built.
struct Statement {
  int label = 0;
  StmtKind kind = StmtKind::kNop;
  std::string dst;
  std::string src;
  std::string field;
  std::string type_tag;
  std::vector<std::string> targets;
  std::vector<std::string> args;
  int jump_target = 0;

  int dst_slot = -1;
  int src_slot = -1;
  std::vector<int> arg_slots;

  bool binds_result() const { return kind == StmtKind::kCall && !dst.empty(); }
  bool returns_value() const {
    return kind == StmtKind::kReturn && !src.empty();
  }
  /// True for statements that can read or write reference variables or the
  /// heap. Nop, branches, gotos and void returns are the only exceptions.
  bool is_reference_instruction() const;

  bool operator==(const Statement&) const = default;
};

class Method {
 public:
  Method() = default;
  Method(std::string name, std::vector<std::string> params,
         std::vector<Statement> body);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& params() const { return params_; }
  const std::vector<Statement>& body() const { return body_; }

  /// Variables in slot order: parameters first, then locals by first
  /// assignment.
  const std::vector<std::string>& variables() const { return variables_; }
  std::size_t variable_count() const { return variables_.size(); }
  std::optional<int> slot_of(std::string_view variable) const;

  /// Index into body() of the statement with this label.
  std::optional<std::size_t> index_of_label(int label) const;
  const Statement* find_label(int label) const;

  bool operator==(const Method& other) const {
    return name_ == other.name_ && params_ == other.params_ &&
           body_ == other.body_;
  }

 private:
  friend class Program;
  void resolve();

  std::string name_;
  std::vector<std::string> params_;
  std::vector<Statement> body_;
  std::vector<std::string> variables_;
  std::map<std::string, int, std::less<>> slot_of_;
  std::map<int, std::size_t> label_index_;
};

class Program {
 public:
  Program() = default;

  /// Validates and resolves the methods. The entry method is "main" when
  /// present, otherwise the first method.
  static Program build(std::vector<Method> methods);

  const std::vector<Method>& methods() const { return methods_; }
  const std::string& entry() const { return entry_; }
  const Method* find(std::string_view name) const;
  const Method& method(std::string_view name) const;
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Every field name that appears in a field load or store, sorted.
  std::vector<std::string> fields() const;

  std::size_t statement_count() const;

  bool operator==(const Program& other) const {
    return entry_ == other.entry_ && methods_ == other.methods_;
  }

 private:
  std::vector<Method> methods_;
  std::string entry_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

Program parse_program(std::string_view text);

/// Canonical text form; parse_program(print_program(p)) == p.
std::string print_program(const Program& program);
std::string print_statement(const Statement& statement);

}  // namespace art
