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

#include "art/ir.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <utility>

#include "art/error.hpp"

namespace art {

std::string_view to_string(StmtKind kind) {
  switch (kind) {
    case StmtKind::kAlloc: return "alloc";
    case StmtKind::kCopy: return "copy";
    case StmtKind::kAssignNull: return "assign-null";
    case StmtKind::kFieldStore: return "field-store";
    case StmtKind::kFieldLoad: return "field-load";
    case StmtKind::kCall: return "call";
    case StmtKind::kReturn: return "return";
    case StmtKind::kBranch: return "branch";
    case StmtKind::kGoto: return "goto";
    case StmtKind::kNop: return "nop";
  }
  return "?";
}

bool Statement::is_reference_instruction() const {
  switch (kind) {
    case StmtKind::kBranch:
    case StmtKind::kGoto:
    case StmtKind::kNop:
      return false;
    case StmtKind::kReturn:
      return returns_value();
    default:
      return true;
  }
}

Method::Method(std::string name, std::vector<std::string> params,
               std::vector<Statement> body)
    : name_(std::move(name)), params_(std::move(params)), body_(std::move(body)) {}

std::optional<int> Method::slot_of(std::string_view variable) const {
  auto it = slot_of_.find(variable);
  if (it == slot_of_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Method::index_of_label(int label) const {
  auto it = label_index_.find(label);
  if (it == label_index_.end()) return std::nullopt;
  return it->second;
}

const Statement* Method::find_label(int label) const {
  auto index = index_of_label(label);
  return index ? &body_[*index] : nullptr;
}

void Method::resolve() {
  variables_.clear();
  slot_of_.clear();
  label_index_.clear();
  const std::string where = "method '" + name_ + "'";

  for (const auto& param : params_) {
    if (slot_of_.count(param) != 0) {
      throw DuplicateName(where + ": duplicate parameter '" + param + "'");
    }
    slot_of_.emplace(param, static_cast<int>(variables_.size()));
    variables_.push_back(param);
  }
  for (std::size_t i = 0; i < body_.size(); ++i) {
    const int label = body_[i].label;
    if (label <= 0) {
      throw ResolutionError(where + ": label " + std::to_string(label) +
                            " is not a positive integer");
    }
    if (!label_index_.emplace(label, i).second) {
      throw DuplicateName(where + ": duplicate label " + std::to_string(label));
    }
  }

  auto use = [&](const Statement& s, const std::string& var) {
    auto it = slot_of_.find(var);
    if (it == slot_of_.end()) {
      throw ResolutionError(where + ", label " + std::to_string(s.label) +
                            ": variable '" + var + "' used before assignment");
    }
    return it->second;
  };
  auto define = [&](const std::string& var) {
    auto [it, inserted] =
        slot_of_.emplace(var, static_cast<int>(variables_.size()));
    if (inserted) variables_.push_back(var);
    return it->second;
  };

  for (auto& s : body_) {
    s.dst_slot = -1;
    s.src_slot = -1;
    s.arg_slots.clear();
    switch (s.kind) {
      case StmtKind::kAlloc:
      case StmtKind::kAssignNull:
        s.dst_slot = define(s.dst);
        break;
      case StmtKind::kCopy:
      case StmtKind::kFieldLoad:
        s.src_slot = use(s, s.src);
        s.dst_slot = define(s.dst);
        break;
      case StmtKind::kFieldStore:
        s.dst_slot = use(s, s.dst);
        s.src_slot = use(s, s.src);
        break;
      case StmtKind::kCall:
        if (s.targets.empty()) {
          throw ResolutionError(where + ", label " + std::to_string(s.label) +
                                ": call without targets");
        }
        for (const auto& arg : s.args) s.arg_slots.push_back(use(s, arg));
        if (!s.dst.empty()) s.dst_slot = define(s.dst);
        break;
      case StmtKind::kReturn:
        if (!s.src.empty()) s.src_slot = use(s, s.src);
        break;
      case StmtKind::kBranch:
      case StmtKind::kGoto:
        if (label_index_.count(s.jump_target) == 0) {
          throw ResolutionError(where + ", label " + std::to_string(s.label) +
                                ": unknown jump target " +
                                std::to_string(s.jump_target));
        }
        break;
      case StmtKind::kNop:
        break;
    }
  }
}

Program Program::build(std::vector<Method> methods) {
  Program program;
  program.methods_ = std::move(methods);
  for (std::size_t i = 0; i < program.methods_.size(); ++i) {
    const auto& name = program.methods_[i].name();
    if (!program.index_.emplace(name, i).second) {
      throw DuplicateName("duplicate method '" + name + "'");
    }
  }
  for (auto& method : program.methods_) {
    method.resolve();
    for (const auto& s : method.body()) {
      for (const auto& target : s.targets) {
        if (program.index_.count(target) == 0) {
          throw ResolutionError("method '" + method.name() + "', label " +
                                std::to_string(s.label) +
                                ": unknown call target '" + target + "'");
        }
      }
    }
  }
  if (!program.methods_.empty()) {
    program.entry_ = program.index_.count("main") != 0
                         ? std::string("main")
                         : program.methods_.front().name();
    if (!program.method(program.entry_).params().empty()) {
      throw ResolutionError("entry method '" + program.entry_ +
                            "' must not take parameters");
    }
  }
  return program;
}

const Method* Program::find(std::string_view name) const {
  auto it = index_.find(name);
  return it == index_.end() ? nullptr : &methods_[it->second];
}

const Method& Program::method(std::string_view name) const {
  const Method* m = find(name);
  if (m == nullptr) {
    throw ResolutionError("unknown method '" + std::string(name) + "'");
  }
  return *m;
}

std::optional<std::size_t> Program::index_of(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> Program::fields() const {
  std::set<std::string> fields;
  for (const auto& m : methods_) {
    for (const auto& s : m.body()) {
      if (s.kind == StmtKind::kFieldLoad || s.kind == StmtKind::kFieldStore) {
        fields.insert(s.field);
      }
    }
  }
  return {fields.begin(), fields.end()};
}

std::size_t Program::statement_count() const {
  std::size_t n = 0;
  for (const auto& m : methods_) n += m.body().size();
  return n;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

bool is_keyword(std::string_view word) {
  static const std::set<std::string_view> kKeywords = {
      "method", "new", "null", "call", "return", "if", "goto", "nop"};
  return kKeywords.count(word) != 0;
}

struct Token {
  enum class Kind { kName, kInt, kPunct, kEnd };
  Kind kind = Kind::kEnd;
  std::string text;
  std::size_t line = 0;
  std::size_t column = 0;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t i = 0;
  auto advance = [&] {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
    ++i;
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance();
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance();
      continue;
    }
    Token token;
    token.line = line;
    token.column = column;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      token.kind = Token::Kind::kName;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) ||
              text[i] == '_')) {
        token.text.push_back(text[i]);
        advance();
      }
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      token.kind = Token::Kind::kInt;
      while (i < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[i]))) {
        token.text.push_back(text[i]);
        advance();
      }
    } else if (std::string_view("(){},:=.[]").find(c) != std::string_view::npos) {
      token.kind = Token::Kind::kPunct;
      token.text = std::string(1, c);
      advance();
    } else {
      throw SyntaxError(line, column,
                        std::string("unexpected character '") + c + "'");
    }
    tokens.push_back(std::move(token));
  }
  Token end;
  end.line = line;
  end.column = column;
  tokens.push_back(end);
  return tokens;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  std::vector<Method> parse() {
    std::vector<Method> methods;
    do {
      methods.push_back(parse_method());
    } while (peek().kind != Token::Kind::kEnd);
    return methods;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }

  [[noreturn]] void fail(const std::string& expected) const {
    const Token& t = peek();
    const std::string found =
        t.kind == Token::Kind::kEnd ? "end of input" : "'" + t.text + "'";
    throw SyntaxError(t.line, t.column,
                      "expected " + expected + ", found " + found);
  }

  bool at_punct(char c, std::size_t ahead = 0) const {
    const Token& t = peek(ahead);
    return t.kind == Token::Kind::kPunct && t.text[0] == c;
  }
  bool at_keyword(std::string_view word, std::size_t ahead = 0) const {
    const Token& t = peek(ahead);
    return t.kind == Token::Kind::kName && t.text == word;
  }

  void expect_punct(char c) {
    if (!at_punct(c)) fail(std::string("'") + c + "'");
    ++pos_;
  }
  void expect_keyword(std::string_view word) {
    if (!at_keyword(word)) fail("'" + std::string(word) + "'");
    ++pos_;
  }
  std::string expect_name() {
    const Token& t = peek();
    if (t.kind != Token::Kind::kName || is_keyword(t.text)) fail("a name");
    ++pos_;
    return t.text;
  }
  int expect_int() {
    const Token& t = peek();
    if (t.kind != Token::Kind::kInt || t.text.size() > 9) fail("an integer");
    ++pos_;
    return std::stoi(t.text);
  }

  std::vector<std::string> name_list(char close) {
    std::vector<std::string> names;
    if (at_punct(close)) return names;
    names.push_back(expect_name());
    while (at_punct(',')) {
      ++pos_;
      names.push_back(expect_name());
    }
    return names;
  }

  Method parse_method() {
    expect_keyword("method");
    std::string name = expect_name();
    expect_punct('(');
    auto params = name_list(')');
    expect_punct(')');
    expect_punct('{');
    std::vector<Statement> body;
    while (!at_punct('}')) body.push_back(parse_statement());
    expect_punct('}');
    return Method(std::move(name), std::move(params), std::move(body));
  }

  void parse_call(Statement& s) {
    expect_keyword("call");
    s.kind = StmtKind::kCall;
    expect_punct('[');
    if (at_punct(']')) fail("a call target");
    s.targets = name_list(']');
    expect_punct(']');
    expect_punct('(');
    s.args = name_list(')');
    expect_punct(')');
  }

  Statement parse_statement() {
    Statement s;
    s.label = expect_int();
    expect_punct(':');
    if (at_keyword("call")) {
      parse_call(s);
    } else if (at_keyword("return")) {
      ++pos_;
      s.kind = StmtKind::kReturn;
      if (peek().kind == Token::Kind::kName && !is_keyword(peek().text)) {
        s.src = expect_name();
      }
    } else if (at_keyword("if")) {
      ++pos_;
      expect_keyword("goto");
      s.kind = StmtKind::kBranch;
      s.jump_target = expect_int();
    } else if (at_keyword("goto")) {
      ++pos_;
      s.kind = StmtKind::kGoto;
      s.jump_target = expect_int();
    } else if (at_keyword("nop")) {
      ++pos_;
      s.kind = StmtKind::kNop;
    } else {
      std::string lhs = expect_name();
      if (at_punct('.')) {
        ++pos_;
        s.kind = StmtKind::kFieldStore;
        s.dst = std::move(lhs);
        s.field = expect_name();
        expect_punct('=');
        s.src = expect_name();
      } else {
        expect_punct('=');
        s.dst = std::move(lhs);
        if (at_keyword("new")) {
          ++pos_;
          s.kind = StmtKind::kAlloc;
          s.type_tag = expect_name();
        } else if (at_keyword("null")) {
          ++pos_;
          s.kind = StmtKind::kAssignNull;
        } else if (at_keyword("call")) {
          parse_call(s);
        } else {
          s.src = expect_name();
          if (at_punct('.')) {
            ++pos_;
            s.kind = StmtKind::kFieldLoad;
            s.field = expect_name();
          } else {
            s.kind = StmtKind::kCopy;
          }
        }
      }
    }
    return s;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

void join(std::ostringstream& out, const std::vector<std::string>& names) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i != 0) out << ", ";
    out << names[i];
  }
}

}  // namespace

Program parse_program(std::string_view text) {
  Parser parser(tokenize(text));
  return Program::build(parser.parse());
}

std::string print_statement(const Statement& s) {
  std::ostringstream out;
  out << s.label << ": ";
  switch (s.kind) {
    case StmtKind::kAlloc: out << s.dst << " = new " << s.type_tag; break;
    case StmtKind::kCopy: out << s.dst << " = " << s.src; break;
    case StmtKind::kAssignNull: out << s.dst << " = null"; break;
    case StmtKind::kFieldStore:
      out << s.dst << "." << s.field << " = " << s.src;
      break;
    case StmtKind::kFieldLoad:
      out << s.dst << " = " << s.src << "." << s.field;
      break;
    case StmtKind::kCall:
      if (!s.dst.empty()) out << s.dst << " = ";
      out << "call [";
      join(out, s.targets);
      out << "](";
      join(out, s.args);
      out << ")";
      break;
    case StmtKind::kReturn:
      out << "return";
      if (!s.src.empty()) out << " " << s.src;
      break;
    case StmtKind::kBranch: out << "if goto " << s.jump_target; break;
    case StmtKind::kGoto: out << "goto " << s.jump_target; break;
    case StmtKind::kNop: out << "nop"; break;
  }
  return out.str();
}

std::string print_program(const Program& program) {
  std::ostringstream out;
  bool first = true;
  for (const auto& m : program.methods()) {
    if (!first) out << "\n";
    first = false;
    out << "method " << m.name() << "(";
    join(out, m.params());
    out << ") {\n";
    for (const auto& s : m.body()) out << "  " << print_statement(s) << "\n";
    out << "}\n";
  }
  return out.str();
}

}  // namespace art
