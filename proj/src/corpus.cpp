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

#include "art/corpus.hpp"

#include <cstdio>
#include <random>
#include <stdexcept>
#include <utility>

namespace art {

namespace fixtures {

std::string_view loopy() {
  return R"(# c.f collects objects from before and inside the loop
method main() {
  3: a = new F1
  4: c = new C
  5: e = new F2
  6: d = new C
  7: c.f = a
  8: t = c.f
  9: d.f = t
  10: d.f = e
  11: n = new F1
  12: c.f = n
  13: x = d.f
  14: c.f = x
  15: if goto 8
  16: r = c.f
  17: return
}
)";
}

std::string_view rec() {
  return R"(method main() {
  1: x = new A
  2: r = call [foo](x)
  3: return
}

method foo(p) {
  4: q = new A
  5: s = new B
  6: n = null
  7: q.f = n
  8: s.g = q
  9: if goto 11
  10: t = call [foo](q)
  11: return s
}
)";
}

std::string_view rec_same() {
  return R"(method main() {
  1: call [walk]()
  2: return
}

method walk() {
  3: if goto 5
  4: call [walk]()
  5: return
}
)";
}

std::string_view arith() {
  return R"(method main() {
  1: a = new A
  2: nop
  3: nop
  4: if goto 2
  5: b = a
  6: return
}
)";
}

std::string_view irreducible() {
  return R"(method main() {
  1: if goto 4
  2: nop
  3: goto 4
  4: nop
  5: if goto 2
  6: return
}
)";
}

}  // namespace fixtures

void CorpusConfig::validate() const {
  if (min_methods == 0 || min_methods > max_methods) {
    throw std::invalid_argument("corpus: bad methods-per-program range");
  }
  if (min_statements < 2 || min_statements > max_statements) {
    throw std::invalid_argument("corpus: statements-per-method range must be within [2, max]");
  }
  for (double prob : {loop_probability, recursion_probability}) {
    if (!(prob >= 0.0 && prob <= 1.0)) {
      throw std::invalid_argument("corpus: probabilities must lie in [0, 1]");
    }
  }
}

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

constexpr const char* kFields[] = {"f", "g", "h"};
constexpr std::size_t kMaxLocals = 7;

class Generator {
 public:
  Generator(const CorpusConfig& cfg, std::uint64_t seed) : cfg_(cfg), rng_(seed) {}

  Program run() {
    const std::size_t count = cfg_.min_methods + below(cfg_.max_methods - cfg_.min_methods + 1);
    arity_.assign(count, 0);
    for (std::size_t k = 1; k < count; ++k) arity_[k] = 1 + below(2);

    // Each method calls its successor, so a call back to any earlier
    // method closes a cycle.
    required_.assign(count, {});
    for (std::size_t k = 0; k + 1 < count; ++k) required_[k].push_back(k + 1);
    if (count >= 2 && chance(cfg_.recursion_probability)) {
      plan_back_call(count);
      if (chance(cfg_.recursion_probability / 2)) plan_back_call(count);
    }

    std::vector<Method> methods;
    for (std::size_t k = 0; k < count; ++k) methods.push_back(method(k));
    return Program::build(std::move(methods));
  }

 private:
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }
  bool chance(double p) {
    return static_cast<double>(rng_() >> 11) * 0x1.0p-53 < p;
  }

  static std::string name_of(std::size_t k) {
    return k == 0 ? std::string("main") : "m" + std::to_string(k);
  }

  void plan_back_call(std::size_t count) {
    const std::size_t from = 1 + below(count - 1);
    const std::size_t to = 1 + below(from);
    required_[from].push_back(to);
  }

  std::size_t emit(Statement s) {
    s.label = next_label_++;
    for (std::size_t f : fixups_) body_[f].jump_target = s.label;
    fixups_.clear();
    body_.push_back(std::move(s));
    return body_.size() - 1;
  }

  const std::string& any_var() { return vars_[below(vars_.size())]; }

  std::string def_var() {
    if (locals_ < kMaxLocals && (locals_ == 0 || chance(0.35))) {
      std::string v = "v" + std::to_string(locals_++);
      return v;
    }
    return any_var();
  }

  void defined(const std::string& v) {
    for (const auto& x : vars_) {
      if (x == v) return;
    }
    vars_.push_back(v);
  }

  void alloc() {
    Statement s;
    s.kind = StmtKind::kAlloc;
    s.dst = def_var();
    s.type_tag = "T" + std::to_string(below(4));
    emit(s);
    defined(s.dst);
  }

  void call(std::size_t callee) {
    Statement s;
    s.kind = StmtKind::kCall;
    s.targets.push_back(name_of(callee));
    // Occasionally a second target of the same arity, as after imprecise
    // devirtualization.
    if (chance(0.15)) {
      for (std::size_t j = current_ + 1; j < arity_.size(); ++j) {
        if (j != callee && arity_[j] == arity_[callee] && chance(0.5)) {
          s.targets.push_back(name_of(j));
          break;
        }
      }
    }
    for (std::size_t i = 0; i < arity_[callee]; ++i) s.args.push_back(any_var());
    if (chance(0.6)) s.dst = def_var();
    emit(s);
    if (!s.dst.empty()) defined(s.dst);
  }

  void simple() {
    const std::size_t roll = below(100);
    Statement s;
    if (roll < 24) {
      alloc();
      return;
    }
    if (roll < 36) {
      s.kind = StmtKind::kCopy;
      s.src = any_var();
      s.dst = def_var();
    } else if (roll < 40) {
      s.kind = StmtKind::kAssignNull;
      s.dst = def_var();
    } else if (roll < 64) {
      s.kind = StmtKind::kFieldStore;
      s.dst = any_var();
      s.field = kFields[below(3)];
      s.src = any_var();
    } else if (roll < 88) {
      s.kind = StmtKind::kFieldLoad;
      s.src = any_var();
      s.field = kFields[below(3)];
      s.dst = def_var();
    } else if (current_ + 1 < arity_.size()) {
      call(current_ + 1 + below(arity_.size() - current_ - 1));
      return;
    } else {
      alloc();
      return;
    }
    emit(s);
    if (!s.dst.empty()) defined(s.dst);
  }

  void sequence(int depth, std::size_t budget) {
    const std::size_t end = body_.size() + budget;
    while (body_.size() < end) {
      const std::size_t left = end - body_.size();
      if (depth < 2 && left >= 3 && chance(cfg_.loop_probability)) {
        loop(depth, std::min(left, 3 + below(6)));
      } else if (depth < 2 && left >= 3 && chance(0.12)) {
        Statement branch;
        branch.kind = StmtKind::kBranch;
        const std::size_t b = emit(branch);
        sequence(depth + 1, std::min(left - 1, 1 + below(3)));
        fixups_.push_back(b);
      } else {
        simple();
      }
      if (!pending_calls_.empty() && chance(0.2)) {
        call(pending_calls_.back());
        pending_calls_.pop_back();
      }
    }
  }

  void loop(int depth, std::size_t budget) {
    const std::size_t shape = below(100);
    if (shape < 15) {
      // Counting loop with no reference instructions.
      const int header = next_label_;
      Statement nop;
      nop.kind = StmtKind::kNop;
      emit(nop);
      emit(nop);
      Statement back;
      back.kind = StmtKind::kBranch;
      back.jump_target = header;
      emit(back);
    } else if (shape < 60) {
      // do { body } while (*)
      const int header = next_label_;
      sequence(depth + 1, budget - 1);
      Statement back;
      back.kind = StmtKind::kBranch;
      back.jump_target = header;
      emit(back);
    } else {
      // while (*) { body }
      const int header = next_label_;
      Statement test;
      test.kind = StmtKind::kBranch;
      const std::size_t t = emit(test);
      sequence(depth + 1, budget - 2);
      Statement back;
      back.kind = StmtKind::kGoto;
      back.jump_target = header;
      emit(back);
      fixups_.push_back(t);
    }
  }

  Method method(std::size_t k) {
    current_ = k;
    body_.clear();
    vars_.clear();
    fixups_.clear();
    locals_ = 0;
    std::vector<std::string> params;
    for (std::size_t i = 0; i < arity_[k]; ++i) {
      params.push_back("p" + std::to_string(i));
      vars_.push_back(params.back());
    }
    pending_calls_ = required_[k];

    const std::size_t size =
        cfg_.min_statements + below(cfg_.max_statements - cfg_.min_statements + 1);
    alloc();
    if (k == 0) {
      alloc();
      Statement store;
      store.kind = StmtKind::kFieldStore;
      store.dst = vars_.back();
      store.field = kFields[0];
      store.src = vars_.front();
      emit(store);
    }
    if (size > body_.size() + 1) sequence(0, size - body_.size() - 1);
    while (!pending_calls_.empty()) {
      call(pending_calls_.back());
      pending_calls_.pop_back();
    }
    Statement ret;
    ret.kind = StmtKind::kReturn;
    if (k != 0 && chance(0.75)) ret.src = any_var();
    emit(ret);
    return Method(name_of(k), std::move(params), std::move(body_));
  }

  const CorpusConfig& cfg_;
  std::mt19937_64 rng_;
  std::vector<std::size_t> arity_;
  std::vector<std::vector<std::size_t>> required_;
  std::vector<std::size_t> pending_calls_;
  std::size_t current_ = 0;
  int next_label_ = 1;
  std::vector<Statement> body_;
  std::vector<std::string> vars_;
  std::vector<std::size_t> fixups_;
  std::size_t locals_ = 0;
};

}  // namespace

Program generate_program(const CorpusConfig& cfg, std::uint64_t seed) {
  cfg.validate();
  return Generator(cfg, seed).run();
}

std::vector<CorpusProgram> generate_corpus(const CorpusConfig& cfg) {
  cfg.validate();
  std::vector<CorpusProgram> out;
  out.push_back({"loopy", print_program(parse_program(fixtures::loopy()))});
  out.push_back({"rec", print_program(parse_program(fixtures::rec()))});
  std::uint64_t state = cfg.seed;
  for (std::size_t i = 0; i < cfg.program_count; ++i) {
    char name[16];
    std::snprintf(name, sizeof name, "gen%02zu", i);
    out.push_back({name, print_program(generate_program(cfg, splitmix64(state)))});
  }
  return out;
}

}  // namespace art
