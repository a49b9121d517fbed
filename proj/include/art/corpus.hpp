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

// Hand-written fixture programs and a seeded generator of structured ones.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "art/ir.hpp"

namespace art {

namespace fixtures {

/// One method with a heap-carrying loop; the field f of c ends up pointing
/// to three allocation sites of two types at the loop header.
std::string_view loopy();
/// main calls a recursive foo that builds a small heap around its argument.
std::string_view rec();
/// A recursive method with no parameters and no heap effects.
std::string_view rec_same();
/// A loop whose body holds no reference instruction.
std::string_view arith();
/// Two loops entered from outside each other: not reducible.
std::string_view irreducible();

}  // namespace fixtures

struct CorpusConfig {
  std::size_t program_count = 50;
  std::size_t min_methods = 2;
  std::size_t max_methods = 5;
  std::size_t min_statements = 8;
  std::size_t max_statements = 28;
  double loop_probability = 0.35;
  double recursion_probability = 0.5;
  std::uint64_t seed = 1;

  /// Throws std::invalid_argument on empty ranges or bad probabilities.
  void validate() const;
};

struct CorpusProgram {
  std::string name;
  std::string text;
};

/// Builds one structured program from the given seed.
Program generate_program(const CorpusConfig& cfg, std::uint64_t seed);

/// The LOOPY and REC fixtures followed by cfg.program_count generated
/// programs, all in canonical printed form.
std::vector<CorpusProgram> generate_corpus(const CorpusConfig& cfg);

}  // namespace art
