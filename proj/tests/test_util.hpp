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

#pragma once

#include <initializer_list>
#include <stdexcept>
#include <string>

#include "art/ptg.hpp"

namespace art::testing {

// Builds a graph from rendered edge lines such as "main/0 -> main:3".
inline PointsToGraph graph(std::initializer_list<const char*> lines) {
  PointsToGraph g;
  for (const char* line : lines) {
    auto edge = parse_edge(line);
    if (!edge) throw std::invalid_argument(std::string("bad edge: ") + line);
    g.add(*edge);
  }
  return g;
}

inline ObjectId site(const char* m, int label) { return ObjectId::site(m, label); }

}  // namespace art::testing
