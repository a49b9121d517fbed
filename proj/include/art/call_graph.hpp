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

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "art/ir.hpp"

namespace art {

struct CallEdge {
  std::string caller;
  int label = 0;  // call-site label within caller
  std::string callee;
  auto operator<=>(const CallEdge&) const = default;
};

using CallSite = std::pair<std::string, int>;  // (caller, label)

class CallGraph {
 public:
  static CallGraph build(const Program& p);
  /// Same graph, with SCC discovery visiting methods in the given order
  /// (indices into p.methods()). The result does not depend on the order.
  static CallGraph build(const Program& p,
                         const std::vector<std::size_t>& visit_order);

  const std::vector<std::string>& nodes() const { return nodes_; }
  const std::vector<CallEdge>& edges() const { return edges_; }

  /// Components callee-first: every callee outside a component appears in
  /// an earlier one. Members are listed in program order.
  const std::vector<std::vector<std::string>>& sccs() const { return sccs_; }
  std::size_t scc_of(std::string_view method) const;
  bool is_cyclic(std::size_t scc) const { return cyclic_[scc]; }
  bool in_cyclic_scc(std::string_view method) const {
    return cyclic_[scc_of(method)];
  }

  bool is_recursive(const CallEdge& edge) const;
  bool is_recursive(std::string_view caller, std::string_view callee) const;
  /// Call sites with at least one recursive target.
  const std::set<CallSite>& recursive_call_sites() const {
    return recursive_sites_;
  }

  /// Call sites in other methods or the method itself that may invoke m.
  std::vector<CallSite> callers_of(std::string_view method) const;

 private:
  std::vector<std::string> nodes_;
  std::map<std::string, std::size_t, std::less<>> node_index_;
  std::vector<CallEdge> edges_;
  std::vector<std::vector<std::string>> sccs_;
  std::vector<std::size_t> scc_of_;
  std::vector<bool> cyclic_;
  std::set<CallSite> recursive_sites_;
};

}  // namespace art
