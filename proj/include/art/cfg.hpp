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

// Statement-level control-flow graphs with dominator-based loop detection.
//
// Nodes 0..n-1 are the statements of the method in body order; node n is the
// synthetic Entry and node n+1 the synthetic Exit. Statements that cannot be
// reached from Entry are attached to it for dominance purposes only, so that
// dead loops still get a header; they keep no real predecessor edge.

#pragma once

#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include "art/ir.hpp"

namespace art {

struct BasicBlock {
  std::size_t first = 0;  // statement index of the leader
  std::size_t last = 0;   // inclusive
  std::vector<std::size_t> successors;    // block indices
  std::vector<std::size_t> predecessors;  // block indices
};

class ControlFlowGraph {
 public:
  /// Throws IrreducibleCfg when a retreating edge is not a back edge.
  static ControlFlowGraph build(const Method& m);

  std::size_t statement_count() const { return n_; }
  std::size_t entry() const { return n_; }
  std::size_t exit() const { return n_ + 1; }

  const std::vector<std::size_t>& successors(std::size_t node) const {
    return succ_[node];
  }
  const std::vector<std::size_t>& predecessors(std::size_t node) const {
    return pred_[node];
  }

  const std::vector<BasicBlock>& blocks() const { return blocks_; }
  std::size_t block_of(std::size_t stmt) const { return block_of_[stmt]; }

  /// Block indices in a topological order of the forward edges.
  const std::vector<std::size_t>& topo_order() const { return topo_; }

  /// Statement indices in the order the topological block walk visits them.
  std::vector<std::size_t> statement_order() const;

  /// (source, header) statement index pairs.
  const std::set<std::pair<std::size_t, std::size_t>>& back_edges() const {
    return back_edges_;
  }
  bool is_back_edge(std::size_t from, std::size_t to) const {
    return back_edges_.count({from, to}) != 0;
  }

  /// Statement indices of loop headers, ascending.
  const std::vector<std::size_t>& loop_headers() const { return headers_; }
  bool is_loop_header(std::size_t stmt) const;

  /// Statements of the natural loop(s) of header, header included.
  std::set<std::size_t> loop_body(std::size_t header) const;

  bool dominates(std::size_t a, std::size_t b) const;

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<std::size_t>> succ_;
  std::vector<std::vector<std::size_t>> pred_;
  std::vector<long> idom_;       // -1 when not reached
  std::vector<std::size_t> rpo_index_;
  std::vector<BasicBlock> blocks_;
  std::vector<std::size_t> block_of_;
  std::vector<std::size_t> topo_;
  std::set<std::pair<std::size_t, std::size_t>> back_edges_;
  std::vector<std::size_t> headers_;
};

}  // namespace art
