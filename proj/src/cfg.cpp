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

#include "art/cfg.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>
#include <string>

#include "art/error.hpp"

namespace art {

namespace {

void push_unique(std::vector<std::size_t>& v, std::size_t x) {
  if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
}

}  // namespace

ControlFlowGraph ControlFlowGraph::build(const Method& m) {
  ControlFlowGraph g;
  const auto& body = m.body();
  const std::size_t n = body.size();
  g.n_ = n;
  g.succ_.assign(n + 2, {});
  g.pred_.assign(n + 2, {});
  const std::size_t entry = n;
  const std::size_t exit = n + 1;

  for (std::size_t i = 0; i < n; ++i) {
    const Statement& s = body[i];
    const std::size_t next = i + 1 < n ? i + 1 : exit;
    switch (s.kind) {
      case StmtKind::kGoto:
        push_unique(g.succ_[i], *m.index_of_label(s.jump_target));
        break;
      case StmtKind::kBranch:
        push_unique(g.succ_[i], next);
        push_unique(g.succ_[i], *m.index_of_label(s.jump_target));
        break;
      case StmtKind::kReturn:
        push_unique(g.succ_[i], exit);
        break;
      default:
        push_unique(g.succ_[i], next);
        break;
    }
  }
  g.succ_[entry].push_back(n == 0 ? exit : 0);
  for (std::size_t u = 0; u < n + 2; ++u) {
    for (std::size_t v : g.succ_[u]) push_unique(g.pred_[v], u);
  }

  // Depth-first search from Entry; statements it misses are attached to
  // Entry by virtual edges in body order.
  enum class Color { kWhite, kGray, kBlack };
  std::vector<Color> color(n + 2, Color::kWhite);
  std::vector<std::size_t> postorder;
  std::vector<std::pair<std::size_t, std::size_t>> retreating;
  std::vector<std::vector<std::size_t>> dom_pred = g.pred_;
  std::vector<std::size_t> virtual_roots;

  auto dfs = [&](std::size_t root) {
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    color[root] = Color::kGray;
    while (!stack.empty()) {
      auto& [u, next] = stack.back();
      if (next < g.succ_[u].size()) {
        const std::size_t v = g.succ_[u][next++];
        if (color[v] == Color::kWhite) {
          color[v] = Color::kGray;
          stack.emplace_back(v, 0);
        } else if (color[v] == Color::kGray) {
          retreating.emplace_back(u, v);
        }
      } else {
        color[u] = Color::kBlack;
        postorder.push_back(u);
        stack.pop_back();
      }
    }
  };
  dfs(entry);
  // Entry is finished; reopen it so virtual roots hang below it.
  postorder.pop_back();
  for (std::size_t i = 0; i < n; ++i) {
    if (color[i] != Color::kWhite) continue;
    push_unique(dom_pred[i], entry);
    virtual_roots.push_back(i);
    dfs(i);
  }
  postorder.push_back(entry);

  // Immediate dominators (Cooper, Harvey and Kennedy).
  std::vector<std::size_t> rpo(postorder.rbegin(), postorder.rend());
  g.rpo_index_.assign(n + 2, n + 2);
  for (std::size_t k = 0; k < rpo.size(); ++k) g.rpo_index_[rpo[k]] = k;
  g.idom_.assign(n + 2, -1);
  g.idom_[entry] = static_cast<long>(entry);
  auto intersect = [&](std::size_t a, std::size_t b) {
    while (a != b) {
      while (g.rpo_index_[a] > g.rpo_index_[b]) a = static_cast<std::size_t>(g.idom_[a]);
      while (g.rpo_index_[b] > g.rpo_index_[a]) b = static_cast<std::size_t>(g.idom_[b]);
    }
    return a;
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t k = 1; k < rpo.size(); ++k) {
      const std::size_t b = rpo[k];
      long new_idom = -1;
      for (std::size_t p : dom_pred[b]) {
        if (g.idom_[p] < 0) continue;
        new_idom = new_idom < 0
                       ? static_cast<long>(p)
                       : static_cast<long>(
                             intersect(p, static_cast<std::size_t>(new_idom)));
      }
      if (new_idom != g.idom_[b]) {
        g.idom_[b] = new_idom;
        changed = true;
      }
    }
  }

  for (const auto& [u, v] : retreating) {
    if (!g.dominates(v, u)) {
      throw IrreducibleCfg("method '" + m.name() + "': edge " +
                           std::to_string(body[u].label) + " -> " +
                           std::to_string(body[v].label) +
                           " enters a loop that label " +
                           std::to_string(body[v].label) +
                           " does not dominate");
    }
    g.back_edges_.emplace(u, v);
    push_unique(g.headers_, v);
  }
  std::sort(g.headers_.begin(), g.headers_.end());

  // Basic blocks.
  std::vector<bool> leader(n, false);
  if (n > 0) leader[0] = true;
  for (std::size_t i = 0; i < n; ++i) {
    const Statement& s = body[i];
    if (s.kind == StmtKind::kGoto || s.kind == StmtKind::kBranch) {
      leader[*m.index_of_label(s.jump_target)] = true;
    }
    if ((s.kind == StmtKind::kGoto || s.kind == StmtKind::kBranch ||
         s.kind == StmtKind::kReturn) &&
        i + 1 < n) {
      leader[i + 1] = true;
    }
  }
  for (std::size_t h : g.headers_) leader[h] = true;
  for (std::size_t v : virtual_roots) leader[v] = true;

  g.block_of_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (leader[i]) g.blocks_.push_back(BasicBlock{i, i, {}, {}});
    g.blocks_.back().last = i;
    g.block_of_[i] = g.blocks_.size() - 1;
  }
  for (std::size_t b = 0; b < g.blocks_.size(); ++b) {
    for (std::size_t v : g.succ_[g.blocks_[b].last]) {
      if (v >= n) continue;
      push_unique(g.blocks_[b].successors, g.block_of_[v]);
      push_unique(g.blocks_[g.block_of_[v]].predecessors, b);
    }
  }

  // Kahn's algorithm over forward edges, smallest leader first.
  std::vector<std::size_t> indegree(g.blocks_.size(), 0);
  for (std::size_t b = 0; b < g.blocks_.size(); ++b) {
    for (std::size_t s : g.blocks_[b].successors) {
      if (!g.is_back_edge(g.blocks_[b].last, g.blocks_[s].first)) ++indegree[s];
    }
  }
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t b = 0; b < g.blocks_.size(); ++b) {
    if (indegree[b] == 0) ready.push(b);
  }
  while (!ready.empty()) {
    const std::size_t b = ready.top();
    ready.pop();
    g.topo_.push_back(b);
    for (std::size_t s : g.blocks_[b].successors) {
      if (g.is_back_edge(g.blocks_[b].last, g.blocks_[s].first)) continue;
      if (--indegree[s] == 0) ready.push(s);
    }
  }
  if (g.topo_.size() != g.blocks_.size()) {
    throw IrreducibleCfg("method '" + m.name() +
                         "': forward edges contain a cycle");
  }
  return g;
}

std::vector<std::size_t> ControlFlowGraph::statement_order() const {
  std::vector<std::size_t> out;
  out.reserve(n_);
  for (std::size_t b : topo_) {
    for (std::size_t i = blocks_[b].first; i <= blocks_[b].last; ++i) {
      out.push_back(i);
    }
  }
  return out;
}

bool ControlFlowGraph::is_loop_header(std::size_t stmt) const {
  return std::binary_search(headers_.begin(), headers_.end(), stmt);
}

std::set<std::size_t> ControlFlowGraph::loop_body(std::size_t header) const {
  std::set<std::size_t> body{header};
  std::vector<std::size_t> stack;
  for (const auto& [u, v] : back_edges_) {
    if (v == header) stack.push_back(u);
  }
  while (!stack.empty()) {
    const std::size_t x = stack.back();
    stack.pop_back();
    if (!body.insert(x).second) continue;
    for (std::size_t p : pred_[x]) {
      if (p < n_) stack.push_back(p);
    }
  }
  return body;
}

bool ControlFlowGraph::dominates(std::size_t a, std::size_t b) const {
  if (a == b) return true;
  if (idom_[b] < 0) return false;
  std::size_t x = b;
  while (x != entry()) {
    x = static_cast<std::size_t>(idom_[x]);
    if (x == a) return true;
  }
  return false;
}

}  // namespace art
