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

#include "art/call_graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>

#include "art/error.hpp"

namespace art {

CallGraph CallGraph::build(const Program& p) {
  std::vector<std::size_t> order(p.methods().size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  return build(p, order);
}

CallGraph CallGraph::build(const Program& p,
                           const std::vector<std::size_t>& visit_order) {
  CallGraph g;
  const std::size_t n = p.methods().size();
  for (std::size_t i = 0; i < n; ++i) {
    g.nodes_.push_back(p.methods()[i].name());
    g.node_index_.emplace(p.methods()[i].name(), i);
  }
  std::vector<std::vector<std::size_t>> succ(n);
  for (const auto& m : p.methods()) {
    const std::size_t from = g.node_index_.at(m.name());
    for (const auto& s : m.body()) {
      if (s.kind != StmtKind::kCall) continue;
      for (const auto& t : s.targets) {
        g.edges_.push_back(CallEdge{m.name(), s.label, t});
        succ[from].push_back(g.node_index_.at(t));
      }
    }
  }

  // Tarjan's algorithm; the component numbering it produces is discarded
  // below in favour of a canonical order.
  std::vector<long> index(n, -1);
  std::vector<long> low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::size_t> comp(n, 0);
  std::size_t comp_count = 0;
  long counter = 0;
  std::function<void(std::size_t)> strong = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (std::size_t w : succ[v]) {
      if (index[w] < 0) {
        strong(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp[w] = comp_count;
      } while (w != v);
      ++comp_count;
    }
  };
  for (std::size_t v : visit_order) {
    if (v < n && index[v] < 0) strong(v);
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (index[v] < 0) strong(v);
  }

  // Canonical callee-first order: a component becomes ready once all the
  // components it calls are placed; ties go to the smallest member index.
  std::vector<std::size_t> min_member(comp_count, n);
  for (std::size_t v = 0; v < n; ++v) {
    min_member[comp[v]] = std::min(min_member[comp[v]], v);
  }
  std::vector<std::set<std::size_t>> callees(comp_count);
  std::vector<std::set<std::size_t>> callers(comp_count);
  std::vector<bool> cyclic(comp_count, false);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t w : succ[v]) {
      if (comp[v] == comp[w]) {
        cyclic[comp[v]] = true;
      } else {
        callees[comp[v]].insert(comp[w]);
        callers[comp[w]].insert(comp[v]);
      }
    }
  }
  std::vector<std::size_t> pending(comp_count);
  using Item = std::pair<std::size_t, std::size_t>;  // (min member, comp)
  std::priority_queue<Item, std::vector<Item>, std::greater<>> ready;
  for (std::size_t c = 0; c < comp_count; ++c) {
    pending[c] = callees[c].size();
    if (pending[c] == 0) ready.emplace(min_member[c], c);
  }
  std::vector<std::size_t> rank(comp_count);
  while (!ready.empty()) {
    const std::size_t c = ready.top().second;
    ready.pop();
    rank[c] = g.sccs_.size();
    g.sccs_.emplace_back();
    g.cyclic_.push_back(cyclic[c]);
    for (std::size_t up : callers[c]) {
      if (--pending[up] == 0) ready.emplace(min_member[up], up);
    }
  }
  g.scc_of_.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    g.scc_of_[v] = rank[comp[v]];
    g.sccs_[rank[comp[v]]].push_back(g.nodes_[v]);
  }

  for (const auto& e : g.edges_) {
    if (g.is_recursive(e)) g.recursive_sites_.emplace(e.caller, e.label);
  }
  return g;
}

std::size_t CallGraph::scc_of(std::string_view method) const {
  auto it = node_index_.find(method);
  if (it == node_index_.end()) {
    throw ResolutionError("unknown method '" + std::string(method) + "'");
  }
  return scc_of_[it->second];
}

bool CallGraph::is_recursive(std::string_view caller,
                             std::string_view callee) const {
  const std::size_t c = scc_of(caller);
  return c == scc_of(callee) && cyclic_[c];
}

bool CallGraph::is_recursive(const CallEdge& edge) const {
  return is_recursive(edge.caller, edge.callee);
}

std::vector<CallSite> CallGraph::callers_of(std::string_view method) const {
  std::vector<CallSite> out;
  for (const auto& e : edges_) {
    if (e.callee == method) out.emplace_back(e.caller, e.label);
  }
  return out;
}

}  // namespace art
