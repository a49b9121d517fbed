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

// Points-to graphs and the flow functions over them.

#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "art/ir.hpp"

namespace art {

/// An abstract heap object: an allocation site, the null object, or the
/// stand-in object a parameter points to when a method is analyzed alone.
struct ObjectId {
  enum class Kind { kNull, kSite, kPlaceholder };

  Kind kind = Kind::kNull;
  std::string method;
  int index = 0;  // site label or parameter index

  static ObjectId null() { return {}; }
  static ObjectId site(std::string method, int label) {
    return {Kind::kSite, std::move(method), label};
  }
  static ObjectId placeholder(std::string method, int param) {
    return {Kind::kPlaceholder, std::move(method), param};
  }

  bool is_null() const { return kind == Kind::kNull; }

  auto operator<=>(const ObjectId&) const = default;
};

/// A stack slot of a method. kRet names the per-method return carrier.
struct VarId {
  static constexpr int kRet = -1;

  std::string method;
  int slot = 0;

  static VarId ret(std::string method) { return {std::move(method), kRet}; }
  bool is_ret() const { return slot == kRet; }

  auto operator<=>(const VarId&) const = default;
};

struct VarEdge {
  VarId var;
  ObjectId target;
  auto operator<=>(const VarEdge&) const = default;
};

struct FieldEdge {
  ObjectId source;
  std::string field;
  ObjectId target;
  auto operator<=>(const FieldEdge&) const = default;
};

using Edge = std::variant<VarEdge, FieldEdge>;

class PointsToGraph {
 public:
  PointsToGraph() = default;

  const std::set<VarEdge>& var_edges() const { return var_edges_; }
  const std::set<FieldEdge>& field_edges() const { return field_edges_; }

  bool empty() const { return var_edges_.empty() && field_edges_.empty(); }
  std::size_t size() const { return var_edges_.size() + field_edges_.size(); }

  bool add(VarEdge edge) { return var_edges_.insert(std::move(edge)).second; }
  /// Edges out of the null object are dropped; returns whether the graph grew.
  bool add(FieldEdge edge);
  bool add(const Edge& edge);
  bool erase(const VarEdge& edge) { return var_edges_.erase(edge) != 0; }
  bool erase(const FieldEdge& edge) { return field_edges_.erase(edge) != 0; }
  bool erase(const Edge& edge);
  bool contains(const VarEdge& edge) const { return var_edges_.count(edge) != 0; }
  bool contains(const FieldEdge& edge) const {
    return field_edges_.count(edge) != 0;
  }
  bool contains(const Edge& edge) const;

  std::vector<ObjectId> points_to(const VarId& var) const;
  std::vector<ObjectId> points_to(const ObjectId& source,
                                  std::string_view field) const;

  /// Removes every edge out of var.
  void kill(const VarId& var);

  /// In-place meet; returns whether any edge was added.
  bool meet_with(const PointsToGraph& other);

  /// True iff other is a subgraph of this graph.
  bool subsumes(const PointsToGraph& other) const;

  std::vector<Edge> edges() const;

  bool operator==(const PointsToGraph&) const = default;

 private:
  std::set<VarEdge> var_edges_;
  std::set<FieldEdge> field_edges_;
};

PointsToGraph meet(const PointsToGraph& a, const PointsToGraph& b);
bool subsumes(const PointsToGraph& a, const PointsToGraph& b);

/// Flow function of a non-call statement of method m.
PointsToGraph transfer(const Method& m, const Statement& s,
                       const PointsToGraph& in);

/// Callee-side view of the caller heap at a call site: formals bound to the
/// actuals' targets plus the field edges reachable from them.
PointsToGraph project_in(const PointsToGraph& in_at_call, const Statement& s,
                         const Method& caller, const Method& callee);

/// Caller graph after the call, given the met summaries of the targets.
PointsToGraph project_out(const PointsToGraph& summary, const Statement& s,
                          const Method& caller,
                          const PointsToGraph& in_at_call);

/// Restricts a method's exit graph to what flows back to callers.
PointsToGraph out_summary(const PointsToGraph& exit_graph);

/// Entry graph used when a method is analyzed on its own: every parameter
/// points to its placeholder object.
PointsToGraph placeholder_entry(const Method& m);

std::string render(const ObjectId& object);
std::string render(const VarId& var);
std::string render(const VarEdge& edge);
std::string render(const FieldEdge& edge);
std::string render(const Edge& edge);

/// One edge per line: var edges first, then field edges, each group sorted
/// by rendered text.
std::vector<std::string> render_lines(const PointsToGraph& graph);
std::string render(const PointsToGraph& graph);

std::optional<ObjectId> parse_object(std::string_view text);
std::optional<Edge> parse_edge(std::string_view text);

}  // namespace art
