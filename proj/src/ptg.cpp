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

#include "art/ptg.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

#include "art/error.hpp"

namespace art {

bool PointsToGraph::add(FieldEdge edge) {
  if (edge.source.is_null()) return false;
  return field_edges_.insert(std::move(edge)).second;
}

bool PointsToGraph::add(const Edge& edge) {
  return std::visit([this](const auto& e) { return add(e); }, edge);
}

bool PointsToGraph::erase(const Edge& edge) {
  return std::visit([this](const auto& e) { return erase(e); }, edge);
}

bool PointsToGraph::contains(const Edge& edge) const {
  return std::visit([this](const auto& e) { return contains(e); }, edge);
}

std::vector<ObjectId> PointsToGraph::points_to(const VarId& var) const {
  std::vector<ObjectId> out;
  for (auto it = var_edges_.lower_bound(VarEdge{var, ObjectId{}});
       it != var_edges_.end() && it->var == var; ++it) {
    out.push_back(it->target);
  }
  return out;
}

std::vector<ObjectId> PointsToGraph::points_to(const ObjectId& source,
                                               std::string_view field) const {
  std::vector<ObjectId> out;
  FieldEdge probe{source, std::string(field), ObjectId{}};
  for (auto it = field_edges_.lower_bound(probe);
       it != field_edges_.end() && it->source == source && it->field == field;
       ++it) {
    out.push_back(it->target);
  }
  return out;
}

void PointsToGraph::kill(const VarId& var) {
  auto first = var_edges_.lower_bound(VarEdge{var, ObjectId{}});
  auto last = first;
  while (last != var_edges_.end() && last->var == var) ++last;
  var_edges_.erase(first, last);
}

bool PointsToGraph::meet_with(const PointsToGraph& other) {
  const std::size_t before = size();
  var_edges_.insert(other.var_edges_.begin(), other.var_edges_.end());
  field_edges_.insert(other.field_edges_.begin(), other.field_edges_.end());
  return size() != before;
}

bool PointsToGraph::subsumes(const PointsToGraph& other) const {
  return std::includes(var_edges_.begin(), var_edges_.end(),
                       other.var_edges_.begin(), other.var_edges_.end()) &&
         std::includes(field_edges_.begin(), field_edges_.end(),
                       other.field_edges_.begin(), other.field_edges_.end());
}

std::vector<Edge> PointsToGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(size());
  for (const auto& e : var_edges_) out.emplace_back(e);
  for (const auto& e : field_edges_) out.emplace_back(e);
  return out;
}

PointsToGraph meet(const PointsToGraph& a, const PointsToGraph& b) {
  PointsToGraph out = a;
  out.meet_with(b);
  return out;
}

bool subsumes(const PointsToGraph& a, const PointsToGraph& b) {
  return a.subsumes(b);
}

PointsToGraph transfer(const Method& m, const Statement& s,
                       const PointsToGraph& in) {
  const std::string& name = m.name();
  PointsToGraph out = in;
  switch (s.kind) {
    case StmtKind::kAlloc: {
      VarId x{name, s.dst_slot};
      out.kill(x);
      out.add(VarEdge{x, ObjectId::site(name, s.label)});
      break;
    }
    case StmtKind::kCopy: {
      VarId x{name, s.dst_slot};
      auto targets = in.points_to(VarId{name, s.src_slot});
      out.kill(x);
      for (auto& o : targets) out.add(VarEdge{x, std::move(o)});
      break;
    }
    case StmtKind::kAssignNull: {
      VarId x{name, s.dst_slot};
      out.kill(x);
      out.add(VarEdge{x, ObjectId::null()});
      break;
    }
    case StmtKind::kFieldStore: {
      auto values = in.points_to(VarId{name, s.src_slot});
      for (const auto& o : in.points_to(VarId{name, s.dst_slot})) {
        if (o.is_null()) continue;
        for (const auto& v : values) out.add(FieldEdge{o, s.field, v});
      }
      break;
    }
    case StmtKind::kFieldLoad: {
      VarId x{name, s.dst_slot};
      std::set<ObjectId> loaded;
      for (const auto& o : in.points_to(VarId{name, s.src_slot})) {
        for (auto& t : in.points_to(o, s.field)) loaded.insert(std::move(t));
      }
      out.kill(x);
      for (const auto& o : loaded) out.add(VarEdge{x, o});
      break;
    }
    case StmtKind::kReturn: {
      if (!s.returns_value()) break;
      VarId ret = VarId::ret(name);
      auto targets = in.points_to(VarId{name, s.src_slot});
      out.kill(ret);
      for (auto& o : targets) out.add(VarEdge{ret, std::move(o)});
      break;
    }
    case StmtKind::kCall:
      throw std::logic_error("transfer: call statements go through project_in/out");
    case StmtKind::kBranch:
    case StmtKind::kGoto:
    case StmtKind::kNop:
      break;
  }
  return out;
}

PointsToGraph project_in(const PointsToGraph& in_at_call, const Statement& s,
                         const Method& caller, const Method& callee) {
  if (s.args.size() != callee.params().size()) {
    throw ArityMismatch("call at " + caller.name() + ":" +
                        std::to_string(s.label) + " passes " +
                        std::to_string(s.args.size()) + " argument(s) to '" +
                        callee.name() + "', which takes " +
                        std::to_string(callee.params().size()));
  }
  PointsToGraph out;
  std::vector<ObjectId> frontier;
  std::set<ObjectId> seen;
  for (std::size_t i = 0; i < s.arg_slots.size(); ++i) {
    VarId formal{callee.name(), static_cast<int>(i)};
    for (auto& o : in_at_call.points_to(VarId{caller.name(), s.arg_slots[i]})) {
      out.add(VarEdge{formal, o});
      if (seen.insert(o).second) frontier.push_back(std::move(o));
    }
  }
  const auto& fields = in_at_call.field_edges();
  while (!frontier.empty()) {
    ObjectId o = std::move(frontier.back());
    frontier.pop_back();
    for (auto it = fields.lower_bound(FieldEdge{o, std::string(), ObjectId{}});
         it != fields.end() && it->source == o; ++it) {
      out.add(*it);
      if (seen.insert(it->target).second) frontier.push_back(it->target);
    }
  }
  return out;
}

PointsToGraph project_out(const PointsToGraph& summary, const Statement& s,
                          const Method& caller,
                          const PointsToGraph& in_at_call) {
  PointsToGraph out = in_at_call;
  for (const auto& e : summary.field_edges()) out.add(e);
  if (s.binds_result()) {
    VarId x{caller.name(), s.dst_slot};
    out.kill(x);
    for (const auto& e : summary.var_edges()) {
      if (e.var.is_ret()) out.add(VarEdge{x, e.target});
    }
  }
  return out;
}

PointsToGraph out_summary(const PointsToGraph& exit_graph) {
  PointsToGraph out;
  for (const auto& e : exit_graph.var_edges()) {
    if (e.var.is_ret()) out.add(e);
  }
  for (const auto& e : exit_graph.field_edges()) out.add(e);
  return out;
}

PointsToGraph placeholder_entry(const Method& m) {
  PointsToGraph out;
  for (std::size_t i = 0; i < m.params().size(); ++i) {
    const int slot = static_cast<int>(i);
    out.add(VarEdge{VarId{m.name(), slot}, ObjectId::placeholder(m.name(), slot)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Rendering

std::string render(const ObjectId& object) {
  switch (object.kind) {
    case ObjectId::Kind::kNull: return "null";
    case ObjectId::Kind::kSite:
      return object.method + ":" + std::to_string(object.index);
    case ObjectId::Kind::kPlaceholder:
      return object.method + "?" + std::to_string(object.index);
  }
  return "?";
}

std::string render(const VarId& var) {
  return var.method + "/" + (var.is_ret() ? std::string("$ret")
                                          : std::to_string(var.slot));
}

std::string render(const VarEdge& edge) {
  return render(edge.var) + " -> " + render(edge.target);
}

std::string render(const FieldEdge& edge) {
  return render(edge.source) + " ." + edge.field + "-> " + render(edge.target);
}

std::string render(const Edge& edge) {
  return std::visit([](const auto& e) { return render(e); }, edge);
}

std::vector<std::string> render_lines(const PointsToGraph& graph) {
  std::vector<std::string> vars;
  std::vector<std::string> fields;
  vars.reserve(graph.var_edges().size());
  fields.reserve(graph.field_edges().size());
  for (const auto& e : graph.var_edges()) vars.push_back(render(e));
  for (const auto& e : graph.field_edges()) fields.push_back(render(e));
  std::sort(vars.begin(), vars.end());
  std::sort(fields.begin(), fields.end());
  vars.insert(vars.end(), std::make_move_iterator(fields.begin()),
              std::make_move_iterator(fields.end()));
  return vars;
}

std::string render(const PointsToGraph& graph) {
  std::string out;
  for (const auto& line : render_lines(graph)) {
    out += line;
    out += '\n';
  }
  return out;
}

namespace {

bool is_identifier(std::string_view text) {
  if (text.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(text[0])) && text[0] != '_') {
    return false;
  }
  return std::all_of(text.begin(), text.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

std::optional<int> parse_index(std::string_view text) {
  if (text.empty() || text.size() > 9) return std::nullopt;
  if (!std::all_of(text.begin(), text.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
      })) {
    return std::nullopt;
  }
  if (text.size() > 1 && text[0] == '0') return std::nullopt;
  int value = 0;
  std::from_chars(text.data(), text.data() + text.size(), value);
  return value;
}

std::optional<VarId> parse_var(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return std::nullopt;
  const auto method = text.substr(0, slash);
  const auto slot = text.substr(slash + 1);
  if (!is_identifier(method)) return std::nullopt;
  if (slot == "$ret") return VarId::ret(std::string(method));
  auto index = parse_index(slot);
  if (!index) return std::nullopt;
  return VarId{std::string(method), *index};
}

}  // namespace

std::optional<ObjectId> parse_object(std::string_view text) {
  if (text == "null") return ObjectId::null();
  for (char sep : {':', '?'}) {
    const auto pos = text.find(sep);
    if (pos == std::string_view::npos) continue;
    const auto method = text.substr(0, pos);
    auto index = parse_index(text.substr(pos + 1));
    if (!is_identifier(method) || !index) return std::nullopt;
    if (sep == ':') {
      if (*index <= 0) return std::nullopt;
      return ObjectId::site(std::string(method), *index);
    }
    return ObjectId::placeholder(std::string(method), *index);
  }
  return std::nullopt;
}

std::optional<Edge> parse_edge(std::string_view text) {
  const auto dot = text.find(" .");
  if (dot != std::string_view::npos) {
    const auto arrow = text.find("-> ", dot);
    if (arrow == std::string_view::npos) return std::nullopt;
    auto source = parse_object(text.substr(0, dot));
    const auto field = text.substr(dot + 2, arrow - dot - 2);
    auto target = parse_object(text.substr(arrow + 3));
    if (!source || !target || !is_identifier(field) || source->is_null()) {
      return std::nullopt;
    }
    return FieldEdge{std::move(*source), std::string(field), std::move(*target)};
  }
  const auto arrow = text.find(" -> ");
  if (arrow == std::string_view::npos) return std::nullopt;
  auto var = parse_var(text.substr(0, arrow));
  auto target = parse_object(text.substr(arrow + 4));
  if (!var || !target) return std::nullopt;
  return VarEdge{std::move(*var), std::move(*target)};
}

}  // namespace art
