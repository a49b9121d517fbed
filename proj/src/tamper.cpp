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

#include "art/tamper.hpp"

#include <map>
#include <random>
#include <set>
#include <variant>

#include "art/error.hpp"
#include "art/producer.hpp"

namespace art {

std::string_view to_string(TamperKind kind) {
  switch (kind) {
    case TamperKind::kRemoveEdge: return "remove-edge";
    case TamperKind::kRemoveNode: return "remove-node";
    case TamperKind::kReplaceObject: return "replace-object";
    case TamperKind::kShrinkPointsToSet: return "shrink-set";
    case TamperKind::kDeleteEntry: return "delete-entry";
    case TamperKind::kAddEdge: return "add-edge";
  }
  return "?";
}

std::optional<TamperKind> parse_tamper_kind(std::string_view text) {
  for (TamperKind k : {TamperKind::kRemoveEdge, TamperKind::kRemoveNode,
                       TamperKind::kReplaceObject, TamperKind::kShrinkPointsToSet,
                       TamperKind::kDeleteEntry, TamperKind::kAddEdge}) {
    if (to_string(k) == text) return k;
  }
  return std::nullopt;
}

bool is_reductive(TamperKind kind) {
  return kind != TamperKind::kDeleteEntry && kind != TamperKind::kAddEdge;
}

namespace {

enum class SectionId { kLoop, kIn, kOut };

struct EntryRef {
  SectionId section;
  LoopKey key;  // label unused outside [loop]

  std::string text() const {
    switch (section) {
      case SectionId::kLoop:
        return "[loop] m:" + key.method + " l:" + std::to_string(key.label);
      case SectionId::kIn: return "[in] m:" + key.method;
      case SectionId::kOut: return "[out] m:" + key.method;
    }
    return "?";
  }
};

std::vector<EntryRef> entries_of(const Artwork& a) {
  std::vector<EntryRef> out;
  for (const auto& [key, g] : a.i_loop) out.push_back({SectionId::kLoop, key});
  for (const auto& [name, g] : a.i_in) out.push_back({SectionId::kIn, {name, 0}});
  for (const auto& [name, g] : a.i_out) out.push_back({SectionId::kOut, {name, 0}});
  return out;
}

PointsToGraph& graph_of(Artwork& a, const EntryRef& e) {
  switch (e.section) {
    case SectionId::kLoop: return a.i_loop.at(e.key);
    case SectionId::kIn: return a.i_in.at(e.key.method);
    case SectionId::kOut: return a.i_out.at(e.key.method);
  }
  throw std::logic_error("bad section");
}

void erase_entry(Artwork& a, const EntryRef& e) {
  switch (e.section) {
    case SectionId::kLoop: a.i_loop.erase(e.key); break;
    case SectionId::kIn: a.i_in.erase(e.key.method); break;
    case SectionId::kOut: a.i_out.erase(e.key.method); break;
  }
}

/// Uniform-ish draws by modulo so that results match across standard
/// library implementations.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }
  template <typename T>
  const T& pick(const std::vector<T>& v) { return v[below(v.size())]; }
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 rng_;
};

using Node = std::variant<VarId, ObjectId>;

std::string render_node(const Node& n) {
  return std::visit([](const auto& x) { return render(x); }, n);
}

std::set<ObjectId> objects_of(const Artwork& a) {
  std::set<ObjectId> out;
  auto add = [&](const PointsToGraph& g) {
    for (const auto& e : g.var_edges()) out.insert(e.target);
    for (const auto& e : g.field_edges()) {
      out.insert(e.source);
      out.insert(e.target);
    }
  };
  for (const auto& [k, g] : a.i_loop) add(g);
  for (const auto& [k, g] : a.i_in) add(g);
  for (const auto& [k, g] : a.i_out) add(g);
  return out;
}

Edge with_target(const Edge& e, const ObjectId& target) {
  if (const auto* v = std::get_if<VarEdge>(&e)) return VarEdge{v->var, target};
  const auto& f = std::get<FieldEdge>(e);
  return FieldEdge{f.source, f.field, target};
}

const ObjectId& target_of(const Edge& e) {
  if (const auto* v = std::get_if<VarEdge>(&e)) return v->target;
  return std::get<FieldEdge>(e).target;
}

[[noreturn]] void nothing(TamperKind kind) {
  throw NothingToTamper(std::string("no element eligible for ") +
                        std::string(to_string(kind)));
}

std::pair<Artwork, std::string> add_edge(const Artwork& a, const Program& p,
                                         Draw& draw) {
  std::set<ObjectId> universe = objects_of(a);
  for (const auto& m : p.methods()) {
    for (const auto& s : m.body()) {
      if (s.kind == StmtKind::kAlloc) universe.insert(ObjectId::site(m.name(), s.label));
    }
  }
  universe.insert(ObjectId::null());
  const std::vector<ObjectId> targets(universe.begin(), universe.end());
  std::vector<ObjectId> sources;
  for (const auto& o : targets) {
    if (!o.is_null()) sources.push_back(o);
  }
  std::vector<std::string> fields = p.fields();
  if (fields.empty()) fields.push_back("f");

  std::vector<EntryRef> eligible;
  for (const auto& e : entries_of(a)) {
    if (e.section == SectionId::kOut || p.find(e.key.method) == nullptr) continue;
    eligible.push_back(e);
  }

  Artwork seeded = a;
  while (!eligible.empty()) {
    const std::size_t pick = draw.below(eligible.size());
    const EntryRef entry = eligible[pick];
    PointsToGraph& g = graph_of(seeded, entry);
    const std::size_t params = p.method(entry.key.method).params().size();

    std::vector<Edge> candidates;
    if (entry.section == SectionId::kIn) {
      for (std::size_t i = 0; i < params; ++i) {
        for (const auto& o : targets) {
          candidates.emplace_back(VarEdge{VarId{entry.key.method, static_cast<int>(i)}, o});
        }
      }
    }
    for (const auto& s : sources) {
      for (const auto& f : fields) {
        for (const auto& o : targets) candidates.emplace_back(FieldEdge{s, f, o});
      }
    }
    std::vector<Edge> absent;
    for (auto& c : candidates) {
      if (!g.contains(c)) absent.push_back(std::move(c));
    }
    if (absent.empty()) {
      eligible.erase(eligible.begin() + static_cast<long>(pick));
      continue;
    }
    const Edge edge = draw.pick(absent);
    g.add(edge);

    Seeds seeds;
    for (const auto& [name, graph] : seeded.i_in) {
      if (p.find(name) != nullptr) seeds.in[name] = graph;
    }
    for (const auto& [key, graph] : seeded.i_loop) seeds.header[key] = graph;
    Artwork closed = emit_artwork(p, analyze_inter(p, seeds));
    if (a.dedup) closed = optimize_artwork(p, closed);
    return {std::move(closed), entry.text() + " " + render(edge)};
  }
  nothing(TamperKind::kAddEdge);
}

}  // namespace

std::pair<Artwork, TamperSpec> tamper(const Artwork& a, TamperKind kind,
                                      std::uint64_t seed, const Program* program) {
  Draw draw(seed);
  Artwork out = a;
  TamperSpec spec{seed, kind, {}};
  const std::vector<EntryRef> entries = entries_of(a);

  switch (kind) {
    case TamperKind::kRemoveEdge: {
      std::vector<std::pair<EntryRef, Edge>> candidates;
      for (const auto& e : entries) {
        for (auto& edge : graph_of(out, e).edges()) candidates.emplace_back(e, std::move(edge));
      }
      if (candidates.empty()) nothing(kind);
      const auto& [entry, edge] = draw.pick(candidates);
      graph_of(out, entry).erase(edge);
      spec.target = entry.text() + " " + render(edge);
      break;
    }
    case TamperKind::kRemoveNode: {
      std::vector<std::pair<EntryRef, Node>> candidates;
      for (const auto& e : entries) {
        std::set<Node> nodes;
        const PointsToGraph& g = graph_of(out, e);
        for (const auto& edge : g.var_edges()) {
          nodes.insert(edge.var);
          nodes.insert(edge.target);
        }
        for (const auto& edge : g.field_edges()) {
          nodes.insert(edge.source);
          nodes.insert(edge.target);
        }
        for (const auto& n : nodes) candidates.emplace_back(e, n);
      }
      if (candidates.empty()) nothing(kind);
      const auto& [entry, node] = draw.pick(candidates);
      PointsToGraph& g = graph_of(out, entry);
      PointsToGraph kept;
      for (const auto& edge : g.var_edges()) {
        if (Node(edge.var) != node && Node(edge.target) != node) kept.add(edge);
      }
      for (const auto& edge : g.field_edges()) {
        if (Node(edge.source) != node && Node(edge.target) != node) kept.add(edge);
      }
      g = std::move(kept);
      spec.target = entry.text() + " node " + render_node(node);
      break;
    }
    case TamperKind::kReplaceObject: {
      std::set<ObjectId> universe = objects_of(a);
      universe.insert(ObjectId::null());
      struct Candidate {
        EntryRef entry;
        Edge edge;
        std::vector<ObjectId> replacements;
      };
      std::vector<Candidate> candidates;
      for (const auto& e : entries) {
        const PointsToGraph& g = graph_of(out, e);
        for (auto& edge : g.edges()) {
          std::vector<ObjectId> options;
          for (const auto& o : universe) {
            if (o != target_of(edge) && !g.contains(with_target(edge, o))) options.push_back(o);
          }
          if (!options.empty()) candidates.push_back({e, std::move(edge), std::move(options)});
        }
      }
      if (candidates.empty()) nothing(kind);
      const Candidate& c = draw.pick(candidates);
      const ObjectId& replacement = draw.pick(c.replacements);
      PointsToGraph& g = graph_of(out, c.entry);
      g.erase(c.edge);
      g.add(with_target(c.edge, replacement));
      spec.target = c.entry.text() + " " + render(c.edge) + " => " + render(replacement);
      break;
    }
    case TamperKind::kShrinkPointsToSet: {
      // A points-to set is the targets of one variable or of one
      // (object, field) pair.
      struct Candidate {
        EntryRef entry;
        std::vector<Edge> members;
      };
      std::vector<Candidate> candidates;
      for (const auto& e : entries) {
        const PointsToGraph& g = graph_of(out, e);
        std::map<VarId, std::vector<Edge>> by_var;
        std::map<std::pair<ObjectId, std::string>, std::vector<Edge>> by_field;
        for (const auto& edge : g.var_edges()) by_var[edge.var].emplace_back(edge);
        for (const auto& edge : g.field_edges()) {
          by_field[{edge.source, edge.field}].emplace_back(edge);
        }
        for (auto& [k, v] : by_var) {
          if (v.size() >= 2) candidates.push_back({e, std::move(v)});
        }
        for (auto& [k, v] : by_field) {
          if (v.size() >= 2) candidates.push_back({e, std::move(v)});
        }
      }
      if (candidates.empty()) nothing(kind);
      Candidate c = draw.pick(candidates);
      const std::size_t removed = 1 + draw.below(c.members.size() - 1);
      draw.shuffle(c.members);
      PointsToGraph& g = graph_of(out, c.entry);
      std::string what;
      for (std::size_t k = 0; k < removed; ++k) {
        g.erase(c.members[k]);
        what += (k == 0 ? "" : ", ") + render(c.members[k]);
      }
      spec.target = c.entry.text() + " drop " + what;
      break;
    }
    case TamperKind::kDeleteEntry: {
      if (entries.empty()) nothing(kind);
      const EntryRef& entry = draw.pick(entries);
      erase_entry(out, entry);
      spec.target = entry.text();
      break;
    }
    case TamperKind::kAddEdge: {
      if (program == nullptr) {
        throw Error("add-edge tampering needs the program to re-close the artwork");
      }
      auto [closed, target] = add_edge(a, *program, draw);
      out = std::move(closed);
      spec.target = std::move(target);
      break;
    }
  }
  return {std::move(out), std::move(spec)};
}

std::size_t CampaignReport::detected() const {
  std::size_t n = 0;
  for (const auto& t : trials) n += t.detected ? 1 : 0;
  return n;
}

std::string CampaignReport::render() const {
  std::string out;
  for (const auto& t : trials) {
    out += std::string(to_string(t.spec.kind)) + " " + t.spec.target + " " +
           (t.detected ? "UNSAFE" : "SAFE");
    if (t.violation) out += " (" + std::string(to_string(*t.violation)) + ")";
    out += "\n";
  }
  out += "detected " + std::to_string(detected()) + "/" + std::to_string(trials.size()) + "\n";
  return out;
}

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

CampaignReport run_campaign(const Program& p, const Artwork& a,
                            const std::vector<TamperKind>& kinds, std::size_t n,
                            std::uint64_t seed) {
  CampaignReport report;
  if (n == 0) return report;
  if (kinds.empty()) throw std::invalid_argument("campaign without tamper kinds");
  std::uint64_t state = seed;
  for (std::size_t t = 0; t < n; ++t) {
    const std::uint64_t trial_seed = splitmix64(state);
    const std::size_t first = static_cast<std::size_t>(trial_seed % kinds.size());
    std::optional<std::pair<Artwork, TamperSpec>> mutated;
    for (std::size_t k = 0; k < kinds.size() && !mutated; ++k) {
      try {
        mutated = tamper(a, kinds[(first + k) % kinds.size()], trial_seed, &p);
      } catch (const NothingToTamper&) {
      }
    }
    if (!mutated) nothing(kinds[first]);
    const RegenOutcome outcome = regen_inter(p, mutated->first);
    TrialReport trial{std::move(mutated->second), !outcome.safe(), std::nullopt};
    if (!outcome.safe()) trial.violation = outcome.violations.front().kind;
    report.trials.push_back(std::move(trial));
  }
  return report;
}

CampaignReport rq2_campaign(const Program& p, const Artwork& a, std::size_t n,
                            std::uint64_t seed) {
  return run_campaign(p, a, {std::begin(kReductiveKinds), std::end(kReductiveKinds)},
                      n, seed);
}

}  // namespace art
