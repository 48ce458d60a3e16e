// Copyright 2026 The msr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MSR_VALIDATE_HPP
#define MSR_VALIDATE_HPP

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "msr/goal_graph.hpp"

namespace msr {

enum class Severity {
  kError,
  kWarning,
};

inline const char* to_string(Severity s) {
  return s == Severity::kError ? "error" : "warning";
}

// One validation finding.  `subject` is the node id or, for edge problems, a
// "source -> target" rendering; `rule` is a stable machine-readable id.
struct Diagnostic {
  Severity severity = Severity::kError;
  std::string rule;
  std::string subject;
  std::string message;
};

inline bool has_errors(const std::vector<Diagnostic>& diagnostics) {
  for (const Diagnostic& d : diagnostics) {
    if (d.severity == Severity::kError) return true;
  }
  return false;
}

namespace detail {

struct EdgeSignature {
  bool (*source_ok)(NodeKind);
  bool (*target_ok)(NodeKind);
  const char* expects;
};

inline const EdgeSignature& edge_signature(EdgeKind kind) {
  static const EdgeSignature kRefine{
      [](NodeKind k) { return is_refinable_kind(k); },
      [](NodeKind k) { return is_goal_kind(k); },
      "goal or behavior -> goal"};
  static const EdgeSignature kObstruct{
      [](NodeKind k) { return k == NodeKind::kObstacle; },
      [](NodeKind k) { return is_goal_kind(k); }, "obstacle -> goal"};
  static const EdgeSignature kResolve{
      [](NodeKind k) { return k == NodeKind::kMechanismGoal; },
      [](NodeKind k) { return k == NodeKind::kObstacle; },
      "mechanism goal -> obstacle"};
  static const EdgeSignature kResponsible{
      [](NodeKind k) { return k == NodeKind::kAgent; },
      [](NodeKind k) { return k == NodeKind::kSystemBehavior; },
      "agent -> system behavior"};
  static const EdgeSignature kConcern{
      [](NodeKind k) { return is_goal_kind(k); },
      [](NodeKind k) { return k == NodeKind::kAsset; }, "goal -> asset"};
  static const EdgeSignature kReference{
      [](NodeKind) { return true; },
      [](NodeKind k) { return k == NodeKind::kDomainProperty; },
      "node -> domain property"};
  static const EdgeSignature kDependency{
      [](NodeKind k) { return k == NodeKind::kAsset; },
      [](NodeKind k) { return k == NodeKind::kAsset; }, "asset -> asset"};
  static const EdgeSignature kAffects{
      [](NodeKind k) { return k == NodeKind::kObstacle; },
      [](NodeKind k) { return k == NodeKind::kAsset; },
      "obstacle -> asset"};
  switch (kind) {
    case EdgeKind::kRefinement:
      return kRefine;
    case EdgeKind::kObstruction:
      return kObstruct;
    case EdgeKind::kResolution:
      return kResolve;
    case EdgeKind::kResponsibility:
      return kResponsible;
    case EdgeKind::kConcern:
      return kConcern;
    case EdgeKind::kReference:
      return kReference;
    case EdgeKind::kDependency:
      return kDependency;
    case EdgeKind::kAffects:
      return kAffects;
  }
  return kReference;
}

}  // namespace detail

// Structural validation.  Returns diagnostics in a deterministic order:
// edge-level checks first (in edge order), then node-level checks (by id),
// then graph-level checks.  Never throws; a broken graph is the expected
// input here.
inline std::vector<Diagnostic> validate_model(const GoalGraph& graph) {
  std::vector<Diagnostic> out;
  const auto& nodes = graph.nodes();

  const auto edge_subject = [](const Edge& e) {
    return e.source + " -> " + e.target;
  };

  // Edge endpoints and signatures.
  for (const Edge& e : graph.edges()) {
    const bool have_source = graph.has_node(e.source);
    const bool have_target = graph.has_node(e.target);
    if (!have_source || !have_target) {
      out.push_back(Diagnostic{
          Severity::kError, "edge.dangling", edge_subject(e),
          std::string(to_string(e.kind)) + " edge references missing node " +
              (have_source ? e.target : e.source)});
      continue;
    }
    const auto& sig = detail::edge_signature(e.kind);
    const NodeKind sk = nodes.at(e.source).kind();
    const NodeKind tk = nodes.at(e.target).kind();
    if (!sig.source_ok(sk) || !sig.target_ok(tk)) {
      out.push_back(Diagnostic{
          Severity::kError, "edge.signature", edge_subject(e),
          std::string(to_string(e.kind)) + " edge expects " + sig.expects +
              ", got " + to_string(sk) + " -> " + to_string(tk)});
    }
  }

  // Refinement group coherence: one parent and one mode per group id.
  {
    std::map<std::string, std::set<std::string>> parents;
    std::map<std::string, std::set<RefineMode>> modes;
    for (const Edge& e : graph.edges()) {
      if (e.kind != EdgeKind::kRefinement) continue;
      parents[e.group].insert(e.target);
      modes[e.group].insert(e.mode);
    }
    for (const auto& [group, ps] : parents) {
      if (ps.size() > 1) {
        std::string list;
        for (const std::string& p : ps) {
          if (!list.empty()) list += ", ";
          list += p;
        }
        out.push_back(Diagnostic{Severity::kError, "refinement.group-parent",
                                 group,
                                 "refinement group " + group +
                                     " has multiple parents: " + list});
      }
      if (modes[group].size() > 1) {
        out.push_back(Diagnostic{
            Severity::kError, "refinement.group-mode", group,
            "refinement group " + group + " mixes AND and OR edges"});
      }
    }
  }

  // Per-node rules.
  for (const auto& [id, node] : nodes) {
    switch (node.kind()) {
      case NodeKind::kServiceResilienceGoal:
      case NodeKind::kResourceResilienceGoal: {
        const GoalSpec& g = node.goal();
        if (!graph.has_attribute(g.attribute)) {
          out.push_back(Diagnostic{
              Severity::kError, "goal.attribute", id,
              "goal " + id + " references unknown attribute " + g.attribute});
        }
        const GoalThresholds& t = g.thresholds;
        const bool positive =
            (!t.dt_max || *t.dt_max > 0.0) && (!t.rr_max || *t.rr_max > 0.0) &&
            (!t.pl_max || *t.pl_max > 0.0);
        if (!t.any() || !positive) {
          out.push_back(Diagnostic{
              Severity::kError, "goal.thresholds", id,
              "goal " + id +
                  (t.any() ? " has a non-positive threshold"
                           : " declares no thresholds")});
        }
        break;
      }
      default:
        break;
    }

    if (node.kind() == NodeKind::kServiceResilienceGoal) {
      bool concerns_service = false;
      bool references_benchmark = false;
      for (const Edge& e : graph.edges()) {
        if (e.source != id || !graph.has_node(e.target)) continue;
        const Node& target = nodes.at(e.target);
        if (e.kind == EdgeKind::kConcern &&
            target.kind() == NodeKind::kAsset &&
            target.asset_spec().type == AssetType::kService) {
          concerns_service = true;
        }
        if (e.kind == EdgeKind::kReference &&
            target.kind() == NodeKind::kDomainProperty) {
          const auto& dp = target.domain_property_spec();
          if (dp.benchmark && dp.benchmark->attribute == node.goal().attribute) {
            references_benchmark = true;
          }
        }
      }
      if (!concerns_service) {
        out.push_back(Diagnostic{
            Severity::kError, "goal.concern", id,
            "service resilience goal " + id +
                " has no concern edge to a service asset"});
      }
      if (!references_benchmark) {
        out.push_back(Diagnostic{
            Severity::kError, "goal.benchmark", id,
            "service resilience goal " + id +
                " references no domain property carrying a benchmark for its "
                "attribute"});
      }
    }

    if (node.kind() == NodeKind::kSystemBehavior) {
      bool performed = false;
      for (const Edge& e : graph.edges()) {
        if (e.kind == EdgeKind::kResponsibility && e.target == id &&
            graph.has_node(e.source) &&
            nodes.at(e.source).kind() == NodeKind::kAgent) {
          performed = true;
        }
      }
      if (!performed) {
        out.push_back(Diagnostic{
            Severity::kError, "behavior.responsibility", id,
            "system behavior " + id + " has no responsible agent"});
      }
    }

    if (node.kind() == NodeKind::kObstacle &&
        node.obstacle_spec().diagnosed) {
      bool affects = false;
      for (const Edge& e : graph.edges()) {
        if (e.kind == EdgeKind::kAffects && e.source == id &&
            graph.has_node(e.target) &&
            nodes.at(e.target).kind() == NodeKind::kAsset) {
          affects = true;
        }
      }
      if (!affects) {
        out.push_back(Diagnostic{
            Severity::kError, "obstacle.affects", id,
            "diagnosed obstacle " + id +
                " does not name the asset it affects"});
      }
    }

    if (node.kind() == NodeKind::kMechanismGoal) {
      bool resolves = false;
      for (const Edge& e : graph.edges()) {
        if (e.kind == EdgeKind::kResolution && e.source == id) {
          resolves = true;
        }
      }
      if (!resolves) {
        out.push_back(Diagnostic{
            Severity::kWarning, "mechanism.resolution", id,
            "mechanism goal " + id + " resolves no obstacle"});
      }
    }

    if (node.kind() == NodeKind::kAsset &&
        node.asset_spec().type == AssetType::kService) {
      // Walk dependency edges looking for any reachable resource asset.
      std::set<std::string> seen{id};
      std::vector<std::string> frontier{id};
      bool reaches_resource = false;
      while (!frontier.empty() && !reaches_resource) {
        const std::string current = frontier.back();
        frontier.pop_back();
        for (const Edge& e : graph.edges()) {
          if (e.kind != EdgeKind::kDependency || e.source != current) {
            continue;
          }
          if (!graph.has_node(e.target) || seen.count(e.target) != 0) {
            continue;
          }
          seen.insert(e.target);
          const Node& dep = nodes.at(e.target);
          if (dep.kind() == NodeKind::kAsset) {
            if (dep.asset_spec().type == AssetType::kResource) {
              reaches_resource = true;
              break;
            }
            frontier.push_back(e.target);
          }
        }
      }
      if (!reaches_resource) {
        out.push_back(Diagnostic{
            Severity::kWarning, "asset.dependency", id,
            "service asset " + id +
                " depends on no resource asset, directly or transitively"});
      }
    }
  }

  // Refinement acyclicity, over edges whose endpoints exist.
  {
    std::map<std::string, std::vector<std::string>> parent_of;
    for (const Edge& e : graph.edges()) {
      if (e.kind == EdgeKind::kRefinement && graph.has_node(e.source) &&
          graph.has_node(e.target)) {
        parent_of[e.source].push_back(e.target);
      }
    }
    std::map<std::string, int> color;  // 0 fresh, 1 on stack, 2 done
    std::string cycle_node;
    // Iterative DFS from every node; a back edge to the active stack is a
    // cycle in the child-to-parent relation.
    const std::function<bool(const std::string&)> visit =
        [&](const std::string& n) -> bool {
      color[n] = 1;
      for (const std::string& p : parent_of[n]) {
        if (color[p] == 1) {
          cycle_node = p;
          return true;
        }
        if (color[p] == 0 && visit(p)) return true;
      }
      color[n] = 2;
      return false;
    };
    for (const auto& [id, lists] : parent_of) {
      (void)lists;
      if (color[id] == 0 && visit(id)) {
        out.push_back(Diagnostic{
            Severity::kError, "refinement.cycle", cycle_node,
            "refinement relation contains a cycle through " + cycle_node});
        break;
      }
    }
  }

  return out;
}

}  // namespace msr

#endif  // MSR_VALIDATE_HPP
