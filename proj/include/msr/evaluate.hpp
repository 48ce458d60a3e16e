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

#ifndef MSR_EVALUATE_HPP
#define MSR_EVALUATE_HPP

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "msr/goal_graph.hpp"
#include "msr/types.hpp"

namespace msr {

// Three-valued satisfaction.  Unknown means "not enough measurements to
// decide", never "somewhere between satisfied and violated".
enum class GoalStatus {
  kSatisfied,
  kViolated,
  kUnknown,
};

inline const char* to_string(GoalStatus s) {
  switch (s) {
    case GoalStatus::kSatisfied:
      return "satisfied";
    case GoalStatus::kViolated:
      return "violated";
    case GoalStatus::kUnknown:
      return "unknown";
  }
  return "?";
}

// One metric at or over its threshold.
struct MetricBreach {
  std::string metric;
  double measured = 0.0;
  double threshold = 0.0;
};

// One degradation that breached at least one threshold of a goal.
struct GoalViolation {
  double t_start = 0.0;
  double t_end = 0.0;
  bool unrecovered = false;
  std::vector<MetricBreach> breaches;
};

struct GoalEvaluation {
  GoalStatus status = GoalStatus::kSatisfied;
  std::vector<GoalViolation> violations;
};

// Judges one measured goal against its thresholds.  A degradation violates
// the goal when any present threshold is met or exceeded; staying strictly
// below all of them is required to satisfy.  With no degradations the goal
// is vacuously satisfied.
//
// Every degradation must carry the goal's attribute; a mismatch is a
// ModelError, not a skipped entry.
inline GoalEvaluation evaluate_goal(
    const Node& goal,
    const std::vector<std::pair<Degradation, ResilienceMetrics>>& measured) {
  const GoalSpec& spec = goal.goal();
  GoalEvaluation result;
  for (const auto& [deg, metrics] : measured) {
    if (deg.attribute != spec.attribute) {
      throw ModelError("goal " + goal.id() + " constrains attribute " +
                       spec.attribute + " but was given a degradation of " +
                       deg.attribute);
    }
    GoalViolation v;
    v.t_start = deg.t_start;
    v.t_end = deg.t_end;
    v.unrecovered = deg.unrecovered;
    const GoalThresholds& t = spec.thresholds;
    if (t.dt_max && metrics.disruption_tolerance >= *t.dt_max) {
      v.breaches.push_back(MetricBreach{"disruption_tolerance",
                                        metrics.disruption_tolerance,
                                        *t.dt_max});
    }
    if (t.rr_max && metrics.recovery_rapidity >= *t.rr_max) {
      v.breaches.push_back(MetricBreach{
          "recovery_rapidity", metrics.recovery_rapidity, *t.rr_max});
    }
    if (t.pl_max && metrics.performance_loss >= *t.pl_max) {
      v.breaches.push_back(MetricBreach{
          "performance_loss", metrics.performance_loss, *t.pl_max});
    }
    if (!v.breaches.empty()) result.violations.push_back(std::move(v));
  }
  result.status = result.violations.empty() ? GoalStatus::kSatisfied
                                            : GoalStatus::kViolated;
  return result;
}

// Three-valued AND: a bundle satisfied only in full, violated by any member.
inline GoalStatus and_combine(const std::vector<GoalStatus>& statuses) {
  bool all_satisfied = true;
  for (GoalStatus s : statuses) {
    if (s == GoalStatus::kViolated) return GoalStatus::kViolated;
    if (s != GoalStatus::kSatisfied) all_satisfied = false;
  }
  return all_satisfied ? GoalStatus::kSatisfied : GoalStatus::kUnknown;
}

// Three-valued OR: a bundle satisfied by any member, violated only in full.
inline GoalStatus or_combine(const std::vector<GoalStatus>& statuses) {
  bool all_violated = !statuses.empty();
  for (GoalStatus s : statuses) {
    if (s == GoalStatus::kSatisfied) return GoalStatus::kSatisfied;
    if (s != GoalStatus::kViolated) all_violated = false;
  }
  return all_violated ? GoalStatus::kViolated : GoalStatus::kUnknown;
}

// Combines what a node's refinements derive with what was measured on the
// node itself.  Violation from either side sticks; otherwise satisfaction
// from either side suffices; otherwise Unknown.
inline GoalStatus merge_status(GoalStatus a, GoalStatus b) {
  if (a == GoalStatus::kViolated || b == GoalStatus::kViolated) {
    return GoalStatus::kViolated;
  }
  if (a == GoalStatus::kSatisfied || b == GoalStatus::kSatisfied) {
    return GoalStatus::kSatisfied;
  }
  return GoalStatus::kUnknown;
}

// Bottom-up satisfaction propagation.
//
// Each refinement group derives one status from its children (AND or OR per
// the group's mode); a parent with several groups holds alternative
// refinements, so group results combine by OR.  That derived status is then
// merged with the node's own terminal status (default Unknown), letting a
// directly measured interior goal contribute evidence; see merge_status.
// Unrefined nodes keep their terminal status.
//
// Returns a status for every goal and system-behavior node.  Throws
// ModelError on a refinement cycle or an edge naming a missing node; run
// validate_model first for diagnostics instead of exceptions.
inline std::map<std::string, GoalStatus> propagate(
    const GoalGraph& graph,
    const std::map<std::string, GoalStatus>& terminal) {
  struct Group {
    RefineMode mode = RefineMode::kAnd;
    std::vector<std::string> children;
  };
  std::map<std::string, std::map<std::string, Group>> groups_of;
  for (const Edge& e : graph.edges()) {
    if (e.kind != EdgeKind::kRefinement) continue;
    if (!graph.has_node(e.source) || !graph.has_node(e.target)) {
      throw ModelError("refinement edge " + e.source + " -> " + e.target +
                       " names a missing node");
    }
    Group& g = groups_of[e.target][e.group];
    g.mode = e.mode;
    g.children.push_back(e.source);
  }

  const auto terminal_of = [&terminal](const std::string& id) {
    const auto it = terminal.find(id);
    return it == terminal.end() ? GoalStatus::kUnknown : it->second;
  };

  std::map<std::string, GoalStatus> memo;
  std::map<std::string, int> state;  // 0 fresh, 1 active, 2 done
  const std::function<GoalStatus(const std::string&)> status_of =
      [&](const std::string& id) -> GoalStatus {
    if (state[id] == 2) return memo[id];
    if (state[id] == 1) {
      throw ModelError("refinement cycle through " + id);
    }
    state[id] = 1;
    GoalStatus result = terminal_of(id);
    const auto git = groups_of.find(id);
    if (git != groups_of.end()) {
      std::vector<GoalStatus> group_results;
      for (const auto& [group_id, group] : git->second) {
        std::vector<GoalStatus> child_statuses;
        for (const std::string& child : group.children) {
          child_statuses.push_back(status_of(child));
        }
        group_results.push_back(group.mode == RefineMode::kAnd
                                    ? and_combine(child_statuses)
                                    : or_combine(child_statuses));
      }
      result = merge_status(result, or_combine(group_results));
    }
    state[id] = 2;
    memo[id] = result;
    return result;
  };

  std::map<std::string, GoalStatus> out;
  for (const auto& [id, node] : graph.nodes()) {
    if (is_refinable_kind(node.kind())) out[id] = status_of(id);
  }
  return out;
}

// Adds an obstacle obstructing `target_goal_id` and affecting
// `affected_asset_id`, returning the updated copy of the graph.  When
// `supersedes` names an earlier obstacle (a raw degradation record being
// replaced by its diagnosed root cause), that node loses its Obstruction
// edges and is marked superseded, so only the newest diagnosis obstructs.
inline GoalGraph attach_obstacle(const GoalGraph& graph, const Node& obstacle,
                                 const std::string& target_goal_id,
                                 const std::string& affected_asset_id,
                                 const std::string& supersedes = "") {
  if (obstacle.kind() != NodeKind::kObstacle) {
    throw ModelError("attach_obstacle: node " + obstacle.id() + " is " +
                     to_string(obstacle.kind()) + ", not an obstacle");
  }
  if (!is_goal_kind(graph.node(target_goal_id).kind())) {
    throw ModelError("attach_obstacle: target " + target_goal_id +
                     " is not a goal");
  }
  if (graph.node(affected_asset_id).kind() != NodeKind::kAsset) {
    throw ModelError("attach_obstacle: " + affected_asset_id +
                     " is not an asset");
  }
  GoalGraph updated = graph;
  if (!supersedes.empty()) {
    Node& old = updated.mutable_node(supersedes);
    old.mutable_obstacle_spec().superseded_by = obstacle.id();
    updated.remove_edges_if([&](const Edge& e) {
      return e.kind == EdgeKind::kObstruction && e.source == supersedes;
    });
  }
  updated.add_node(obstacle);
  updated.add_edge(link(EdgeKind::kObstruction, obstacle.id(),
                        target_goal_id));
  updated.add_edge(link(EdgeKind::kAffects, obstacle.id(),
                        affected_asset_id));
  return updated;
}

// A set of nodes and internal edges to splice into a graph, rooted at a
// mechanism goal.
struct GraphFragment {
  std::vector<Node> nodes;
  std::vector<Edge> edges;
};

// Inserts a mechanism subtree, refines the parent goal by it (OR mode, per
// the convention that mechanisms are alternative ways to keep a goal), and
// records that it resolves `obstacle_id`.  Returns the updated copy.
//
// All mechanisms under one parent share a single OR group: if an eligible
// group already exists (OR mode, all children mechanism goals), the new root
// joins it, so two mechanisms resolving one obstacle end up as siblings.
inline GoalGraph resolve_with_mechanism(const GoalGraph& graph,
                                        const GraphFragment& mechanism,
                                        const std::string& root_id,
                                        const std::string& obstacle_id,
                                        const std::string& parent_goal_id) {
  const Node* root = nullptr;
  for (const Node& n : mechanism.nodes) {
    if (n.id() == root_id) root = &n;
  }
  if (root == nullptr || root->kind() != NodeKind::kMechanismGoal) {
    throw ModelError("resolve_with_mechanism: fragment root " + root_id +
                     " missing or not a mechanism goal");
  }
  if (graph.node(obstacle_id).kind() != NodeKind::kObstacle) {
    throw ModelError("resolve_with_mechanism: " + obstacle_id +
                     " is not an obstacle");
  }
  if (!is_goal_kind(graph.node(parent_goal_id).kind())) {
    throw ModelError("resolve_with_mechanism: parent " + parent_goal_id +
                     " is not a goal");
  }

  // Reuse the parent's existing all-mechanism OR group if there is one;
  // smallest group id wins for determinism.
  std::optional<std::string> group;
  {
    std::map<std::string, std::pair<bool, bool>> candidate;  // or-mode, all-mech
    for (const Edge& e : graph.edges()) {
      if (e.kind != EdgeKind::kRefinement || e.target != parent_goal_id) {
        continue;
      }
      auto& [is_or, all_mech] = candidate.try_emplace(e.group, true, true)
                                    .first->second;
      if (e.mode != RefineMode::kOr) is_or = false;
      if (!graph.has_node(e.source) ||
          graph.node(e.source).kind() != NodeKind::kMechanismGoal) {
        all_mech = false;
      }
    }
    for (const auto& [id, flags] : candidate) {
      if (flags.first && flags.second) {
        group = id;
        break;
      }
    }
  }
  if (!group) {
    std::set<std::string> taken;
    for (const Edge& e : graph.edges()) {
      if (e.kind == EdgeKind::kRefinement) taken.insert(e.group);
    }
    std::string fresh = "mech:" + parent_goal_id;
    while (taken.count(fresh) != 0) fresh += "+";
    group = fresh;
  }

  GoalGraph updated = graph;
  for (const Node& n : mechanism.nodes) updated.add_node(n);
  for (const Edge& e : mechanism.edges) updated.add_edge(e);
  updated.add_edge(refinement(root_id, parent_goal_id, *group,
                              RefineMode::kOr));
  updated.add_edge(link(EdgeKind::kResolution, root_id, obstacle_id));
  return updated;
}

}  // namespace msr

#endif  // MSR_EVALUATE_HPP
