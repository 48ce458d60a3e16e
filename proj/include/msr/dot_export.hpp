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

// Graphviz DOT emission.
//
// Output is deterministic: nodes ordered by id, refinement groups by group
// id, remaining edges by (kind, source, target).  Each refinement group is
// drawn through a junction point labeled AND or OR, children below their
// parent (rank direction bottom-to-top).  A status map marks violated
// nodes with a heavy red border.  Exporting never mutates the graph, and a
// graph that fails validation is rejected.

#ifndef MSR_DOT_EXPORT_HPP
#define MSR_DOT_EXPORT_HPP

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "msr/evaluate.hpp"
#include "msr/goal_graph.hpp"
#include "msr/io_util.hpp"
#include "msr/validate.hpp"

namespace msr {

struct NodeStyle {
  std::string shape;
  std::string fill;
  double penwidth = 1.0;
};

// Shape and color per node kind.  Exporting requires a mapping for every
// kind present in the graph.
struct RenderStyle {
  std::map<NodeKind, NodeStyle> node_styles;

  static RenderStyle standard() {
    RenderStyle s;
    s.node_styles[NodeKind::kServiceResilienceGoal] =
        NodeStyle{"parallelogram", "#6fa8dc", 1.0};
    s.node_styles[NodeKind::kResourceResilienceGoal] =
        NodeStyle{"parallelogram", "#6fa8dc", 1.0};
    s.node_styles[NodeKind::kMechanismGoal] =
        NodeStyle{"parallelogram", "#6fa8dc", 1.0};
    s.node_styles[NodeKind::kSystemBehavior] =
        NodeStyle{"parallelogram", "#6fa8dc", 2.0};
    s.node_styles[NodeKind::kObstacle] =
        NodeStyle{"parallelogram", "#e06666", 1.0};
    s.node_styles[NodeKind::kAsset] = NodeStyle{"hexagon", "#b4a7d6", 1.0};
    s.node_styles[NodeKind::kAgent] = NodeStyle{"hexagon", "#ffd966", 1.0};
    s.node_styles[NodeKind::kDomainProperty] =
        NodeStyle{"pentagon", "#f6b26c", 1.0};
    return s;
  }
};

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '\\' || c == '"') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out;
}

inline std::string dot_quote(const std::string& s) {
  return "\"" + dot_escape(s) + "\"";
}

inline const char* dot_edge_label(EdgeKind k) {
  switch (k) {
    case EdgeKind::kRefinement:
      return "";
    case EdgeKind::kObstruction:
      return "obstructs";
    case EdgeKind::kResolution:
      return "resolves";
    case EdgeKind::kResponsibility:
      return "performs";
    case EdgeKind::kConcern:
      return "concerns";
    case EdgeKind::kReference:
      return "references";
    case EdgeKind::kDependency:
      return "depends on";
    case EdgeKind::kAffects:
      return "affects";
  }
  return "";
}

inline void require_validated(const GoalGraph& graph, const char* what) {
  const std::vector<Diagnostic> diags = validate_model(graph);
  for (const Diagnostic& d : diags) {
    if (d.severity == Severity::kError) {
      throw ModelError(std::string(what) +
                       " requires a graph that validates; first error [" +
                       d.rule + "] " + d.subject + ": " + d.message);
    }
  }
}

}  // namespace detail

inline std::string export_dot(
    const GoalGraph& graph, const RenderStyle& style,
    const std::map<std::string, GoalStatus>& status = {}) {
  detail::require_validated(graph, "export_dot");

  std::string out = "digraph goal_model {\n  rankdir=BT;\n";

  for (const auto& [id, node] : graph.nodes()) {
    const auto sit = style.node_styles.find(node.kind());
    if (sit == style.node_styles.end()) {
      throw ModelError(std::string("render style lacks a mapping for ") +
                       to_string(node.kind()));
    }
    const NodeStyle& ns = sit->second;
    const auto stat = status.find(id);
    const bool violated =
        stat != status.end() && stat->second == GoalStatus::kViolated;
    out += "  " + detail::dot_quote(id) + " [label=" +
           detail::dot_quote(node.name()) + ", shape=" + ns.shape +
           ", style=filled, fillcolor=" + detail::dot_quote(ns.fill);
    if (violated) {
      out += ", color=\"#cc0000\", penwidth=3";
    } else if (ns.penwidth != 1.0) {
      out += ", penwidth=" + format_number(ns.penwidth);
    }
    out += "];\n";
  }

  // Refinement groups, each through one junction point.
  struct Group {
    std::string parent;
    RefineMode mode = RefineMode::kAnd;
    std::vector<std::string> children;
  };
  std::map<std::string, Group> groups;
  for (const Edge& e : graph.edges()) {
    if (e.kind != EdgeKind::kRefinement) continue;
    Group& g = groups[e.group];
    g.parent = e.target;
    g.mode = e.mode;
    g.children.push_back(e.source);
  }
  for (auto& [group_id, g] : groups) {
    std::sort(g.children.begin(), g.children.end());
    std::string jid = "grp:" + group_id;
    while (graph.has_node(jid)) jid = "grp:" + jid;
    out += "  " + detail::dot_quote(jid) + " [label=\"" +
           (g.mode == RefineMode::kAnd ? "AND" : "OR") +
           "\", shape=circle, fixedsize=true, width=0.4];\n";
    for (const std::string& child : g.children) {
      out += "  " + detail::dot_quote(child) + " -> " +
             detail::dot_quote(jid) + ";\n";
    }
    out += "  " + detail::dot_quote(jid) + " -> " +
           detail::dot_quote(g.parent) + ";\n";
  }

  std::vector<Edge> rest;
  for (const Edge& e : graph.edges()) {
    if (e.kind != EdgeKind::kRefinement) rest.push_back(e);
  }
  std::stable_sort(rest.begin(), rest.end(),
                   [](const Edge& a, const Edge& b) {
                     return std::tuple(std::string(to_string(a.kind)),
                                       a.source, a.target) <
                            std::tuple(std::string(to_string(b.kind)),
                                       b.source, b.target);
                   });
  for (const Edge& e : rest) {
    out += "  " + detail::dot_quote(e.source) + " -> " +
           detail::dot_quote(e.target) + " [label=\"" +
           detail::dot_edge_label(e.kind) + "\"];\n";
  }

  out += "}\n";
  return out;
}

}  // namespace msr

#endif  // MSR_DOT_EXPORT_HPP
