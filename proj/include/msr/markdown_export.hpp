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

// Requirement-document emission.  Every node gets exactly one level-three
// heading under its kind's section, optional fields render only when
// present, and each outgoing edge of a node contributes exactly one
// bullet.  Deterministic ordering throughout, same rejection rule as the
// DOT exporter.

#ifndef MSR_MARKDOWN_EXPORT_HPP
#define MSR_MARKDOWN_EXPORT_HPP

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "msr/dot_export.hpp"
#include "msr/goal_graph.hpp"
#include "msr/io_util.hpp"

namespace msr {

namespace detail {

inline const char* markdown_edge_verb(EdgeKind k) {
  switch (k) {
    case EdgeKind::kRefinement:
      return "Refines";
    case EdgeKind::kObstruction:
      return "Obstructs";
    case EdgeKind::kResolution:
      return "Resolves";
    case EdgeKind::kResponsibility:
      return "Performs";
    case EdgeKind::kConcern:
      return "Concerns";
    case EdgeKind::kReference:
      return "References";
    case EdgeKind::kDependency:
      return "Depends on";
    case EdgeKind::kAffects:
      return "Affects";
  }
  return "?";
}

inline std::string markdown_quantity(double value, const std::string& unit) {
  std::string out = format_number(value);
  if (!unit.empty()) out += " " + unit;
  return out;
}

inline std::string markdown_join(const std::vector<std::string>& items) {
  std::string out;
  for (const std::string& item : items) {
    if (!out.empty()) out += ", ";
    out += item;
  }
  return out;
}

}  // namespace detail

inline std::string export_markdown(const GoalGraph& graph) {
  detail::require_validated(graph, "export_markdown");

  std::string out = "# " + (graph.metadata().system.empty()
                                ? std::string("Goal Model")
                                : graph.metadata().system) +
                    "\n";
  if (!graph.metadata().iteration.empty()) {
    out += "\n_Iteration " + graph.metadata().iteration + "_\n";
  }

  std::map<std::string, std::vector<Edge>> outgoing;
  for (const Edge& e : graph.edges()) outgoing[e.source].push_back(e);
  for (auto& [source, edges] : outgoing) {
    std::stable_sort(edges.begin(), edges.end(),
                     [](const Edge& a, const Edge& b) {
                       return std::tuple(std::string(to_string(a.kind)),
                                         a.target, a.group) <
                              std::tuple(std::string(to_string(b.kind)),
                                         b.target, b.group);
                     });
  }

  const auto node_link = [&graph](const std::string& id) {
    return graph.node(id).name() + " (`" + id + "`)";
  };

  struct Section {
    NodeKind kind;
    const char* title;
  };
  constexpr Section kSections[] = {
      {NodeKind::kServiceResilienceGoal, "Service Resilience Goals"},
      {NodeKind::kResourceResilienceGoal, "Resource Resilience Goals"},
      {NodeKind::kMechanismGoal, "Mechanism Goals"},
      {NodeKind::kSystemBehavior, "System Behaviors"},
      {NodeKind::kObstacle, "Obstacles"},
      {NodeKind::kAsset, "Assets"},
      {NodeKind::kAgent, "Agents"},
      {NodeKind::kDomainProperty, "Domain Properties"},
  };

  for (const Section& section : kSections) {
    bool started = false;
    for (const auto& [id, node] : graph.nodes()) {
      if (node.kind() != section.kind) continue;
      if (!started) {
        out += "\n## " + std::string(section.title) + "\n";
        started = true;
      }
      out += "\n### " + node.name() + " (`" + id + "`)\n\n";

      switch (node.kind()) {
        case NodeKind::kServiceResilienceGoal:
        case NodeKind::kResourceResilienceGoal: {
          const GoalSpec& g = node.goal();
          const AttributeSpec& attr = graph.attribute(g.attribute);
          out += "- Subject: " + g.subject + "\n";
          out += "- Attribute: " + attr.name + "\n";
          if (g.thresholds.dt_max) {
            out += "- Disruption Tolerance: " +
                   detail::markdown_quantity(*g.thresholds.dt_max,
                                             attr.unit) +
                   "\n";
          }
          if (g.thresholds.rr_max) {
            out += "- Recovery Time: " +
                   detail::markdown_quantity(*g.thresholds.rr_max, "s") +
                   "\n";
          }
          if (g.thresholds.pl_max) {
            out += "- Performance Loss: " +
                   detail::markdown_quantity(*g.thresholds.pl_max,
                                             attr.loss_unit) +
                   "\n";
          }
          break;
        }
        case NodeKind::kMechanismGoal: {
          const MechanismSpec& m = node.mechanism();
          if (!m.description.empty()) {
            out += "- Description: " + m.description + "\n";
          }
          break;
        }
        case NodeKind::kSystemBehavior: {
          const BehaviorSpec& b = node.system_behavior();
          if (!b.description.empty()) {
            out += "- Description: " + b.description + "\n";
          }
          break;
        }
        case NodeKind::kObstacle: {
          const ObstacleSpec& o = node.obstacle_spec();
          out += "- Event: " + o.event + "\n";
          if (o.diagnosed) out += "- Diagnosed: yes\n";
          if (o.disruption) {
            out += "- Disruption: " + o.disruption->event_type + " on " +
                   o.disruption->object + "\n";
            if (!o.disruption->evidence.empty()) {
              out += "- Evidence: " +
                     detail::markdown_join(o.disruption->evidence) + "\n";
            }
          }
          if (!o.superseded_by.empty()) {
            out += "- Superseded by: `" + o.superseded_by + "`\n";
          }
          break;
        }
        case NodeKind::kAsset: {
          const AssetSpec& a = node.asset_spec();
          out += std::string("- Type: ") +
                 (a.type == AssetType::kService ? "Service" : "Resource") +
                 "\n";
          if (!a.resource_kind.empty()) {
            out += "- Resource kind: " + a.resource_kind + "\n";
          }
          break;
        }
        case NodeKind::kAgent: {
          const AgentSpec& a = node.agent_spec();
          if (!a.agent_type.empty()) {
            out += "- Agent type: " + a.agent_type + "\n";
          }
          break;
        }
        case NodeKind::kDomainProperty: {
          const DomainPropertySpec& d = node.domain_property_spec();
          if (!d.description.empty()) {
            out += "- Description: " + d.description + "\n";
          }
          if (!d.references.empty()) {
            out += "- Reference resources: " +
                   detail::markdown_join(d.references) + "\n";
          }
          if (d.benchmark) {
            const BenchmarkRef& b = *d.benchmark;
            out += "- Benchmark (" + b.attribute + "): ";
            switch (b.kind) {
              case BenchmarkRefKind::kConstant:
                out += "constant " + format_number(b.value);
                break;
              case BenchmarkRefKind::kModel:
                out += "model `" + b.file + "`";
                break;
              case BenchmarkRefKind::kLookup:
                out += std::string("lookup `") + b.file + "` (" +
                       to_string(b.interpolation) + ")";
                break;
            }
            out += "\n";
          }
          break;
        }
      }

      const auto oit = outgoing.find(id);
      if (oit != outgoing.end()) {
        for (const Edge& e : oit->second) {
          out += std::string("- ") + detail::markdown_edge_verb(e.kind);
          if (e.kind == EdgeKind::kRefinement) {
            out += std::string(" (") +
                   (e.mode == RefineMode::kAnd ? "and" : "or") + ")";
          }
          out += ": " + node_link(e.target) + "\n";
        }
      }
    }
  }
  return out;
}

}  // namespace msr

#endif  // MSR_MARKDOWN_EXPORT_HPP
