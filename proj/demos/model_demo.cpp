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

// Build a small goal model in code, mark one leaf goal violated, propagate
// through the refinement, and emit the annotated diagram as DOT on stdout.
// Pipe through `dot -Tsvg` to render it.

#include <cstdio>
#include <map>
#include <string>

#include "msr/dot_export.hpp"
#include "msr/evaluate.hpp"
#include "msr/goal_graph.hpp"
#include "msr/validate.hpp"

namespace {

msr::GoalGraph build_model() {
  using msr::EdgeKind;
  using msr::Node;

  msr::GoalGraph g;
  g.set_metadata({"Checkout", "1"});
  g.add_attribute({"latency", "Latency", "s",
                   msr::Orientation::kLowerIsBetter, ""});
  g.add_attribute({"replicas", "Replicas", "instances",
                   msr::Orientation::kHigherIsBetter, ""});

  g.add_node(Node::asset("as.api", {"Checkout API",
                                    msr::AssetType::kService, ""}));
  g.add_node(Node::asset("as.vm", {"Worker VM",
                                   msr::AssetType::kResource, "vm"}));
  g.add_node(Node::domain_property(
      "dp.lat", {"Latency Baseline", "p50 under normal load.", {},
                 msr::BenchmarkRef{"latency",
                                   msr::BenchmarkRefKind::kConstant, 0.25,
                                   "", msr::Interpolation::kStepBefore}}));

  g.add_node(Node::service_goal(
      "g.api", {"Checkout Latency", "checkout", "latency",
                {0.5, 30.0, std::nullopt}}));
  g.add_node(Node::resource_goal(
      "g.vm.up", {"Worker Pool Size", "workers", "replicas",
                  {2.0, std::nullopt, std::nullopt}}));

  g.add_node(Node::obstacle(
      "o.noisy", {"Noisy Neighbor",
                  "A co-located tenant saturates the disk.", true,
                  msr::Disruption{"as.vm", "io-contention", 3600.0, {}},
                  ""}));
  g.add_node(Node::mechanism_goal(
      "m.autoscale", {"Autoscaling", "Grow the pool under pressure."}));
  g.add_node(Node::behavior(
      "sb.scale-out", {"Scale Out", "Add workers when load rises."}));
  g.add_node(Node::agent("ag.orchestrator", {"Orchestrator", "platform"}));

  g.add_edge(msr::link(EdgeKind::kConcern, "g.api", "as.api"));
  g.add_edge(msr::link(EdgeKind::kReference, "g.api", "dp.lat"));
  g.add_edge(msr::link(EdgeKind::kDependency, "as.api", "as.vm"));
  g.add_edge(msr::refinement("g.vm.up", "g.api", "ref.api",
                             msr::RefineMode::kAnd));
  g.add_edge(msr::link(EdgeKind::kObstruction, "o.noisy", "g.vm.up"));
  g.add_edge(msr::link(EdgeKind::kAffects, "o.noisy", "as.vm"));
  g.add_edge(msr::link(EdgeKind::kResolution, "m.autoscale", "o.noisy"));
  g.add_edge(msr::refinement("sb.scale-out", "m.autoscale", "ref.scale",
                             msr::RefineMode::kAnd));
  g.add_edge(msr::link(EdgeKind::kResponsibility, "ag.orchestrator",
                       "sb.scale-out"));
  return g;
}

}  // namespace

int main() {
  const msr::GoalGraph graph = build_model();
  for (const msr::Diagnostic& d : msr::validate_model(graph)) {
    std::fprintf(stderr, "[%s] %s: %s\n",
                 d.severity == msr::Severity::kError ? "error" : "warning",
                 d.rule.c_str(), d.message.c_str());
  }

  const auto statuses = msr::propagate(
      graph, {{"g.vm.up", msr::GoalStatus::kViolated}});
  for (const auto& [id, status] : statuses) {
    std::fprintf(stderr, "%-10s %s\n", id.c_str(),
                 msr::to_string(status));
  }

  std::fputs(
      msr::export_dot(graph, msr::RenderStyle::standard(), statuses)
          .c_str(),
      stdout);
  return 0;
}
