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

#ifndef MSR_GOAL_GRAPH_HPP
#define MSR_GOAL_GRAPH_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "msr/benchmark.hpp"
#include "msr/errors.hpp"
#include "msr/types.hpp"

namespace msr {

// Node kinds of the resilience goal decomposition graph.
//
// The three goal kinds hold thresholds or descriptions and sit in the
// refinement hierarchy; SystemBehavior is the operational leaf a refinement
// bottoms out in; Obstacle, Asset, Agent and DomainProperty annotate the
// hierarchy through their dedicated edge kinds.
enum class NodeKind {
  kServiceResilienceGoal,
  kResourceResilienceGoal,
  kMechanismGoal,
  kSystemBehavior,
  kObstacle,
  kAsset,
  kAgent,
  kDomainProperty,
};

inline const char* to_string(NodeKind k) {
  switch (k) {
    case NodeKind::kServiceResilienceGoal:
      return "service_resilience_goal";
    case NodeKind::kResourceResilienceGoal:
      return "resource_resilience_goal";
    case NodeKind::kMechanismGoal:
      return "mechanism_goal";
    case NodeKind::kSystemBehavior:
      return "system_behavior";
    case NodeKind::kObstacle:
      return "obstacle";
    case NodeKind::kAsset:
      return "asset";
    case NodeKind::kAgent:
      return "agent";
    case NodeKind::kDomainProperty:
      return "domain_property";
  }
  return "?";
}

// True for the kinds that carry goal semantics and may parent refinements.
inline bool is_goal_kind(NodeKind k) {
  return k == NodeKind::kServiceResilienceGoal ||
         k == NodeKind::kResourceResilienceGoal ||
         k == NodeKind::kMechanismGoal;
}

// True for the kinds that take part in satisfaction propagation.
inline bool is_refinable_kind(NodeKind k) {
  return is_goal_kind(k) || k == NodeKind::kSystemBehavior;
}

// Upper bounds on the three resilience metrics.  A goal is satisfied only if
// every degradation stays strictly below every present threshold; absent
// thresholds are not checked.  At least one must be present, and present
// ones must be positive.
struct GoalThresholds {
  std::optional<double> dt_max;
  std::optional<double> rr_max;
  std::optional<double> pl_max;

  bool any() const {
    return dt_max.has_value() || rr_max.has_value() || pl_max.has_value();
  }
};

// Measured service or resource resilience goal.  `subject` names the service
// or resource the goal constrains (and must match trace subjects verbatim);
// `attribute` refers into the model's attribute catalog.
struct GoalSpec {
  std::string name;
  std::string subject;
  std::string attribute;
  GoalThresholds thresholds;
};

// Resilience mechanism goal.  Implementation documentation lives in a
// DomainProperty the mechanism references, not in the graph structure.
struct MechanismSpec {
  std::string name;
  std::string description;
};

// Concrete behavior an agent performs to realize a mechanism.
struct BehaviorSpec {
  std::string name;
  std::string description;
};

// Threat to a goal.  Starts as a bare observed event; once the root cause is
// known, `diagnosed` is set and `disruption` identifies it.  When a newer
// diagnosis replaces this obstacle, `superseded_by` names the successor and
// this node keeps no Obstruction edges.
struct ObstacleSpec {
  std::string name;
  std::string event;
  bool diagnosed = false;
  std::optional<Disruption> disruption;
  std::string superseded_by;
};

enum class AssetType {
  kService,
  kResource,
};

inline const char* to_string(AssetType t) {
  return t == AssetType::kService ? "service" : "resource";
}

// A protected thing: a service or a system resource.  `resource_kind` is
// free text ("pod", "container", "cluster") for resource assets.
struct AssetSpec {
  std::string name;
  AssetType type = AssetType::kService;
  std::string resource_kind;
};

// Something that executes system behaviors ("kubernetes", "istio", a team).
struct AgentSpec {
  std::string name;
  std::string agent_type;
};

// How a domain property binds an attribute to its benchmark.
enum class BenchmarkRefKind {
  kConstant,
  kModel,
  kLookup,
};

inline const char* to_string(BenchmarkRefKind k) {
  switch (k) {
    case BenchmarkRefKind::kConstant:
      return "constant";
    case BenchmarkRefKind::kModel:
      return "model";
    case BenchmarkRefKind::kLookup:
      return "lookup";
  }
  return "?";
}

// Benchmark binding carried by a DomainProperty: either an inline constant
// or a path to a fitted-model / reference-series file.
struct BenchmarkRef {
  std::string attribute;
  BenchmarkRefKind kind = BenchmarkRefKind::kConstant;
  double value = 0.0;
  std::string file;
  Interpolation interpolation = Interpolation::kStepBefore;
};

// Indicative domain knowledge: descriptions, document links, and optionally
// the benchmark binding that makes a referencing goal measurable.
struct DomainPropertySpec {
  std::string name;
  std::string description;
  std::vector<std::string> references;
  std::optional<BenchmarkRef> benchmark;
};

// A graph node: id, kind, and the kind-specific spec payload.  Construct
// through the factories so kind and payload cannot disagree.
class Node {
 public:
  using Spec = std::variant<GoalSpec, MechanismSpec, BehaviorSpec,
                            ObstacleSpec, AssetSpec, AgentSpec,
                            DomainPropertySpec>;

  static Node service_goal(std::string id, GoalSpec spec) {
    return Node(std::move(id), NodeKind::kServiceResilienceGoal,
                std::move(spec));
  }
  static Node resource_goal(std::string id, GoalSpec spec) {
    return Node(std::move(id), NodeKind::kResourceResilienceGoal,
                std::move(spec));
  }
  static Node mechanism_goal(std::string id, MechanismSpec spec) {
    return Node(std::move(id), NodeKind::kMechanismGoal, std::move(spec));
  }
  static Node behavior(std::string id, BehaviorSpec spec) {
    return Node(std::move(id), NodeKind::kSystemBehavior, std::move(spec));
  }
  static Node obstacle(std::string id, ObstacleSpec spec) {
    return Node(std::move(id), NodeKind::kObstacle, std::move(spec));
  }
  static Node asset(std::string id, AssetSpec spec) {
    return Node(std::move(id), NodeKind::kAsset, std::move(spec));
  }
  static Node agent(std::string id, AgentSpec spec) {
    return Node(std::move(id), NodeKind::kAgent, std::move(spec));
  }
  static Node domain_property(std::string id, DomainPropertySpec spec) {
    return Node(std::move(id), NodeKind::kDomainProperty, std::move(spec));
  }

  const std::string& id() const { return id_; }
  NodeKind kind() const { return kind_; }
  const Spec& spec() const { return spec_; }

  // Typed access; throws ModelError when the node is not of the asked kind.
  const GoalSpec& goal() const { return get<GoalSpec>("a measured goal"); }
  const MechanismSpec& mechanism() const {
    return get<MechanismSpec>("a mechanism goal");
  }
  const BehaviorSpec& system_behavior() const {
    return get<BehaviorSpec>("a system behavior");
  }
  const ObstacleSpec& obstacle_spec() const {
    return get<ObstacleSpec>("an obstacle");
  }
  const AssetSpec& asset_spec() const { return get<AssetSpec>("an asset"); }
  const AgentSpec& agent_spec() const { return get<AgentSpec>("an agent"); }
  const DomainPropertySpec& domain_property_spec() const {
    return get<DomainPropertySpec>("a domain property");
  }

  ObstacleSpec& mutable_obstacle_spec() {
    ObstacleSpec* p = std::get_if<ObstacleSpec>(&spec_);
    if (p == nullptr) {
      throw ModelError("node " + id_ + " is " + to_string(kind_) +
                       ", not an obstacle");
    }
    return *p;
  }

  // The display name of the node, whatever its kind.
  const std::string& name() const {
    return std::visit([](const auto& s) -> const std::string& {
      return s.name;
    }, spec_);
  }

 private:
  Node(std::string id, NodeKind kind, Spec spec)
      : id_(std::move(id)), kind_(kind), spec_(std::move(spec)) {}

  template <typename T>
  const T& get(const char* what) const {
    const T* p = std::get_if<T>(&spec_);
    if (p == nullptr) {
      throw ModelError("node " + id_ + " is " + to_string(kind_) + ", not " +
                       what);
    }
    return *p;
  }

  std::string id_;
  NodeKind kind_;
  Spec spec_;
};

enum class EdgeKind {
  kRefinement,
  kObstruction,
  kResolution,
  kResponsibility,
  kConcern,
  kReference,
  kDependency,
  kAffects,
};

inline const char* to_string(EdgeKind k) {
  switch (k) {
    case EdgeKind::kRefinement:
      return "refinement";
    case EdgeKind::kObstruction:
      return "obstruction";
    case EdgeKind::kResolution:
      return "resolution";
    case EdgeKind::kResponsibility:
      return "responsibility";
    case EdgeKind::kConcern:
      return "concern";
    case EdgeKind::kReference:
      return "reference";
    case EdgeKind::kDependency:
      return "dependency";
    case EdgeKind::kAffects:
      return "affects";
  }
  return "?";
}

enum class RefineMode {
  kAnd,
  kOr,
};

inline const char* to_string(RefineMode m) {
  return m == RefineMode::kAnd ? "and" : "or";
}

// A directed, typed link.  Direction conventions:
//   refinement:      child goal/behavior -> parent goal
//   obstruction:     obstacle -> obstructed goal
//   resolution:      mechanism goal -> resolved obstacle
//   responsibility:  agent -> system behavior it performs
//   concern:         goal -> asset it protects
//   reference:       any node -> domain property it cites
//   dependency:      asset -> asset it depends on
//   affects:         obstacle -> asset it damages
// `group` and `mode` are meaningful for refinement edges only: edges sharing
// a group id form one AND/OR bundle under a single parent.
struct Edge {
  EdgeKind kind = EdgeKind::kRefinement;
  std::string source;
  std::string target;
  std::string group;
  RefineMode mode = RefineMode::kAnd;
};

inline Edge refinement(std::string child, std::string parent,
                       std::string group, RefineMode mode) {
  return Edge{EdgeKind::kRefinement, std::move(child), std::move(parent),
              std::move(group), mode};
}

inline Edge link(EdgeKind kind, std::string source, std::string target) {
  return Edge{kind, std::move(source), std::move(target), "",
              RefineMode::kAnd};
}

struct GraphMetadata {
  std::string system;
  std::string iteration;
};

// The resilience goal decomposition model: an attribute catalog, nodes keyed
// by id, and typed edges.  A GoalGraph is a plain value; operations that
// "modify" a model copy it first and return the new value, so published
// graphs never change underneath a reader.
//
// Structural soundness (edge signatures, required links, acyclic refinement)
// is checked by validate_model, not enforced here; the only hard invariants
// are unique node ids and unique attribute ids.
class GoalGraph {
 public:
  const GraphMetadata& metadata() const { return metadata_; }
  void set_metadata(GraphMetadata m) { metadata_ = std::move(m); }

  const std::map<std::string, AttributeSpec>& attributes() const {
    return attributes_;
  }
  void add_attribute(AttributeSpec attr) {
    if (attr.id.empty()) throw ModelError("attribute id must not be empty");
    if (!attributes_.emplace(attr.id, attr).second) {
      throw ModelError("duplicate attribute id " + attr.id);
    }
  }
  const AttributeSpec& attribute(const std::string& id) const {
    const auto it = attributes_.find(id);
    if (it == attributes_.end()) {
      throw ModelError("unknown attribute " + id);
    }
    return it->second;
  }
  bool has_attribute(const std::string& id) const {
    return attributes_.count(id) != 0;
  }

  const std::map<std::string, Node>& nodes() const { return nodes_; }
  void add_node(Node node) {
    if (node.id().empty()) throw ModelError("node id must not be empty");
    const std::string id = node.id();
    if (!nodes_.emplace(id, std::move(node)).second) {
      throw ModelError("duplicate node id " + id);
    }
  }
  bool has_node(const std::string& id) const { return nodes_.count(id) != 0; }
  const Node& node(const std::string& id) const {
    const auto it = nodes_.find(id);
    if (it == nodes_.end()) throw ModelError("unknown node " + id);
    return it->second;
  }
  Node& mutable_node(const std::string& id) {
    const auto it = nodes_.find(id);
    if (it == nodes_.end()) throw ModelError("unknown node " + id);
    return it->second;
  }

  const std::vector<Edge>& edges() const { return edges_; }
  void add_edge(Edge edge) {
    if (edge.source.empty() || edge.target.empty()) {
      throw ModelError("edge endpoints must not be empty");
    }
    edges_.push_back(std::move(edge));
  }
  template <typename Pred>
  void remove_edges_if(Pred pred) {
    std::vector<Edge> kept;
    for (const Edge& e : edges_) {
      if (!pred(e)) kept.push_back(e);
    }
    edges_ = std::move(kept);
  }

 private:
  GraphMetadata metadata_;
  std::map<std::string, AttributeSpec> attributes_;
  std::map<std::string, Node> nodes_;
  std::vector<Edge> edges_;
};

}  // namespace msr

#endif  // MSR_GOAL_GRAPH_HPP
