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

// Goal-model file format ("msr-model/1", see docs/schema.md).
//
// save_model emits the canonical form: object keys sorted, nodes and
// attributes ordered by id, edges ordered by (kind, source, target, group),
// absent optional fields omitted, two-space indent, LF line endings.
// load_model accepts any key order but rejects unknown fields, duplicate
// ids, and unknown kind strings, reporting JSON paths.  Loading a canonical
// file and saving it back reproduces the bytes exactly.

#ifndef MSR_MODEL_IO_HPP
#define MSR_MODEL_IO_HPP

#include <algorithm>
#include <string>
#include <tuple>
#include <vector>

#include "msr/goal_graph.hpp"
#include "msr/io_util.hpp"
#include "msr/json_util.hpp"

namespace msr {

namespace detail {

inline Orientation parse_orientation(const std::string& s,
                                     const std::string& path) {
  if (s == "higher_is_better") return Orientation::kHigherIsBetter;
  if (s == "lower_is_better") return Orientation::kLowerIsBetter;
  throw ParseError(path + ": unknown orientation \"" + s + "\"");
}

inline NodeKind parse_node_kind(const std::string& s,
                                const std::string& path) {
  if (s == "service_resilience_goal") return NodeKind::kServiceResilienceGoal;
  if (s == "resource_resilience_goal")
    return NodeKind::kResourceResilienceGoal;
  if (s == "mechanism_goal") return NodeKind::kMechanismGoal;
  if (s == "system_behavior") return NodeKind::kSystemBehavior;
  if (s == "obstacle") return NodeKind::kObstacle;
  if (s == "asset") return NodeKind::kAsset;
  if (s == "agent") return NodeKind::kAgent;
  if (s == "domain_property") return NodeKind::kDomainProperty;
  throw ParseError(path + ": unknown node kind \"" + s + "\"");
}

inline EdgeKind parse_edge_kind(const std::string& s,
                                const std::string& path) {
  if (s == "refinement") return EdgeKind::kRefinement;
  if (s == "obstruction") return EdgeKind::kObstruction;
  if (s == "resolution") return EdgeKind::kResolution;
  if (s == "responsibility") return EdgeKind::kResponsibility;
  if (s == "concern") return EdgeKind::kConcern;
  if (s == "reference") return EdgeKind::kReference;
  if (s == "dependency") return EdgeKind::kDependency;
  if (s == "affects") return EdgeKind::kAffects;
  throw ParseError(path + ": unknown edge kind \"" + s + "\"");
}

inline RefineMode parse_refine_mode(const std::string& s,
                                    const std::string& path) {
  if (s == "and") return RefineMode::kAnd;
  if (s == "or") return RefineMode::kOr;
  throw ParseError(path + ": unknown refinement mode \"" + s + "\"");
}

inline AssetType parse_asset_type(const std::string& s,
                                  const std::string& path) {
  if (s == "service") return AssetType::kService;
  if (s == "resource") return AssetType::kResource;
  throw ParseError(path + ": unknown asset type \"" + s + "\"");
}

inline BenchmarkRefKind parse_benchmark_ref_kind(const std::string& s,
                                                 const std::string& path) {
  if (s == "constant") return BenchmarkRefKind::kConstant;
  if (s == "model") return BenchmarkRefKind::kModel;
  if (s == "lookup") return BenchmarkRefKind::kLookup;
  throw ParseError(path + ": unknown benchmark kind \"" + s + "\"");
}

inline Interpolation parse_interpolation(const std::string& s,
                                         const std::string& path) {
  if (s == "step_before") return Interpolation::kStepBefore;
  if (s == "linear") return Interpolation::kLinear;
  throw ParseError(path + ": unknown interpolation \"" + s + "\"");
}

inline GoalThresholds parse_thresholds(const jsonx::json& j,
                                       const std::string& path) {
  jsonx::object(j, path);
  jsonx::check_keys(j, path, {"dt_max", "rr_max", "pl_max"});
  GoalThresholds t;
  t.dt_max = jsonx::opt_double(j, "dt_max", path);
  t.rr_max = jsonx::opt_double(j, "rr_max", path);
  t.pl_max = jsonx::opt_double(j, "pl_max", path);
  return t;
}

inline Disruption parse_disruption(const jsonx::json& j,
                                   const std::string& path) {
  jsonx::object(j, path);
  jsonx::check_keys(j, path,
                    {"object", "event_type", "occurred_at", "evidence"});
  Disruption d;
  d.object = jsonx::req_string(j, "object", path);
  d.event_type = jsonx::req_string(j, "event_type", path);
  d.occurred_at = jsonx::opt_double(j, "occurred_at", path);
  d.evidence = jsonx::opt_string_array(j, "evidence", path);
  return d;
}

inline BenchmarkRef parse_benchmark_ref(const jsonx::json& j,
                                        const std::string& path) {
  jsonx::object(j, path);
  jsonx::check_keys(j, path,
                    {"attribute", "kind", "value", "file", "interpolation"});
  BenchmarkRef b;
  b.attribute = jsonx::req_string(j, "attribute", path);
  b.kind = parse_benchmark_ref_kind(jsonx::req_string(j, "kind", path),
                                    path + ".kind");
  switch (b.kind) {
    case BenchmarkRefKind::kConstant:
      b.value = jsonx::req_double(j, "value", path);
      if (j.find("file") != j.end() || j.find("interpolation") != j.end()) {
        throw ParseError(path + ": constant benchmark takes only a value");
      }
      break;
    case BenchmarkRefKind::kModel:
      b.file = jsonx::req_string(j, "file", path);
      if (j.find("value") != j.end() || j.find("interpolation") != j.end()) {
        throw ParseError(path + ": model benchmark takes only a file");
      }
      break;
    case BenchmarkRefKind::kLookup:
      b.file = jsonx::req_string(j, "file", path);
      if (j.find("value") != j.end()) {
        throw ParseError(path + ": lookup benchmark takes no value");
      }
      b.interpolation = parse_interpolation(
          jsonx::req_string(j, "interpolation", path),
          path + ".interpolation");
      break;
  }
  return b;
}

inline Node parse_node(const jsonx::json& j, const std::string& path) {
  jsonx::object(j, path);
  jsonx::check_keys(j, path, {"id", "kind", "spec"});
  const std::string id = jsonx::req_string(j, "id", path);
  const NodeKind kind =
      parse_node_kind(jsonx::req_string(j, "kind", path), path + ".kind");
  const jsonx::json& spec =
      jsonx::object(jsonx::member(j, "spec", path), path + ".spec");
  const std::string spath = path + ".spec";

  switch (kind) {
    case NodeKind::kServiceResilienceGoal:
    case NodeKind::kResourceResilienceGoal: {
      jsonx::check_keys(spec, spath,
                        {"name", "subject", "attribute", "thresholds"});
      GoalSpec g;
      g.name = jsonx::req_string(spec, "name", spath);
      g.subject = jsonx::req_string(spec, "subject", spath);
      g.attribute = jsonx::req_string(spec, "attribute", spath);
      g.thresholds = parse_thresholds(
          jsonx::member(spec, "thresholds", spath), spath + ".thresholds");
      return kind == NodeKind::kServiceResilienceGoal
                 ? Node::service_goal(id, std::move(g))
                 : Node::resource_goal(id, std::move(g));
    }
    case NodeKind::kMechanismGoal: {
      jsonx::check_keys(spec, spath, {"name", "description"});
      MechanismSpec m;
      m.name = jsonx::req_string(spec, "name", spath);
      m.description = jsonx::opt_string(spec, "description", spath);
      return Node::mechanism_goal(id, std::move(m));
    }
    case NodeKind::kSystemBehavior: {
      jsonx::check_keys(spec, spath, {"name", "description"});
      BehaviorSpec b;
      b.name = jsonx::req_string(spec, "name", spath);
      b.description = jsonx::opt_string(spec, "description", spath);
      return Node::behavior(id, std::move(b));
    }
    case NodeKind::kObstacle: {
      jsonx::check_keys(spec, spath,
                        {"name", "event", "diagnosed", "disruption",
                         "superseded_by"});
      ObstacleSpec o;
      o.name = jsonx::req_string(spec, "name", spath);
      o.event = jsonx::req_string(spec, "event", spath);
      o.diagnosed = jsonx::opt_bool(spec, "diagnosed", spath);
      if (spec.find("disruption") != spec.end()) {
        o.disruption = parse_disruption(spec["disruption"],
                                        spath + ".disruption");
      }
      o.superseded_by = jsonx::opt_string(spec, "superseded_by", spath);
      return Node::obstacle(id, std::move(o));
    }
    case NodeKind::kAsset: {
      jsonx::check_keys(spec, spath, {"name", "type", "resource_kind"});
      AssetSpec a;
      a.name = jsonx::req_string(spec, "name", spath);
      a.type = parse_asset_type(jsonx::req_string(spec, "type", spath),
                                spath + ".type");
      a.resource_kind = jsonx::opt_string(spec, "resource_kind", spath);
      return Node::asset(id, std::move(a));
    }
    case NodeKind::kAgent: {
      jsonx::check_keys(spec, spath, {"name", "agent_type"});
      AgentSpec a;
      a.name = jsonx::req_string(spec, "name", spath);
      a.agent_type = jsonx::opt_string(spec, "agent_type", spath);
      return Node::agent(id, std::move(a));
    }
    case NodeKind::kDomainProperty: {
      jsonx::check_keys(spec, spath,
                        {"name", "description", "references", "benchmark"});
      DomainPropertySpec d;
      d.name = jsonx::req_string(spec, "name", spath);
      d.description = jsonx::opt_string(spec, "description", spath);
      d.references = jsonx::opt_string_array(spec, "references", spath);
      if (spec.find("benchmark") != spec.end()) {
        d.benchmark = parse_benchmark_ref(spec["benchmark"],
                                          spath + ".benchmark");
      }
      return Node::domain_property(id, std::move(d));
    }
  }
  throw ParseError(path + ": unhandled node kind");
}

inline jsonx::json thresholds_to_json(const GoalThresholds& t) {
  jsonx::json j = jsonx::json::object();
  if (t.dt_max) j["dt_max"] = *t.dt_max;
  if (t.rr_max) j["rr_max"] = *t.rr_max;
  if (t.pl_max) j["pl_max"] = *t.pl_max;
  return j;
}

inline jsonx::json disruption_to_json(const Disruption& d) {
  jsonx::json j = jsonx::json::object();
  j["object"] = d.object;
  j["event_type"] = d.event_type;
  if (d.occurred_at) j["occurred_at"] = *d.occurred_at;
  if (!d.evidence.empty()) j["evidence"] = d.evidence;
  return j;
}

inline jsonx::json benchmark_ref_to_json(const BenchmarkRef& b) {
  jsonx::json j = jsonx::json::object();
  j["attribute"] = b.attribute;
  j["kind"] = to_string(b.kind);
  switch (b.kind) {
    case BenchmarkRefKind::kConstant:
      j["value"] = b.value;
      break;
    case BenchmarkRefKind::kModel:
      j["file"] = b.file;
      break;
    case BenchmarkRefKind::kLookup:
      j["file"] = b.file;
      j["interpolation"] = to_string(b.interpolation);
      break;
  }
  return j;
}

inline jsonx::json node_spec_to_json(const Node& node) {
  jsonx::json j = jsonx::json::object();
  switch (node.kind()) {
    case NodeKind::kServiceResilienceGoal:
    case NodeKind::kResourceResilienceGoal: {
      const GoalSpec& g = node.goal();
      j["name"] = g.name;
      j["subject"] = g.subject;
      j["attribute"] = g.attribute;
      j["thresholds"] = thresholds_to_json(g.thresholds);
      break;
    }
    case NodeKind::kMechanismGoal: {
      const MechanismSpec& m = node.mechanism();
      j["name"] = m.name;
      if (!m.description.empty()) j["description"] = m.description;
      break;
    }
    case NodeKind::kSystemBehavior: {
      const BehaviorSpec& b = node.system_behavior();
      j["name"] = b.name;
      if (!b.description.empty()) j["description"] = b.description;
      break;
    }
    case NodeKind::kObstacle: {
      const ObstacleSpec& o = node.obstacle_spec();
      j["name"] = o.name;
      j["event"] = o.event;
      if (o.diagnosed) j["diagnosed"] = true;
      if (o.disruption) j["disruption"] = disruption_to_json(*o.disruption);
      if (!o.superseded_by.empty()) j["superseded_by"] = o.superseded_by;
      break;
    }
    case NodeKind::kAsset: {
      const AssetSpec& a = node.asset_spec();
      j["name"] = a.name;
      j["type"] = to_string(a.type);
      if (!a.resource_kind.empty()) j["resource_kind"] = a.resource_kind;
      break;
    }
    case NodeKind::kAgent: {
      const AgentSpec& a = node.agent_spec();
      j["name"] = a.name;
      if (!a.agent_type.empty()) j["agent_type"] = a.agent_type;
      break;
    }
    case NodeKind::kDomainProperty: {
      const DomainPropertySpec& d = node.domain_property_spec();
      j["name"] = d.name;
      if (!d.description.empty()) j["description"] = d.description;
      if (!d.references.empty()) j["references"] = d.references;
      if (d.benchmark) j["benchmark"] = benchmark_ref_to_json(*d.benchmark);
      break;
    }
  }
  return j;
}

}  // namespace detail

inline GoalGraph load_model(const std::string& text) {
  const jsonx::json j = jsonx::parse(text, "model file");
  jsonx::object(j, "$");
  jsonx::check_keys(j, "$",
                    {"format", "metadata", "attributes", "nodes", "edges"});
  jsonx::expect_format(j, "msr-model/1", "$");

  GoalGraph graph;
  {
    const jsonx::json& meta =
        jsonx::object(jsonx::member(j, "metadata", "$"), "$.metadata");
    jsonx::check_keys(meta, "$.metadata", {"system", "iteration"});
    GraphMetadata m;
    m.system = jsonx::opt_string(meta, "system", "$.metadata");
    m.iteration = jsonx::opt_string(meta, "iteration", "$.metadata");
    graph.set_metadata(std::move(m));
  }

  const jsonx::json& attrs =
      jsonx::array(jsonx::member(j, "attributes", "$"), "$.attributes");
  for (std::size_t i = 0; i < attrs.size(); ++i) {
    const std::string path = "$.attributes[" + std::to_string(i) + "]";
    const jsonx::json& a = jsonx::object(attrs[i], path);
    jsonx::check_keys(a, path,
                      {"id", "name", "unit", "orientation", "loss_unit"});
    AttributeSpec spec;
    spec.id = jsonx::req_string(a, "id", path);
    spec.name = jsonx::req_string(a, "name", path);
    spec.unit = jsonx::req_string(a, "unit", path);
    spec.orientation = detail::parse_orientation(
        jsonx::req_string(a, "orientation", path), path + ".orientation");
    spec.loss_unit = jsonx::req_string(a, "loss_unit", path);
    if (graph.has_attribute(spec.id)) {
      throw ParseError(path + ": duplicate attribute id " + spec.id);
    }
    graph.add_attribute(std::move(spec));
  }

  const jsonx::json& nodes =
      jsonx::array(jsonx::member(j, "nodes", "$"), "$.nodes");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const std::string path = "$.nodes[" + std::to_string(i) + "]";
    Node node = detail::parse_node(nodes[i], path);
    if (graph.has_node(node.id())) {
      throw ParseError(path + ": duplicate node id " + node.id());
    }
    graph.add_node(std::move(node));
  }

  const jsonx::json& edges =
      jsonx::array(jsonx::member(j, "edges", "$"), "$.edges");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string path = "$.edges[" + std::to_string(i) + "]";
    const jsonx::json& e = jsonx::object(edges[i], path);
    jsonx::check_keys(e, path, {"kind", "source", "target", "group", "mode"});
    Edge edge;
    edge.kind = detail::parse_edge_kind(jsonx::req_string(e, "kind", path),
                                        path + ".kind");
    edge.source = jsonx::req_string(e, "source", path);
    edge.target = jsonx::req_string(e, "target", path);
    if (edge.kind == EdgeKind::kRefinement) {
      edge.group = jsonx::req_string(e, "group", path);
      edge.mode = detail::parse_refine_mode(
          jsonx::req_string(e, "mode", path), path + ".mode");
    } else if (e.find("group") != e.end() || e.find("mode") != e.end()) {
      throw ParseError(path + ": group and mode apply to refinement edges "
                              "only");
    }
    graph.add_edge(std::move(edge));
  }

  return graph;
}

inline std::string save_model(const GoalGraph& graph) {
  jsonx::json j;
  j["format"] = "msr-model/1";
  j["metadata"] = {{"system", graph.metadata().system},
                   {"iteration", graph.metadata().iteration}};

  jsonx::json attrs = jsonx::json::array();
  for (const auto& [id, a] : graph.attributes()) {
    jsonx::json aj;
    aj["id"] = a.id;
    aj["name"] = a.name;
    aj["unit"] = a.unit;
    aj["orientation"] = to_string(a.orientation);
    aj["loss_unit"] = a.loss_unit;
    attrs.push_back(std::move(aj));
  }
  j["attributes"] = std::move(attrs);

  jsonx::json nodes = jsonx::json::array();
  for (const auto& [id, node] : graph.nodes()) {
    jsonx::json nj;
    nj["id"] = node.id();
    nj["kind"] = to_string(node.kind());
    nj["spec"] = detail::node_spec_to_json(node);
    nodes.push_back(std::move(nj));
  }
  j["nodes"] = std::move(nodes);

  std::vector<Edge> sorted = graph.edges();
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Edge& a, const Edge& b) {
                     return std::tuple(std::string(to_string(a.kind)),
                                       a.source, a.target, a.group) <
                            std::tuple(std::string(to_string(b.kind)),
                                       b.source, b.target, b.group);
                   });
  jsonx::json edges = jsonx::json::array();
  for (const Edge& e : sorted) {
    jsonx::json ej;
    ej["kind"] = to_string(e.kind);
    ej["source"] = e.source;
    ej["target"] = e.target;
    if (e.kind == EdgeKind::kRefinement) {
      ej["group"] = e.group;
      ej["mode"] = to_string(e.mode);
    }
    edges.push_back(std::move(ej));
  }
  j["edges"] = std::move(edges);

  return jsonx::dump_canonical(j);
}

inline GoalGraph load_model_file(const std::string& path) {
  try {
    return load_model(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline void save_model_file(const GoalGraph& graph, const std::string& path) {
  write_file(path, save_model(graph));
}

}  // namespace msr

#endif  // MSR_MODEL_IO_HPP
