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

#ifndef MSR_REPORT_HPP
#define MSR_REPORT_HPP

#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "msr/benchmark.hpp"
#include "msr/csv.hpp"
#include "msr/detection.hpp"
#include "msr/evaluate.hpp"
#include "msr/forecast_io.hpp"
#include "msr/goal_graph.hpp"
#include "msr/io_util.hpp"
#include "msr/json_util.hpp"
#include "msr/metrics.hpp"
#include "msr/validate.hpp"

namespace msr {

/**
 * Batch evaluation of a goal model against a trace.
 *
 * The run validates the model, resolves a benchmark for every goal whose
 * (subject, attribute) series appears in the trace, detects and measures
 * degradations, judges each measured goal against its thresholds, and
 * propagates the verdicts up the refinement structure.  Nothing is skipped
 * silently: validation errors stop evaluation, a measurable goal without a
 * usable benchmark is reported as a problem, and trace series no goal
 * claims are listed as unmatched.
 *
 * The exit code is 0 exactly when validation produced no errors, no
 * problem was recorded, and no goal ends up violated.
 */

struct EvaluateOptions {
  DetectionConfig detection;
  // Directory benchmark files referenced by the model resolve against.
  std::string benchmarks_dir = ".";
};

struct GoalReport {
  std::string id;
  std::string name;
  std::string subject;
  std::string attribute;
  bool measurable = false;
  std::size_t degradations = 0;
  GoalStatus terminal = GoalStatus::kUnknown;
  GoalStatus status = GoalStatus::kUnknown;
  std::vector<GoalViolation> violations;
};

struct RunReport {
  std::vector<Diagnostic> diagnostics;
  std::vector<std::string> problems;
  std::vector<GoalReport> goals;
  std::vector<std::string> unmatched_series;
  // Propagated status of every refinable node, for diagram annotation.
  std::map<std::string, GoalStatus> statuses;
  std::size_t satisfied = 0;
  std::size_t violated = 0;
  std::size_t unknown = 0;
  int exit_code = 0;
};

namespace detail {

// Walks the goal's Reference edges for a domain property carrying a
// benchmark of the goal's attribute; first match in id order wins.
inline const BenchmarkRef* find_benchmark_ref(const GoalGraph& graph,
                                              const std::string& goal_id,
                                              const std::string& attribute) {
  const BenchmarkRef* found = nullptr;
  std::string found_id;
  for (const Edge& e : graph.edges()) {
    if (e.kind != EdgeKind::kReference || e.source != goal_id) continue;
    const Node& target = graph.node(e.target);
    if (target.kind() != NodeKind::kDomainProperty) continue;
    const DomainPropertySpec& dp = target.domain_property_spec();
    if (!dp.benchmark || dp.benchmark->attribute != attribute) continue;
    if (found == nullptr || e.target < found_id) {
      found = &*dp.benchmark;
      found_id = e.target;
    }
  }
  return found;
}

inline Benchmark resolve_benchmark(const BenchmarkRef& ref,
                                   const std::string& benchmarks_dir) {
  const auto resolve = [&benchmarks_dir](const std::string& file) {
    const std::filesystem::path p(file);
    if (p.is_absolute()) return file;
    return (std::filesystem::path(benchmarks_dir) / p).string();
  };
  switch (ref.kind) {
    case BenchmarkRefKind::kConstant:
      return Benchmark::constant(ref.value);
    case BenchmarkRefKind::kModel:
      return Benchmark::model(load_forecast_file(resolve(ref.file)));
    case BenchmarkRefKind::kLookup: {
      const TraceReadResult csv = read_trace_csv_file(resolve(ref.file));
      if (csv.table.size() != 1) {
        throw InputError("lookup benchmark file " + ref.file + " holds " +
                         std::to_string(csv.table.size()) +
                         " series, expected exactly one");
      }
      return Benchmark::lookup(csv.table.series().begin()->second,
                               ref.interpolation);
    }
  }
  throw InputError("unhandled benchmark kind");
}

}  // namespace detail

inline RunReport evaluate_run(const GoalGraph& graph,
                              const TraceTable& trace,
                              const EvaluateOptions& options = {}) {
  RunReport report;
  report.diagnostics = validate_model(graph);
  if (has_errors(report.diagnostics)) {
    report.exit_code = 1;
    return report;
  }

  std::map<std::string, GoalStatus> terminal;
  std::map<TraceTable::Key, bool> claimed;
  for (const auto& [id, node] : graph.nodes()) {
    if (!is_goal_kind(node.kind())) continue;
    GoalReport row;
    row.id = id;
    row.name = node.name();
    if (node.kind() != NodeKind::kMechanismGoal) {
      const GoalSpec& spec = node.goal();
      row.subject = spec.subject;
      row.attribute = spec.attribute;
      const SampleSeries* series =
          trace.find(spec.subject, spec.attribute);
      if (series != nullptr) {
        claimed[TraceTable::Key{spec.subject, spec.attribute}] = true;
        const BenchmarkRef* ref =
            detail::find_benchmark_ref(graph, id, spec.attribute);
        if (ref == nullptr) {
          report.problems.push_back(
              "goal " + id + ": no benchmark reference for attribute " +
              spec.attribute);
        } else {
          try {
            const Benchmark benchmark =
                detail::resolve_benchmark(*ref, options.benchmarks_dir);
            const AttributeSpec& attr = graph.attribute(spec.attribute);
            std::vector<std::pair<Degradation, ResilienceMetrics>> measured;
            for (Degradation& deg : detect_degradations(
                     *series, benchmark, attr, options.detection)) {
              ResilienceMetrics m = measure(deg, benchmark, attr);
              measured.emplace_back(std::move(deg), m);
            }
            row.measurable = true;
            row.degradations = measured.size();
            GoalEvaluation eval = evaluate_goal(node, measured);
            row.terminal = eval.status;
            row.violations = std::move(eval.violations);
            terminal[id] = row.terminal;
          } catch (const Error& e) {
            report.problems.push_back("goal " + id + ": " + e.what());
          }
        }
      }
    }
    report.goals.push_back(std::move(row));
  }

  report.statuses = propagate(graph, terminal);
  for (GoalReport& row : report.goals) {
    const auto it = report.statuses.find(row.id);
    if (it != report.statuses.end()) row.status = it->second;
    switch (row.status) {
      case GoalStatus::kSatisfied:
        ++report.satisfied;
        break;
      case GoalStatus::kViolated:
        ++report.violated;
        break;
      case GoalStatus::kUnknown:
        ++report.unknown;
        break;
    }
  }

  for (const auto& [key, series] : trace.series()) {
    if (claimed.find(key) == claimed.end()) {
      report.unmatched_series.push_back(key.first + "/" + key.second);
    }
  }

  report.exit_code =
      report.violated > 0 || !report.problems.empty() ? 1 : 0;
  return report;
}

inline std::string render_json(const RunReport& report) {
  jsonx::json j;
  j["format"] = "msr-report/1";
  jsonx::json diags = jsonx::json::array();
  for (const Diagnostic& d : report.diagnostics) {
    diags.push_back({{"severity", to_string(d.severity)},
                     {"rule", d.rule},
                     {"subject", d.subject},
                     {"message", d.message}});
  }
  j["diagnostics"] = std::move(diags);
  j["problems"] = report.problems;
  jsonx::json goals = jsonx::json::array();
  for (const GoalReport& g : report.goals) {
    jsonx::json gj;
    gj["id"] = g.id;
    gj["name"] = g.name;
    if (!g.subject.empty()) gj["subject"] = g.subject;
    if (!g.attribute.empty()) gj["attribute"] = g.attribute;
    gj["measurable"] = g.measurable;
    if (g.measurable) gj["degradations"] = g.degradations;
    gj["terminal"] = to_string(g.terminal);
    gj["status"] = to_string(g.status);
    jsonx::json violations = jsonx::json::array();
    for (const GoalViolation& v : g.violations) {
      jsonx::json vj;
      vj["t_start"] = v.t_start;
      vj["t_end"] = v.t_end;
      if (v.unrecovered) vj["unrecovered"] = true;
      jsonx::json breaches = jsonx::json::array();
      for (const MetricBreach& b : v.breaches) {
        breaches.push_back({{"metric", b.metric},
                            {"measured", b.measured},
                            {"threshold", b.threshold}});
      }
      vj["breaches"] = std::move(breaches);
      violations.push_back(std::move(vj));
    }
    gj["violations"] = std::move(violations);
    goals.push_back(std::move(gj));
  }
  j["goals"] = std::move(goals);
  j["unmatched_series"] = report.unmatched_series;
  j["summary"] = {{"satisfied", report.satisfied},
                  {"violated", report.violated},
                  {"unknown", report.unknown}};
  j["exit_code"] = report.exit_code;
  return jsonx::dump_canonical(j);
}

inline std::string render_text(const RunReport& report, bool color = false) {
  const auto paint = [color](const char* code, const std::string& text) {
    if (!color) return text;
    return std::string("\x1b[") + code + "m" + text + "\x1b[0m";
  };
  const auto status_text = [&paint](GoalStatus s) {
    switch (s) {
      case GoalStatus::kSatisfied:
        return paint("32", "satisfied");
      case GoalStatus::kViolated:
        return paint("31", "violated");
      case GoalStatus::kUnknown:
        return paint("33", "unknown");
    }
    return std::string("?");
  };

  std::string out;
  std::size_t errors = 0;
  std::size_t warnings = 0;
  for (const Diagnostic& d : report.diagnostics) {
    (d.severity == Severity::kError ? errors : warnings) += 1;
  }
  if (!report.diagnostics.empty()) {
    out += "Validation: " + std::to_string(errors) + " error(s), " +
           std::to_string(warnings) + " warning(s)\n";
    for (const Diagnostic& d : report.diagnostics) {
      out += "  [" + std::string(to_string(d.severity)) + "] " + d.rule +
             " " + d.subject + ": " + d.message + "\n";
    }
  }
  if (!report.problems.empty()) {
    out += "Problems\n";
    for (const std::string& p : report.problems) {
      out += "  - " + p + "\n";
    }
  }
  if (!report.goals.empty()) {
    out += "Goals\n";
    for (const GoalReport& g : report.goals) {
      out += "  " + g.id + "  " + g.name + "  " + status_text(g.status);
      if (g.measurable && g.terminal != g.status) {
        out += " (measured " + std::string(to_string(g.terminal)) + ")";
      }
      out += "\n";
      for (const GoalViolation& v : g.violations) {
        out += "    degradation [" + format_number(v.t_start) + ", " +
               format_number(v.t_end) + "]";
        if (v.unrecovered) out += " unrecovered";
        out += ":";
        for (const MetricBreach& b : v.breaches) {
          out += " " + b.metric + " " + format_number(b.measured) +
                 " >= " + format_number(b.threshold) + ";";
        }
        out += "\n";
      }
    }
  }
  if (!report.unmatched_series.empty()) {
    out += "Unmatched series\n";
    for (const std::string& s : report.unmatched_series) {
      out += "  - " + s + "\n";
    }
  }
  out += "Summary: " + std::to_string(report.satisfied) + " satisfied, " +
         std::to_string(report.violated) + " violated, " +
         std::to_string(report.unknown) + " unknown\n";
  return out;
}

}  // namespace msr

#endif  // MSR_REPORT_HPP
