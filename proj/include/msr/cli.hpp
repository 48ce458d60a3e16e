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

// Command implementations behind the msr binary.  Each command is a plain
// function over an argument struct and two streams, so tests drive them
// without a process boundary.  Exit codes: 0 success, 1 violations or
// validation errors, 2 usage and IO errors.

#ifndef MSR_CLI_HPP
#define MSR_CLI_HPP

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>

#include "msr/csv.hpp"
#include "msr/dot_export.hpp"
#include "msr/forecast.hpp"
#include "msr/forecast_io.hpp"
#include "msr/markdown_export.hpp"
#include "msr/model_io.hpp"
#include "msr/report.hpp"
#include "msr/trace_sim.hpp"
#include "msr/validate.hpp"

namespace msr {

namespace detail {

inline std::string parent_dir(const std::string& path) {
  const std::string dir =
      std::filesystem::path(path).parent_path().string();
  return dir.empty() ? "." : dir;
}

}  // namespace detail

struct ValidateArgs {
  std::string model;
};

inline int cmd_validate(const ValidateArgs& args, std::ostream& out,
                        std::ostream& err) {
  try {
    const GoalGraph graph = load_model_file(args.model);
    const std::vector<Diagnostic> diags = validate_model(graph);
    for (const Diagnostic& d : diags) {
      out << "[" << to_string(d.severity) << "] " << d.rule << " "
          << d.subject << ": " << d.message << "\n";
    }
    if (has_errors(diags)) return 1;
    out << "ok: " << graph.nodes().size() << " nodes, "
        << graph.edges().size() << " edges\n";
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

struct FitArgs {
  std::string trace;
  std::string subject;
  std::string attribute;
  std::string method;
  std::size_t season_length = 0;
  double grid_step = 0.1;
  // Zero means "search"; smoothing parameters live in (0, 1].
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  std::string output;
};

inline int cmd_fit(const FitArgs& args, std::ostream& out,
                   std::ostream& err) {
  try {
    const TraceReadResult csv = read_trace_csv_file(args.trace);
    const SampleSeries* series = nullptr;
    if (!args.subject.empty() || !args.attribute.empty()) {
      series = csv.table.find(args.subject, args.attribute);
      if (series == nullptr) {
        throw InputError("trace has no series " + args.subject + "/" +
                         args.attribute);
      }
    } else if (csv.table.size() == 1) {
      series = &csv.table.series().begin()->second;
    } else {
      throw InputError("trace holds " + std::to_string(csv.table.size()) +
                       " series; pick one with --subject and --attribute");
    }

    GridSpec grid;
    if (args.method == "ewma") {
      grid.kind = ForecastKind::kEwma;
    } else if (args.method == "holt_winters") {
      grid.kind = ForecastKind::kHoltWintersAdditive;
      grid.season_length = args.season_length;
      if (args.season_length < 2) {
        throw InputError("holt_winters needs --season-length of at least 2");
      }
    } else {
      throw InputError("unknown method \"" + args.method +
                       "\"; use ewma or holt_winters");
    }
    grid.alphas = args.alpha > 0.0 ? std::vector<double>{args.alpha}
                                   : uniform_grid(args.grid_step);
    grid.betas = args.beta > 0.0 ? std::vector<double>{args.beta}
                                 : uniform_grid(args.grid_step);
    grid.gammas = args.gamma > 0.0 ? std::vector<double>{args.gamma}
                                   : uniform_grid(args.grid_step);

    ForecastModel model = [&] {
      try {
        return grid_fit(*series, grid);
      } catch (const Error& e) {
        throw InputError(std::string(e.what()) + " (series " +
                         series->subject() + "/" + series->attribute() +
                         ", " + std::to_string(series->size()) +
                         " samples)");
      }
    }();

    const ForecastState st = model.state();
    out << "fitted " << to_string(st.kind);
    if (st.kind == ForecastKind::kEwma) {
      out << " alpha=" << format_number(std::get<EwmaParams>(st.params).alpha);
    } else {
      const auto& p = std::get<HoltWintersParams>(st.params);
      out << " alpha=" << format_number(p.alpha)
          << " beta=" << format_number(p.beta)
          << " gamma=" << format_number(p.gamma)
          << " season_length=" << p.season_length;
    }
    out << " sse=" << format_number(st.training_sse) << " over "
        << st.training_samples << " samples\n";
    save_forecast_file(model, args.output);
    out << "wrote " << args.output << "\n";
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

struct EvaluateArgs {
  std::string model;
  std::string trace;
  std::string benchmarks;
  std::string format = "text";
  std::string dot;
  double min_duration = 0.0;
  double merge_gap = 0.0;
  bool skip_bad_rows = false;
  bool color = false;
};

inline int cmd_evaluate(const EvaluateArgs& args, std::ostream& out,
                        std::ostream& err) {
  try {
    if (args.format != "text" && args.format != "json") {
      throw InputError("unknown format \"" + args.format +
                       "\"; use text or json");
    }
    const GoalGraph graph = load_model_file(args.model);
    TraceReadOptions read_options;
    read_options.skip_bad_rows = args.skip_bad_rows;
    const TraceReadResult csv =
        read_trace_csv_file(args.trace, read_options);
    for (const std::string& note : csv.skipped) {
      err << "skipped " << note << "\n";
    }

    EvaluateOptions options;
    options.detection.min_duration = args.min_duration;
    options.detection.merge_gap = args.merge_gap;
    options.benchmarks_dir = args.benchmarks.empty()
                                 ? detail::parent_dir(args.model)
                                 : args.benchmarks;
    const RunReport report = evaluate_run(graph, csv.table, options);

    if (args.format == "json") {
      out << render_json(report);
    } else {
      out << render_text(report, args.color);
    }
    if (!args.dot.empty() && !has_errors(report.diagnostics)) {
      write_file(args.dot,
                 export_dot(graph, RenderStyle::standard(),
                            report.statuses));
    }
    return report.exit_code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

struct SimulateArgs {
  std::string scenario;
  std::uint64_t seed = 0;
  std::string out_dir = ".";
};

inline int cmd_simulate(const SimulateArgs& args, std::ostream& out,
                        std::ostream& err) {
  try {
    const Scenario scenario = load_scenario_file(args.scenario);
    const SimulationResult result = generate(scenario, args.seed);

    TraceTable trace;
    TraceTable reference;
    for (const TargetTrace& t : result.targets) {
      trace.insert(t.trace);
      reference.insert(t.reference);
    }
    const std::filesystem::path dir(args.out_dir);
    std::filesystem::create_directories(dir);
    const std::string trace_path = (dir / "trace.csv").string();
    const std::string reference_path = (dir / "reference.csv").string();
    const std::string truth_path = (dir / "ground_truth.json").string();
    write_trace_csv_file(trace, trace_path);
    write_trace_csv_file(reference, reference_path);
    write_file(truth_path, save_ground_truth(result));
    out << "wrote " << trace_path << "\n";
    out << "wrote " << reference_path << "\n";
    out << "wrote " << truth_path << "\n";
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

struct ExportArgs {
  std::string model;
  std::string format = "dot";
  std::string output;
};

inline int cmd_export(const ExportArgs& args, std::ostream& out,
                      std::ostream& err) {
  try {
    const GoalGraph graph = load_model_file(args.model);
    std::string document;
    if (args.format == "dot") {
      document = export_dot(graph, RenderStyle::standard());
    } else if (args.format == "markdown") {
      document = export_markdown(graph);
    } else {
      throw InputError("unknown format \"" + args.format +
                       "\"; use dot or markdown");
    }
    if (args.output.empty()) {
      out << document;
    } else {
      write_file(args.output, document);
      out << "wrote " << args.output << "\n";
    }
    return 0;
  } catch (const ModelError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace msr

#endif  // MSR_CLI_HPP
