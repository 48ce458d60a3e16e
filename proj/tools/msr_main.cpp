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

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>
#include <unistd.h>

#include "msr/cli.hpp"

namespace {

bool want_color() {
  if (std::getenv("MSR_NO_COLOR") != nullptr) return false;
  return isatty(STDOUT_FILENO) == 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Resilience goal modeling and measurement for microservices"};
  app.require_subcommand(1);

  msr::ValidateArgs validate_args;
  CLI::App* validate =
      app.add_subcommand("validate", "Check a goal model file");
  validate->add_option("--model", validate_args.model, "Goal model file")
      ->required();

  msr::FitArgs fit_args;
  CLI::App* fit =
      app.add_subcommand("fit", "Fit a forecasting benchmark to a trace");
  fit->add_option("--trace", fit_args.trace, "Trace CSV")->required();
  fit->add_option("--subject", fit_args.subject, "Series subject");
  fit->add_option("--attribute", fit_args.attribute, "Series attribute");
  fit->add_option("--method", fit_args.method, "ewma or holt_winters")
      ->required();
  fit->add_option("--season-length", fit_args.season_length,
                  "Samples per season (holt_winters)");
  fit->add_option("--grid-step", fit_args.grid_step,
                  "Search grid step in (0, 1]");
  fit->add_option("--alpha", fit_args.alpha, "Fix alpha instead of searching");
  fit->add_option("--beta", fit_args.beta, "Fix beta instead of searching");
  fit->add_option("--gamma", fit_args.gamma, "Fix gamma instead of searching");
  fit->add_option("--output", fit_args.output, "Benchmark file to write")
      ->required();

  msr::EvaluateArgs evaluate_args;
  CLI::App* evaluate =
      app.add_subcommand("evaluate", "Evaluate a goal model against a trace");
  evaluate->add_option("--model", evaluate_args.model, "Goal model file")
      ->required();
  evaluate->add_option("--trace", evaluate_args.trace, "Trace CSV")
      ->required();
  evaluate->add_option("--benchmarks", evaluate_args.benchmarks,
                       "Directory for benchmark files (default: model dir)");
  evaluate->add_option("--format", evaluate_args.format, "text or json");
  evaluate->add_option("--dot", evaluate_args.dot,
                       "Also write a status-annotated DOT diagram here");
  evaluate->add_option("--min-duration", evaluate_args.min_duration,
                       "Drop degradations shorter than this many seconds");
  evaluate->add_option("--merge-gap", evaluate_args.merge_gap,
                       "Merge degradations separated by at most this gap");
  evaluate->add_flag("--skip-bad-rows", evaluate_args.skip_bad_rows,
                     "Drop malformed trace rows instead of failing");

  msr::SimulateArgs simulate_args;
  CLI::App* simulate =
      app.add_subcommand("simulate", "Generate a synthetic trace");
  simulate->add_option("--scenario", simulate_args.scenario, "Scenario file")
      ->required();
  simulate->add_option("--seed", simulate_args.seed, "Random seed");
  simulate->add_option("--out-dir", simulate_args.out_dir,
                       "Output directory");

  msr::ExportArgs export_args;
  CLI::App* exporter =
      app.add_subcommand("export", "Render a goal model as a document");
  exporter->add_option("--model", export_args.model, "Goal model file")
      ->required();
  exporter->add_option("--format", export_args.format, "dot or markdown");
  exporter->add_option("--output", export_args.output,
                       "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  evaluate_args.color = want_color();
  if (validate->parsed()) {
    return msr::cmd_validate(validate_args, std::cout, std::cerr);
  }
  if (fit->parsed()) {
    return msr::cmd_fit(fit_args, std::cout, std::cerr);
  }
  if (evaluate->parsed()) {
    return msr::cmd_evaluate(evaluate_args, std::cout, std::cerr);
  }
  if (simulate->parsed()) {
    return msr::cmd_simulate(simulate_args, std::cout, std::cerr);
  }
  if (exporter->parsed()) {
    return msr::cmd_export(export_args, std::cout, std::cerr);
  }
  return 2;
}
