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

// Release gate: eight end-to-end properties, one verdict line each.  Every
// check is pinned to an explicit tolerance (most are exact) and to a wall
// clock budget; the binary exits nonzero if any line fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "msr/benchmark.hpp"
#include "msr/csv.hpp"
#include "msr/detection.hpp"
#include "msr/dot_export.hpp"
#include "msr/evaluate.hpp"
#include "msr/forecast.hpp"
#include "msr/goal_graph.hpp"
#include "msr/io_util.hpp"
#include "msr/metrics.hpp"
#include "msr/model_io.hpp"
#include "msr/report.hpp"
#include "msr/trace_sim.hpp"
#include "msr/types.hpp"
#include "msr/validate.hpp"
#include "support/dot_parser.hpp"
#include "support/graph_gen.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

namespace {

using msr::AttributeSpec;
using msr::Baseline;
using msr::Benchmark;
using msr::Degradation;
using msr::GoalGraph;
using msr::GoalStatus;
using msr::Injection;
using msr::InjectionShape;
using msr::Orientation;
using msr::SampleSeries;
using msr::Scenario;
using msr::Target;
using test_support::Rng;

constexpr double kTau = 6.283185307179586476925286766559;

const AttributeSpec kHigher{"a", "Attribute", "rps",
                            Orientation::kHigherIsBetter, "requests"};
const AttributeSpec kLower{"a", "Attribute", "s",
                           Orientation::kLowerIsBetter, ""};

struct ScratchDir {
  std::filesystem::path path;

  ScratchDir() {
    std::random_device rd;
    path = std::filesystem::temp_directory_path() /
           ("msr-acceptance-" + std::to_string(rd()) + std::to_string(rd()));
    std::filesystem::create_directories(path);
  }
  ~ScratchDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
};

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// ---------------------------------------------------------------------------
// 1. A hand-checked degradation: four samples against a constant benchmark
//    of 50 must measure DT 25, RR 10, PL 200, exactly.

bool criterion1(std::string& detail) {
  const SampleSeries series = SampleSeries::from_points(
      "svc", "a", {{0, 50}, {5, 35}, {10, 25}, {15, 50}});
  const Benchmark bench = Benchmark::constant(50.0);
  const auto degs = msr::detect_degradations(series, bench, kHigher);
  if (degs.size() != 1) {
    detail = "expected one degradation, found " + std::to_string(degs.size());
    return false;
  }
  const auto m = msr::measure(degs[0], bench, kHigher);
  if (degs[0].t_start != 5.0 || degs[0].t_end != 15.0 ||
      m.disruption_tolerance != 25.0 || m.recovery_rapidity != 10.0 ||
      m.performance_loss != 200.0 || m.unrecovered) {
    detail = "measured [" + fmt(degs[0].t_start) + ", " +
             fmt(degs[0].t_end) + "] DT " + fmt(m.disruption_tolerance) +
             " RR " + fmt(m.recovery_rapidity) + " PL " +
             fmt(m.performance_loss);
    return false;
  }
  detail = "tolerance exact";
  return true;
}

// ---------------------------------------------------------------------------
// 2. The bundled reference model validates cleanly, and a simulated trace
//    losing 900 orders flags exactly the success-orders goal and the root
//    it AND-refines, nothing else.

bool criterion2(std::string& detail) {
  const GoalGraph graph =
      msr::load_model_file(std::string(MSR_FIXTURE_DIR) + "/sock_shop.json");
  const auto diags = msr::validate_model(graph);
  if (msr::has_errors(diags) || !diags.empty()) {
    detail = "fixture produced " + std::to_string(diags.size()) +
             " diagnostics";
    return false;
  }

  const auto& rt = graph.node("g.order.rt").goal().thresholds;
  const auto& sr = graph.node("g.order.sr").goal().thresholds;
  const auto& so = graph.node("g.order.so").goal().thresholds;
  const auto& inst = graph.node("g.order.pod.inst").goal().thresholds;
  const auto& tps = graph.node("g.order.ctr.tps").goal().thresholds;
  if (rt.dt_max != 10.0 || rt.rr_max != 5.0 || sr.dt_max != 20.0 ||
      so.pl_max != 500.0 || inst.dt_max != 1.0 || inst.rr_max != 2.0 ||
      tps.pl_max != 150.0) {
    detail = "fixture thresholds drifted";
    return false;
  }

  // The model's forecast benchmark, trained on a constant series that ends
  // before the trace begins, predicts 60 everywhere.
  ScratchDir dir;
  SampleSeries history("order", "success_orders");
  for (int i = 0; i < 12; ++i) history.append(-60.0 + 5.0 * i, 60.0);
  msr::save_forecast_file(
      msr::fit_holt_winters(history, 0.5, 0.25, 0.125, 3),
      (dir.path / "order_so_forecast.json").string());

  Scenario sc;
  sc.duration = 700.0;
  sc.sample_period = 5.0;
  sc.baseline = Baseline::constant(60.0);
  sc.targets = {
      {"order", "success_orders", Orientation::kHigherIsBetter, {}, true}};
  sc.injections = {
      {"order", "success_orders", 600.0, 30.0, 30.0, InjectionShape::kStep}};
  const auto sim = msr::generate(sc, 20260821);

  msr::TraceTable trace;
  trace.insert(sim.targets[0].trace);
  msr::EvaluateOptions options;
  options.benchmarks_dir = dir.path.string();
  const msr::RunReport report = msr::evaluate_run(graph, trace, options);

  std::set<std::string> violated;
  for (const auto& [id, status] : report.statuses) {
    if (status == GoalStatus::kViolated) violated.insert(id);
    if (status == GoalStatus::kSatisfied) {
      detail = id + " reported satisfied on a single-series trace";
      return false;
    }
  }
  if (violated != std::set<std::string>{"g.order", "g.order.so"}) {
    std::string got;
    for (const auto& id : violated) got += id + " ";
    detail = "violated set {" + got + "}";
    return false;
  }
  if (report.exit_code != 1) {
    detail = "exit code " + std::to_string(report.exit_code);
    return false;
  }
  detail = "loss 900 against threshold 500";
  return true;
}

// ---------------------------------------------------------------------------
// 3. Detection agrees with the per-sample brute-force scan exactly, on 200
//    random 1000-sample traces with random debouncing knobs.

bool criterion3(std::string& detail) {
  Rng rng(403);
  for (int round = 0; round < 200; ++round) {
    const double bench = rng.uniform(40.0, 60.0);
    const bool higher = rng.chance(0.5);
    SampleSeries series("svc", "a");
    double t = 0.0;
    for (int k = 0; k < 1000; ++k) {
      t += rng.uniform(0.5, 5.0);
      series.append(t, bench + rng.uniform(-20.0, 20.0));
    }
    msr::DetectionConfig config;
    if (rng.chance(0.5)) config.min_duration = rng.uniform(0.0, 20.0);
    if (rng.chance(0.5)) config.merge_gap = rng.uniform(0.0, 10.0);

    const auto naive =
        test_support::naive_scan(series.samples(), bench, higher,
                                 config.min_duration, config.merge_gap);
    const auto degs = msr::detect_degradations(
        series, Benchmark::constant(bench), higher ? kHigher : kLower,
        config);
    if (degs.size() != naive.size()) {
      detail = "episode count mismatch on trace " + std::to_string(round);
      return false;
    }
    for (std::size_t i = 0; i < degs.size(); ++i) {
      if (degs[i].t_start != naive[i].t_start ||
          degs[i].t_end != naive[i].t_end ||
          degs[i].unrecovered != naive[i].unrecovered) {
        detail = "interval mismatch on trace " + std::to_string(round) +
                 " episode " + std::to_string(i);
        return false;
      }
    }
  }
  detail = "200 traces, intervals identical";
  return true;
}

// ---------------------------------------------------------------------------
// 4. Propagation agrees with the three-valued brute-force oracle on 12,000
//    random refinement DAGs of at most 10 nodes.

bool criterion4(std::string& detail) {
  Rng rng(404);
  for (int round = 0; round < 12000; ++round) {
    const auto c = test_support::random_refinement_case(rng, 10);
    const auto statuses = msr::propagate(c.graph, c.terminal);
    for (const auto& [id, node] : c.graph.nodes()) {
      (void)node;
      if (statuses.at(id) !=
          test_support::oracle_status(c.graph, c.terminal, id)) {
        detail = "status mismatch at " + id + " in case " +
                 std::to_string(round);
        return false;
      }
    }
  }
  detail = "12000 DAGs, statuses identical";
  return true;
}

// ---------------------------------------------------------------------------
// 5. Metric laws on 1,000 random degradations each: PL bounded by DT*RR,
//    PL additive under a split at any interior sample (1e-9 relative),
//    mirror symmetry across orientations (1e-9 relative), and monotonicity
//    under pointwise-deeper deficits.

bool criterion5(std::string& detail) {
  Rng rng(405);
  const auto close = [](double a, double b) {
    return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a),
                                               std::abs(b)});
  };
  for (int round = 0; round < 1000; ++round) {
    const double bench = rng.uniform(20.0, 200.0);
    const bool higher = rng.chance(0.5);
    const AttributeSpec& attr = higher ? kHigher : kLower;
    const AttributeSpec& mirrored_attr = higher ? kLower : kHigher;
    const Benchmark benchmark = Benchmark::constant(bench);

    Degradation deg;
    deg.subject = "svc";
    deg.attribute = "a";
    const std::size_t n = 3 + rng.below(30);
    double t = rng.uniform(0.0, 100.0);
    for (std::size_t i = 0; i < n; ++i) {
      const double dev = rng.chance(0.7) ? rng.uniform(0.1, 30.0)
                                         : rng.uniform(-10.0, 0.0);
      deg.samples.push_back({t, higher ? bench - dev : bench + dev});
      t += rng.uniform(0.5, 8.0);
    }
    deg.t_start = deg.samples.front().t;
    deg.t_end = deg.samples.back().t;

    const auto m = msr::measure(deg, benchmark, attr);
    const double slack =
        1e-9 * std::max(1.0, m.disruption_tolerance * m.recovery_rapidity);
    if (m.performance_loss >
        m.disruption_tolerance * m.recovery_rapidity + slack) {
      detail = "PL " + fmt(m.performance_loss) + " exceeds DT*RR in case " +
               std::to_string(round);
      return false;
    }

    const std::size_t cut = 1 + rng.below(n - 2);
    Degradation left = deg;
    left.samples.assign(deg.samples.begin(),
                        deg.samples.begin() +
                            static_cast<std::ptrdiff_t>(cut) + 1);
    left.t_end = deg.samples[cut].t;
    Degradation right = deg;
    right.samples.assign(deg.samples.begin() +
                             static_cast<std::ptrdiff_t>(cut),
                         deg.samples.end());
    right.t_start = deg.samples[cut].t;
    const double split =
        msr::performance_loss(left, benchmark, attr) +
        msr::performance_loss(right, benchmark, attr);
    if (!close(split, m.performance_loss)) {
      detail = "split PL " + fmt(split) + " vs " + fmt(m.performance_loss) +
               " in case " + std::to_string(round);
      return false;
    }

    Degradation mirror = deg;
    for (auto& s : mirror.samples) s.v = 2.0 * bench - s.v;
    const auto mm = msr::measure(mirror, benchmark, mirrored_attr);
    if (!close(mm.disruption_tolerance, m.disruption_tolerance) ||
        !close(mm.recovery_rapidity, m.recovery_rapidity) ||
        !close(mm.performance_loss, m.performance_loss)) {
      detail = "orientation mirror diverged in case " + std::to_string(round);
      return false;
    }

    Degradation deeper = deg;
    for (auto& s : deeper.samples) {
      const double extra = rng.uniform(0.0, 10.0);
      s.v = higher ? s.v - extra : s.v + extra;
    }
    const auto dm = msr::measure(deeper, benchmark, attr);
    if (dm.disruption_tolerance <
            m.disruption_tolerance - 1e-9 * (1.0 + m.disruption_tolerance) ||
        dm.performance_loss <
            m.performance_loss - 1e-9 * (1.0 + m.performance_loss) ||
        dm.recovery_rapidity != m.recovery_rapidity) {
      detail = "deeper degradation shrank a metric in case " +
               std::to_string(round);
      return false;
    }
  }
  detail = "1000 degradations per law";
  return true;
}

// ---------------------------------------------------------------------------
// 6. Forecasting: on a noiseless seasonal series (period 24, 10 seasons)
//    the smoother's one-step-ahead error stays under 1e-6 once two seasons
//    have passed, and 50 random parameterizations agree with the
//    independent reference recursion to 1e-6.

bool criterion6(std::string& detail) {
  const std::size_t m = 24;
  const std::size_t n = 10 * m;
  std::vector<double> y;
  for (std::size_t i = 0; i < n; ++i) {
    const double phase = static_cast<double>(i % m) / static_cast<double>(m);
    y.push_back(100.0 + 12.0 * std::sin(kTau * phase) +
                4.0 * std::sin(2.0 * kTau * phase));
  }

  double max_err = 0.0;
  for (std::size_t next = 2 * m; next < n; ++next) {
    SampleSeries prefix("svc", "a");
    for (std::size_t i = 0; i < next; ++i) {
      prefix.append(static_cast<double>(i), y[i]);
    }
    const msr::ForecastModel model =
        msr::fit_holt_winters(prefix, 0.3, 0.1, 0.2, m);
    max_err = std::max(
        max_err,
        std::abs(model.value_at(static_cast<double>(next)) - y[next]));
  }
  if (!(max_err < 1e-6)) {
    detail = "one-step error " + fmt(max_err);
    return false;
  }

  Rng rng(406);
  double max_gap = 0.0;
  for (int round = 0; round < 50; ++round) {
    const std::size_t season = std::vector<std::size_t>{4, 6, 12, 24}[
        rng.below(4)];
    const std::size_t len = 2 * season + rng.below(3 * season + 1);
    const double alpha = rng.uniform(0.05, 0.95);
    const double beta = rng.uniform(0.05, 0.95);
    const double gamma = rng.uniform(0.05, 0.95);
    const double step = rng.uniform(0.5, 3.0);

    std::vector<double> series;
    SampleSeries samples("svc", "a");
    for (std::size_t i = 0; i < len; ++i) {
      const double v =
          rng.uniform(80.0, 120.0) +
          0.5 * static_cast<double>(i) +
          15.0 * std::sin(kTau * static_cast<double>(i % season) /
                          static_cast<double>(season));
      series.push_back(v);
      samples.append(static_cast<double>(i) * step, v);
    }

    double ref_sse = 0.0;
    const auto ref = test_support::reference_holt_winters(
        series, season, alpha, beta, gamma, 2 * season, &ref_sse);
    const msr::ForecastModel model =
        msr::fit_holt_winters(samples, alpha, beta, gamma, season);

    const double t_end = static_cast<double>(len - 1) * step;
    for (std::size_t h = 1; h <= 2 * season; ++h) {
      const double got =
          model.value_at(t_end + static_cast<double>(h) * step);
      const double gap = std::abs(got - ref[h - 1]) /
                         std::max(1.0, std::abs(ref[h - 1]));
      max_gap = std::max(max_gap, gap);
      if (!(gap <= 1e-6)) {
        detail = "forecast gap " + fmt(gap) + " at h=" + std::to_string(h) +
                 " in round " + std::to_string(round);
        return false;
      }
    }
    if (std::abs(model.state().training_sse - ref_sse) >
        1e-6 * std::max(1.0, ref_sse)) {
      detail = "training sse diverged in round " + std::to_string(round);
      return false;
    }
  }
  detail = "one-step error " + fmt(max_err) + ", reference gap " +
           fmt(max_gap);
  return true;
}

// ---------------------------------------------------------------------------
// 7. Simulator closure: zero-noise scenarios detect and measure to exactly
//    the attached ground truth; bounded noise (half-width under a quarter
//    of the step depth) moves RR by at most one sample period and DT by at
//    most one half-width.

bool criterion7(std::string& detail) {
  Rng rng(407);

  for (int round = 0; round < 100; ++round) {
    Scenario sc;
    const double period =
        std::vector<double>{1.0, 2.5, 5.0}[rng.below(3)];
    sc.sample_period = period;
    const bool higher = rng.chance(0.7);
    sc.baseline = rng.chance(0.5)
                      ? Baseline::constant(rng.uniform(80.0, 150.0))
                      : Baseline::seasonal(rng.uniform(100.0, 140.0),
                                           rng.uniform(5.0, 20.0),
                                           rng.uniform(50.0, 300.0));
    sc.targets = {{"svc", "a",
                   higher ? Orientation::kHigherIsBetter
                          : Orientation::kLowerIsBetter,
                   {}, true}};

    double cursor = period * static_cast<double>(1 + rng.below(4));
    const int want = 1 + static_cast<int>(rng.below(3));
    for (int i = 0; i < want; ++i) {
      Injection inj;
      inj.subject = "svc";
      inj.attribute = "a";
      inj.start = cursor + (rng.chance(0.5) ? rng.uniform(0.0, period) : 0.0);
      inj.duration = period * static_cast<double>(2 + rng.below(10)) +
                     (rng.chance(0.3) ? rng.uniform(0.0, period) : 0.0);
      inj.depth = rng.uniform(10.0, 60.0);
      inj.shape = static_cast<InjectionShape>(rng.below(3));
      sc.injections.push_back(inj);
      cursor = inj.start + inj.duration +
               period * static_cast<double>(3 + rng.below(5));
    }
    sc.duration = cursor + period * static_cast<double>(2 + rng.below(5));

    const auto sim = msr::generate(sc, 700 + static_cast<unsigned>(round));
    const auto& target = sim.targets[0];
    const Benchmark bench = Benchmark::lookup(
        target.reference, msr::Interpolation::kStepBefore);
    const AttributeSpec& attr = higher ? kHigher : kLower;
    const auto degs = msr::detect_degradations(target.trace, bench, attr);
    if (degs.size() != target.episodes.size()) {
      detail = "episode count mismatch in zero-noise round " +
               std::to_string(round);
      return false;
    }
    for (std::size_t i = 0; i < degs.size(); ++i) {
      const auto& gt = target.episodes[i];
      const auto meas = msr::measure(degs[i], bench, attr);
      if (degs[i].t_start != gt.t_start || degs[i].t_end != gt.t_end ||
          meas.disruption_tolerance != gt.expected.disruption_tolerance ||
          meas.recovery_rapidity != gt.expected.recovery_rapidity ||
          meas.performance_loss != gt.expected.performance_loss ||
          meas.unrecovered != gt.expected.unrecovered) {
        detail = "measurement drift in zero-noise round " +
                 std::to_string(round) + " episode " + std::to_string(i);
        return false;
      }
    }
  }

  for (int round = 0; round < 100; ++round) {
    Scenario sc;
    const double period =
        std::vector<double>{1.0, 2.5, 5.0}[rng.below(3)];
    sc.sample_period = period;
    const bool higher = rng.chance(0.5);
    const double depth = rng.uniform(20.0, 50.0);
    sc.noise_half_width = 0.25 * depth * rng.uniform(0.1, 0.95);
    sc.baseline = Baseline::constant(rng.uniform(80.0, 150.0));
    sc.targets = {{"svc", "a",
                   higher ? Orientation::kHigherIsBetter
                          : Orientation::kLowerIsBetter,
                   {}, true}};
    Injection inj;
    inj.subject = "svc";
    inj.attribute = "a";
    inj.start = period * static_cast<double>(2 + rng.below(20));
    inj.duration = period * static_cast<double>(2 + rng.below(12));
    inj.depth = depth;
    inj.shape = InjectionShape::kStep;
    sc.injections = {inj};
    sc.duration = inj.start + inj.duration +
                  period * static_cast<double>(3 + rng.below(10));

    const auto sim = msr::generate(sc, 900 + static_cast<unsigned>(round));
    const auto& target = sim.targets[0];
    const Benchmark bench = Benchmark::lookup(
        target.reference, msr::Interpolation::kStepBefore);
    const AttributeSpec& attr = higher ? kHigher : kLower;
    const auto degs = msr::detect_degradations(target.trace, bench, attr);
    if (degs.size() != 1 || target.episodes.size() != 1) {
      detail = "noisy round " + std::to_string(round) + " found " +
               std::to_string(degs.size()) + " episodes";
      return false;
    }
    const auto meas = msr::measure(degs[0], bench, attr);
    const auto& gt = target.episodes[0].expected;
    if (std::abs(meas.recovery_rapidity - gt.recovery_rapidity) >
        period + 1e-9) {
      detail = "noisy RR drift " +
               fmt(meas.recovery_rapidity - gt.recovery_rapidity) +
               " in round " + std::to_string(round);
      return false;
    }
    if (std::abs(meas.disruption_tolerance - gt.disruption_tolerance) >
        sc.noise_half_width + 1e-9) {
      detail = "noisy DT drift " +
               fmt(meas.disruption_tolerance - gt.disruption_tolerance) +
               " in round " + std::to_string(round);
      return false;
    }
  }

  detail = "100 exact scenarios, 100 noisy scenarios";
  return true;
}

// ---------------------------------------------------------------------------
// 8. Round trips: the canonical fixture and 500 generated models survive
//    load and save byte for byte, and every exported diagram parses back to
//    the source graph's node and edge multisets.

test_support::RecoveredModel structure_of(const GoalGraph& g) {
  test_support::RecoveredModel out;
  for (const auto& [id, node] : g.nodes()) {
    (void)node;
    out.node_ids.insert(id);
  }
  for (const msr::Edge& e : g.edges()) {
    if (e.kind == msr::EdgeKind::kRefinement) {
      out.edges.insert({"refinement", e.source, e.target, e.group,
                        e.mode == msr::RefineMode::kAnd ? "and" : "or"});
    } else {
      out.edges.insert({msr::to_string(e.kind), e.source, e.target, "", ""});
    }
  }
  return out;
}

bool criterion8(std::string& detail) {
  const std::string canonical =
      msr::read_file(std::string(MSR_FIXTURE_DIR) + "/sock_shop.json");
  if (msr::save_model(msr::load_model(canonical)) != canonical) {
    detail = "canonical fixture did not round trip";
    return false;
  }

  Rng rng(408);
  for (int round = 0; round < 500; ++round) {
    const GoalGraph graph = test_support::random_graph(rng);
    const std::string once = msr::save_model(graph);
    const std::string twice = msr::save_model(msr::load_model(once));
    if (once != twice) {
      detail = "save/load/save changed bytes in round " +
               std::to_string(round);
      return false;
    }

    const auto recovered = test_support::recover_model(test_support::parse_dot(
        msr::export_dot(graph, msr::RenderStyle::standard())));
    const auto expected = structure_of(graph);
    if (recovered.node_ids != expected.node_ids ||
        recovered.edges != expected.edges) {
      detail = "diagram lost structure in round " + std::to_string(round);
      return false;
    }
  }
  detail = "canonical fixture and 500 graphs";
  return true;
}

}  // namespace

int main() {
  struct Entry {
    const char* label;
    double budget_s;
    bool (*run)(std::string&);
  };
  const Entry entries[] = {
      {"worked example measures DT 25, RR 10, PL 200", 1.0, criterion1},
      {"reference model validates and flags the success-orders chain", 5.0,
       criterion2},
      {"detection matches the per-sample oracle", 30.0, criterion3},
      {"propagation matches the three-valued oracle", 60.0, criterion4},
      {"metric bound, additivity, symmetry, monotonicity", 30.0, criterion5},
      {"seasonal forecasting tracks and matches the reference", 30.0,
       criterion6},
      {"simulator ground truth closes under measurement", 60.0, criterion7},
      {"models and diagrams round-trip losslessly", 30.0, criterion8}};

  bool all = true;
  int number = 0;
  for (const Entry& e : entries) {
    ++number;
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = e.run(detail);
    } catch (const std::exception& ex) {
      detail = ex.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                      start)
            .count();
    if (ok && secs >= e.budget_s) {
      ok = false;
      detail = "exceeded " + fmt(e.budget_s) + "s budget";
    }
    std::printf("[%s] criterion %d: %s (%.2fs%s%s)\n", ok ? "PASS" : "FAIL",
                number, e.label, secs, detail.empty() ? "" : "; ",
                detail.c_str());
    all = all && ok;
  }
  return all ? 0 : 1;
}
