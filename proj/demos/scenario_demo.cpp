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

// Simulate a service under two injected disruptions, then detect and
// measure the degradations and compare them with the simulator's own
// ground truth.  With noise at zero the two columns agree exactly.

#include <cstdio>

#include "msr/benchmark.hpp"
#include "msr/detection.hpp"
#include "msr/metrics.hpp"
#include "msr/trace_sim.hpp"

int main() {
  msr::Scenario scenario;
  scenario.duration = 600.0;
  scenario.sample_period = 5.0;
  scenario.baseline = msr::Baseline::seasonal(120.0, 15.0, 300.0);
  scenario.targets = {{"checkout", "tps",
                       msr::Orientation::kHigherIsBetter, {}, true}};
  scenario.injections = {
      {"checkout", "tps", 100.0, 60.0, 40.0, msr::InjectionShape::kStep},
      {"checkout", "tps", 350.0, 120.0, 55.0, msr::InjectionShape::kRamp},
  };

  const msr::SimulationResult result = msr::generate(scenario, 42);
  const msr::TargetTrace& target = result.targets[0];

  const msr::AttributeSpec attr{"tps", "Throughput", "tps",
                                target.orientation, "transactions"};
  const msr::Benchmark benchmark = msr::Benchmark::lookup(
      target.reference, msr::Interpolation::kStepBefore);

  const auto found =
      msr::detect_degradations(target.trace, benchmark, attr);
  std::printf("%zu injected, %zu detected\n",
              scenario.injections.size(), found.size());
  for (std::size_t i = 0; i < found.size(); ++i) {
    const auto measured = msr::measure(found[i], benchmark, attr);
    const auto& truth = target.episodes[i];
    std::printf("episode %zu (injection %zu, %s)\n", i, truth.injection,
                msr::to_string(
                    scenario.injections[truth.injection].shape));
    std::printf("  window    measured [%g, %g]  truth [%g, %g]\n",
                found[i].t_start, found[i].t_end, truth.t_start,
                truth.t_end);
    std::printf("  tolerance measured %.3f  truth %.3f\n",
                measured.disruption_tolerance,
                truth.expected.disruption_tolerance);
    std::printf("  loss      measured %.3f  truth %.3f\n",
                measured.performance_loss,
                truth.expected.performance_loss);
  }
  return 0;
}
