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

// Smallest useful program: find degradations in a short trace against a
// constant benchmark and print the three resilience metrics for each.

#include <cstdio>

#include "msr/benchmark.hpp"
#include "msr/detection.hpp"
#include "msr/metrics.hpp"
#include "msr/types.hpp"

int main() {
  const msr::AttributeSpec throughput{
      "tps", "Throughput", "requests/s",
      msr::Orientation::kHigherIsBetter, "requests"};

  const msr::SampleSeries trace = msr::SampleSeries::from_points(
      "checkout", "tps",
      {{0, 50}, {5, 35}, {10, 25}, {15, 50}, {20, 48}, {25, 51}});
  const msr::Benchmark benchmark = msr::Benchmark::constant(50.0);

  const auto degradations =
      msr::detect_degradations(trace, benchmark, throughput);
  std::printf("%zu degradation(s) in %s/%s\n", degradations.size(),
              trace.subject().c_str(), trace.attribute().c_str());
  for (const msr::Degradation& d : degradations) {
    const msr::ResilienceMetrics m =
        msr::measure(d, benchmark, throughput);
    std::printf(
        "  [%g, %g]%s  tolerance %g %s  rapidity %g s  loss %g %s\n",
        d.t_start, d.t_end, m.unrecovered ? " (unrecovered)" : "",
        m.disruption_tolerance, throughput.unit.c_str(),
        m.recovery_rapidity, m.performance_loss,
        throughput.loss_unit.c_str());
  }
  return 0;
}
