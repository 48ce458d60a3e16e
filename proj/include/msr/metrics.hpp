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

#ifndef MSR_METRICS_HPP
#define MSR_METRICS_HPP

#include <algorithm>
#include <string>

#include "msr/benchmark.hpp"
#include "msr/detection.hpp"
#include "msr/errors.hpp"
#include "msr/types.hpp"

namespace msr {

namespace detail {

inline void check_degradation(const Degradation& deg) {
  if (deg.samples.empty()) {
    throw InputError("degradation for " + deg.subject + "/" + deg.attribute +
                     " carries no samples");
  }
  if (deg.t_end < deg.t_start ||
      (deg.t_end == deg.t_start && !deg.unrecovered)) {
    throw InputError("degradation for " + deg.subject + "/" + deg.attribute +
                     " has an empty time window");
  }
}

}  // namespace detail

// Worst orientation-adjusted shortfall over the degradation window.
inline double disruption_tolerance(const Degradation& deg,
                                   const Benchmark& benchmark,
                                   const AttributeSpec& attr) {
  detail::check_degradation(deg);
  double worst = 0.0;
  for (const Sample& s : deg.samples) {
    const double d =
        deviation(s.v, benchmark.value_at(s.t), attr.orientation);
    worst = std::max(worst, d);
  }
  return worst;
}

// Elapsed time from onset to recovery.  For an unrecovered degradation this
// is the observed span so far, a lower bound on the eventual value.
inline double recovery_rapidity(const Degradation& deg) {
  detail::check_degradation(deg);
  return deg.t_end - deg.t_start;
}

// Time integral of the positive deviation over [t_start, t_end], zero-order
// hold: each sample's deviation is held until the next sample.  Deviations
// below zero contribute nothing; overshoot never offsets loss.
inline double performance_loss(const Degradation& deg,
                               const Benchmark& benchmark,
                               const AttributeSpec& attr) {
  detail::check_degradation(deg);
  double loss = 0.0;
  for (std::size_t i = 0; i + 1 < deg.samples.size(); ++i) {
    const Sample& a = deg.samples[i];
    if (a.t >= deg.t_end) break;
    const double dt = std::min(deg.samples[i + 1].t, deg.t_end) - a.t;
    const double d =
        deviation(a.v, benchmark.value_at(a.t), attr.orientation);
    loss += dt * std::max(d, 0.0);
  }
  return loss;
}

inline ResilienceMetrics measure(const Degradation& deg,
                                 const Benchmark& benchmark,
                                 const AttributeSpec& attr) {
  ResilienceMetrics m;
  m.disruption_tolerance = disruption_tolerance(deg, benchmark, attr);
  m.recovery_rapidity = recovery_rapidity(deg);
  m.performance_loss = performance_loss(deg, benchmark, attr);
  m.unrecovered = deg.unrecovered;
  return m;
}

}  // namespace msr

#endif  // MSR_METRICS_HPP
