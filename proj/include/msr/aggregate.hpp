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

#ifndef MSR_AGGREGATE_HPP
#define MSR_AGGREGATE_HPP

#include <cmath>
#include <string>
#include <vector>

#include "msr/errors.hpp"

namespace msr {

// Point-in-time measurement of one container instance backing a service.
// response_time in milliseconds, success_rate in [0, 1], tps nonnegative.
struct ContainerSnapshot {
  std::string instance;
  double response_time = 0.0;
  double success_rate = 0.0;
  double tps = 0.0;
};

namespace detail {

inline void check_snapshots(const std::vector<ContainerSnapshot>& snapshots) {
  if (snapshots.empty()) {
    throw InputError("cannot aggregate an empty snapshot list");
  }
  for (const ContainerSnapshot& c : snapshots) {
    if (!std::isfinite(c.response_time) || !std::isfinite(c.success_rate) ||
        !std::isfinite(c.tps)) {
      throw InputError("snapshot " + c.instance +
                       " carries non-finite values");
    }
    if (c.tps < 0.0) {
      throw InputError("snapshot " + c.instance + " has negative tps");
    }
    if (c.success_rate < 0.0 || c.success_rate > 1.0) {
      throw InputError("snapshot " + c.instance +
                       " has success_rate outside [0, 1]");
    }
  }
}

inline double total_tps(const std::vector<ContainerSnapshot>& snapshots) {
  double sum = 0.0;
  for (const ContainerSnapshot& c : snapshots) sum += c.tps;
  if (!(sum > 0.0)) {
    throw EvalError(
        "aggregate undefined: total tps is zero across " +
        std::to_string(snapshots.size()) + " snapshots");
  }
  return sum;
}

}  // namespace detail

// TPS-weighted mean response time across the instances of a service.
inline double aggregate_response_time(
    const std::vector<ContainerSnapshot>& snapshots) {
  detail::check_snapshots(snapshots);
  const double total = detail::total_tps(snapshots);
  double acc = 0.0;
  for (const ContainerSnapshot& c : snapshots) {
    acc += c.response_time * c.tps;
  }
  return acc / total;
}

// TPS-weighted mean success rate across the instances of a service.
inline double aggregate_success_rate(
    const std::vector<ContainerSnapshot>& snapshots) {
  detail::check_snapshots(snapshots);
  const double total = detail::total_tps(snapshots);
  double acc = 0.0;
  for (const ContainerSnapshot& c : snapshots) {
    acc += c.success_rate * c.tps;
  }
  return acc / total;
}

// Success-weighted total throughput: the rate of successfully handled
// transactions across all instances.  Defined even at zero total tps.
inline double aggregate_throughput_rate(
    const std::vector<ContainerSnapshot>& snapshots) {
  detail::check_snapshots(snapshots);
  double acc = 0.0;
  for (const ContainerSnapshot& c : snapshots) {
    acc += c.success_rate * c.tps;
  }
  return acc;
}

}  // namespace msr

#endif  // MSR_AGGREGATE_HPP
