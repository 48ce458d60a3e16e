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

#ifndef MSR_TYPES_HPP
#define MSR_TYPES_HPP

#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "msr/errors.hpp"

namespace msr {

// Direction in which a performance attribute improves.  Every deviation in
// the library is oriented so that a positive value means "worse than the
// benchmark" regardless of the attribute's natural direction.
enum class Orientation {
  kHigherIsBetter,
  kLowerIsBetter,
};

inline const char* to_string(Orientation o) {
  return o == Orientation::kHigherIsBetter ? "higher_is_better"
                                           : "lower_is_better";
}

// Description of a measurable performance attribute.  `unit` is the unit of
// the attribute itself (and therefore of disruption tolerance); `loss_unit`
// is the unit of the time integral used for performance loss.
struct AttributeSpec {
  std::string id;
  std::string name;
  std::string unit;
  Orientation orientation = Orientation::kHigherIsBetter;
  std::string loss_unit;
};

// One observation: a value at a point in time.  Timestamps are seconds on an
// arbitrary shared clock; the library never interprets them as wall time.
struct Sample {
  double t = 0.0;
  double v = 0.0;

  bool operator==(const Sample&) const = default;
};

// A time-ordered run of samples for one (subject, attribute) pair.
// Invariant: timestamps are finite and strictly increasing, values finite.
// Mutation goes through append() so the invariant cannot lapse.
class SampleSeries {
 public:
  SampleSeries() = default;
  SampleSeries(std::string subject, std::string attribute)
      : subject_(std::move(subject)), attribute_(std::move(attribute)) {}

  static SampleSeries from_points(
      std::string subject, std::string attribute,
      const std::vector<std::pair<double, double>>& points) {
    SampleSeries s(std::move(subject), std::move(attribute));
    for (const auto& [t, v] : points) s.append(t, v);
    return s;
  }

  void append(double t, double v) {
    if (!std::isfinite(t) || !std::isfinite(v)) {
      throw InputError("non-finite sample at t=" + std::to_string(t) +
                       " for " + subject_ + "/" + attribute_);
    }
    if (!samples_.empty() && t <= samples_.back().t) {
      throw InputError("timestamps not strictly increasing at t=" +
                       std::to_string(t) + " for " + subject_ + "/" +
                       attribute_);
    }
    samples_.push_back(Sample{t, v});
  }

  const std::string& subject() const { return subject_; }
  const std::string& attribute() const { return attribute_; }
  const std::vector<Sample>& samples() const { return samples_; }

  bool empty() const { return samples_.empty(); }
  std::size_t size() const { return samples_.size(); }
  const Sample& front() const { return samples_.front(); }
  const Sample& back() const { return samples_.back(); }
  const Sample& operator[](std::size_t i) const { return samples_[i]; }

 private:
  std::string subject_;
  std::string attribute_;
  std::vector<Sample> samples_;
};

// A disruptive event that explains one or more degradations.  `occurred_at`
// is absent when the onset was not observed directly.
struct Disruption {
  std::string object;
  std::string event_type;
  std::optional<double> occurred_at;
  std::vector<std::string> evidence;
};

// A contiguous episode during which a subject performed below benchmark.
//
// `t_start` is the first violating sample's timestamp.  For a recovered
// episode `t_end` is the first timestamp at or after which the subject is
// back within benchmark; for an unrecovered episode it is the last observed
// timestamp and `unrecovered` is set.  `samples` holds the observed
// sub-series covering [t_start, t_end], including the recovery sample when
// there is one.
//
// Invariant: t_end >= t_start, with equality possible only when unrecovered
// (a violation at the very last sample has no observed extent).
struct Degradation {
  std::string subject;
  std::string attribute;
  double t_start = 0.0;
  double t_end = 0.0;
  bool unrecovered = false;
  std::vector<Sample> samples;
  std::optional<Disruption> cause;
};

// The three resilience measurements for one degradation.  All values are
// non-negative; `unrecovered` is carried over from the degradation so that a
// lower bound is distinguishable from a final measurement.
struct ResilienceMetrics {
  double disruption_tolerance = 0.0;
  double recovery_rapidity = 0.0;
  double performance_loss = 0.0;
  bool unrecovered = false;
};

}  // namespace msr

#endif  // MSR_TYPES_HPP
