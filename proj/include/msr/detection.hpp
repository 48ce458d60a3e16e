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

#ifndef MSR_DETECTION_HPP
#define MSR_DETECTION_HPP

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "msr/benchmark.hpp"
#include "msr/errors.hpp"
#include "msr/types.hpp"

namespace msr {

// Signed shortfall of a sample against its benchmark.  Positive means the
// subject is performing worse than the benchmark, whichever way the
// attribute is oriented.
inline double deviation(double sample_value, double benchmark_value,
                        Orientation orientation) {
  if (!std::isfinite(sample_value) || !std::isfinite(benchmark_value)) {
    throw InputError("deviation of non-finite value (sample=" +
                     std::to_string(sample_value) + ", benchmark=" +
                     std::to_string(benchmark_value) + ")");
  }
  return orientation == Orientation::kHigherIsBetter
             ? benchmark_value - sample_value
             : sample_value - benchmark_value;
}

// Debouncing knobs for detect_degradations.  The defaults reproduce the raw
// per-sample semantics: every violating run becomes its own degradation.
struct DetectionConfig {
  // Episodes with t_end - t_start below this are discarded after merging.
  double min_duration = 0.0;
  // Two episodes separated by a recovered gap of at most this many seconds
  // are merged into one.  Adjacent runs always have a gap of at least one
  // sampling step, so 0 never merges.
  double merge_gap = 0.0;
};

// Scans the series against the benchmark and returns the degradation
// episodes, ordered by start time.
//
// A sample is violating iff deviation > 0 (strictly).  Each maximal run of
// violating samples yields an episode: t_start is the run's first timestamp
// and t_end the timestamp of the first non-violating sample after it.  A run
// still open at the end of the series is flagged unrecovered with t_end set
// to the last timestamp.  Runs whose recovered gap is at most
// config.merge_gap are merged, then episodes shorter than
// config.min_duration are dropped.  Episode samples cover [t_start, t_end]
// inclusive, so a recovered episode carries its recovery sample and a merged
// episode carries the samples of the gap it absorbed.
inline std::vector<Degradation> detect_degradations(
    const SampleSeries& series, const Benchmark& benchmark,
    const AttributeSpec& attr, const DetectionConfig& config = {}) {
  if (series.empty()) {
    throw InputError("cannot detect degradations in empty series " +
                     series.subject() + "/" + series.attribute());
  }
  const auto& s = series.samples();
  std::vector<bool> violating(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double b = benchmark.value_at(s[i].t);
    violating[i] = deviation(s[i].v, b, attr.orientation) > 0.0;
  }

  // Runs as index pairs [first, last] of violating samples, plus the index
  // of the recovery sample (== last for an unrecovered tail run).
  struct Run {
    std::size_t first;
    std::size_t last;
    std::size_t end;
    bool unrecovered;
  };
  std::vector<Run> runs;
  for (std::size_t i = 0; i < s.size();) {
    if (!violating[i]) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < s.size() && violating[j + 1]) ++j;
    const bool open = j + 1 == s.size();
    runs.push_back(Run{i, j, open ? j : j + 1, open});
    i = j + 2;
  }

  std::vector<Run> merged;
  for (const Run& r : runs) {
    if (!merged.empty()) {
      Run& prev = merged.back();
      const double gap = s[r.first].t - s[prev.end].t;
      if (gap <= config.merge_gap) {
        prev.last = r.last;
        prev.end = r.end;
        prev.unrecovered = r.unrecovered;
        continue;
      }
    }
    merged.push_back(r);
  }

  std::vector<Degradation> out;
  for (const Run& r : merged) {
    const double t_start = s[r.first].t;
    const double t_end = s[r.end].t;
    if (t_end - t_start < config.min_duration) continue;
    Degradation d;
    d.subject = series.subject();
    d.attribute = series.attribute();
    d.t_start = t_start;
    d.t_end = t_end;
    d.unrecovered = r.unrecovered;
    d.samples.assign(s.begin() + static_cast<std::ptrdiff_t>(r.first),
                     s.begin() + static_cast<std::ptrdiff_t>(r.end) + 1);
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace msr

#endif  // MSR_DETECTION_HPP
