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

#ifndef MSR_BENCHMARK_HPP
#define MSR_BENCHMARK_HPP

#include <cmath>
#include <string>
#include <utility>
#include <variant>

#include "msr/errors.hpp"
#include "msr/forecast.hpp"
#include "msr/types.hpp"

namespace msr {

enum class Interpolation {
  kStepBefore,
  kLinear,
};

inline const char* to_string(Interpolation i) {
  return i == Interpolation::kStepBefore ? "step_before" : "linear";
}

// Baseline performance over time: a constant, a recorded reference series, or
// a fitted forecast model.  The only query is value_at(t).
//
// Lookup extrapolation: both interpolations hold the last recorded value for
// timestamps past the end of the series; timestamps before the first sample
// are not evaluable (EvalError).  StepBefore returns the most recent sample
// at or before t; Linear interpolates between neighbors.
class Benchmark {
 public:
  static Benchmark constant(double value) {
    if (!std::isfinite(value)) {
      throw InputError("constant benchmark value must be finite");
    }
    return Benchmark(Constant{value});
  }

  static Benchmark lookup(SampleSeries series, Interpolation interpolation) {
    if (series.empty()) {
      throw InputError("lookup benchmark needs a nonempty series");
    }
    return Benchmark(Lookup{std::move(series), interpolation});
  }

  static Benchmark model(ForecastModel model) {
    return Benchmark(Model{std::move(model)});
  }

  double value_at(double t) const {
    if (const auto* c = std::get_if<Constant>(&rep_)) return c->value;
    if (const auto* l = std::get_if<Lookup>(&rep_)) return lookup_at(*l, t);
    return std::get<Model>(rep_).model.value_at(t);
  }

  bool is_constant() const { return std::holds_alternative<Constant>(rep_); }
  bool is_lookup() const { return std::holds_alternative<Lookup>(rep_); }
  bool is_model() const { return std::holds_alternative<Model>(rep_); }

  const ForecastModel& forecast() const { return std::get<Model>(rep_).model; }

 private:
  struct Constant {
    double value;
  };
  struct Lookup {
    SampleSeries series;
    Interpolation interpolation;
  };
  struct Model {
    ForecastModel model;
  };

  explicit Benchmark(std::variant<Constant, Lookup, Model> rep)
      : rep_(std::move(rep)) {}

  static double lookup_at(const Lookup& l, double t) {
    const auto& s = l.series.samples();
    if (t < s.front().t) {
      throw EvalError("benchmark not evaluable at t=" + std::to_string(t) +
                      ": lookup series starts at t=" +
                      std::to_string(s.front().t));
    }
    if (t >= s.back().t) return s.back().v;
    // Position of the first sample with timestamp strictly greater than t;
    // front() was excluded above, so lo >= 1.
    std::size_t lo = 0, hi = s.size();
    while (hi - lo > 1) {
      const std::size_t mid = lo + (hi - lo) / 2;
      if (s[mid].t <= t) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    if (l.interpolation == Interpolation::kStepBefore) return s[lo].v;
    const Sample& a = s[lo];
    const Sample& b = s[lo + 1];
    const double w = (t - a.t) / (b.t - a.t);
    return a.v + w * (b.v - a.v);
  }

  std::variant<Constant, Lookup, Model> rep_;
};

}  // namespace msr

#endif  // MSR_BENCHMARK_HPP
