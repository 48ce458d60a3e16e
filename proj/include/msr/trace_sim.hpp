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

#ifndef MSR_TRACE_SIM_HPP
#define MSR_TRACE_SIM_HPP

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "msr/errors.hpp"
#include "msr/io_util.hpp"
#include "msr/json_util.hpp"
#include "msr/types.hpp"

namespace msr {

/**
 * Synthetic trace generation.
 *
 * A scenario samples each target on the grid t_k = k * sample_period for
 * k = 0 .. floor(duration / sample_period).  Every target value is
 *
 *     baseline(t)  -/+  deficit(t)  +  noise(t)
 *
 * where the deficit is subtracted for higher-is-better attributes and
 * added for lower-is-better ones, noise is zero-mean uniform on
 * [-noise_half_width, +noise_half_width], and clamp_at_zero floors the
 * result at zero for attributes that cannot go negative.
 *
 * Alongside the noisy trace, generation produces a reference series per
 * target: the noiseless baseline widened by one noise half-width in the
 * benign direction, on the same grid.  Judged against that reference,
 * clean samples can never read as violations, so every ground-truth
 * episode is attributable to exactly one injection.  Ground truth is
 * computed from the noiseless values on the identical grid, making the
 * zero-noise case close exactly under the left-Riemann loss convention.
 */

// Workload baseline, constant or a sinusoid mirroring a daily cycle.
struct Baseline {
  enum class Kind { kConstant, kSeasonal };
  Kind kind = Kind::kConstant;
  double value = 0.0;
  double base = 0.0;
  double amplitude = 0.0;
  double period = 0.0;

  static Baseline constant(double value) {
    Baseline b;
    b.kind = Kind::kConstant;
    b.value = value;
    return b;
  }

  static Baseline seasonal(double base, double amplitude, double period) {
    Baseline b;
    b.kind = Kind::kSeasonal;
    b.base = base;
    b.amplitude = amplitude;
    b.period = period;
    return b;
  }

  double at(double t) const {
    if (kind == Kind::kConstant) return value;
    constexpr double kTau = 6.283185307179586476925286766559;
    return base + amplitude * std::sin(kTau * t / period);
  }
};

enum class InjectionShape {
  kStep,
  kRamp,
  kSpike,
};

inline const char* to_string(InjectionShape s) {
  switch (s) {
    case InjectionShape::kStep:
      return "step";
    case InjectionShape::kRamp:
      return "ramp";
    case InjectionShape::kSpike:
      return "spike";
  }
  return "?";
}

// One disruption: a deficit carved out of a target over [start,
// start + duration).  Step holds the full depth, Ramp climbs linearly from
// zero to depth, Spike rises to depth at the midpoint and falls back.
struct Injection {
  std::string subject;
  std::string attribute;
  double start = 0.0;
  double duration = 0.0;
  double depth = 0.0;
  InjectionShape shape = InjectionShape::kStep;

  double deficit_at(double t) const {
    if (t < start || t >= start + duration) return 0.0;
    switch (shape) {
      case InjectionShape::kStep:
        return depth;
      case InjectionShape::kRamp:
        return depth * (t - start) / duration;
      case InjectionShape::kSpike: {
        const double half = duration / 2.0;
        return depth * (1.0 - std::abs(t - (start + half)) / half);
      }
    }
    return 0.0;
  }
};

// One simulated series.  A target without its own baseline uses the
// scenario-wide one.
struct Target {
  std::string subject;
  std::string attribute;
  Orientation orientation = Orientation::kHigherIsBetter;
  std::optional<Baseline> baseline;
  bool clamp_at_zero = true;
};

struct Scenario {
  double duration = 0.0;
  double sample_period = 0.0;
  double noise_half_width = 0.0;
  Baseline baseline;
  std::vector<Target> targets;
  std::vector<Injection> injections;
};

// Expected detection and measurement outcome for one injection, derived
// from the noiseless samples on the exact generation grid.
struct GroundTruthEpisode {
  std::size_t injection = 0;
  double t_start = 0.0;
  double t_end = 0.0;
  ResilienceMetrics expected;
};

struct TargetTrace {
  SampleSeries trace;
  // Noiseless baseline shifted one noise half-width in the benign
  // direction, on the trace grid; the benchmark the trace is judged by.
  SampleSeries reference;
  Orientation orientation = Orientation::kHigherIsBetter;
  std::vector<GroundTruthEpisode> episodes;
};

struct SimulationResult {
  std::vector<TargetTrace> targets;
};

namespace detail {

inline std::uint64_t fnv1a(std::uint64_t h, const std::string& s) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// Per-target stream seed, stable under reordering of other targets.
inline std::uint64_t target_seed(std::uint64_t seed, const Target& t) {
  std::uint64_t h = fnv1a(14695981039346656037ull, t.subject);
  h = fnv1a(h ^ 0xff, t.attribute);
  return seed * 0x9e3779b97f4a7c15ull ^ h;
}

// Top 53 bits of the generator output, for identical doubles on every
// platform.
inline double uniform01(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

}  // namespace detail

inline void validate_scenario(const Scenario& sc) {
  if (!(sc.sample_period > 0.0)) {
    throw InputError("scenario sample_period must be positive");
  }
  if (!(sc.duration >= sc.sample_period)) {
    throw InputError("scenario duration must cover one sample_period");
  }
  if (sc.noise_half_width < 0.0) {
    throw InputError("scenario noise_half_width must be nonnegative");
  }
  const auto check_baseline = [](const Baseline& b) {
    if (b.kind == Baseline::Kind::kSeasonal && !(b.period > 0.0)) {
      throw InputError("seasonal baseline needs a positive period");
    }
  };
  check_baseline(sc.baseline);
  for (const Target& t : sc.targets) {
    if (t.subject.empty() || t.attribute.empty()) {
      throw InputError("scenario target needs a subject and an attribute");
    }
    if (t.baseline) check_baseline(*t.baseline);
    for (const Target& other : sc.targets) {
      if (&other != &t && other.subject == t.subject &&
          other.attribute == t.attribute) {
        throw InputError("duplicate scenario target " + t.subject + "/" +
                         t.attribute);
      }
    }
  }
  for (std::size_t i = 0; i < sc.injections.size(); ++i) {
    const Injection& inj = sc.injections[i];
    const std::string label = "injection " + std::to_string(i);
    if (!(inj.depth > 0.0)) {
      throw InputError(label + " needs a positive depth");
    }
    if (!(inj.duration > 0.0)) {
      throw InputError(label + " needs a positive duration");
    }
    if (inj.start < 0.0 || inj.start + inj.duration > sc.duration) {
      throw InputError(label + " must lie within the scenario duration");
    }
    bool matched = false;
    for (const Target& t : sc.targets) {
      matched = matched || (t.subject == inj.subject &&
                            t.attribute == inj.attribute);
    }
    if (!matched) {
      throw InputError(label + " names unknown target " + inj.subject +
                       "/" + inj.attribute);
    }
    // Overlap would make the episode-to-injection attribution ambiguous.
    for (std::size_t k = 0; k < i; ++k) {
      const Injection& other = sc.injections[k];
      if (other.subject != inj.subject || other.attribute != inj.attribute) {
        continue;
      }
      if (inj.start < other.start + other.duration &&
          other.start < inj.start + inj.duration) {
        throw InputError(label + " overlaps injection " +
                         std::to_string(k) + " on " + inj.subject + "/" +
                         inj.attribute);
      }
    }
  }
}

inline SimulationResult generate(const Scenario& sc, std::uint64_t seed) {
  validate_scenario(sc);
  const std::size_t n = static_cast<std::size_t>(
      std::floor(sc.duration / sc.sample_period + 1e-9)) + 1;

  SimulationResult result;
  for (const Target& target : sc.targets) {
    const Baseline& baseline =
        target.baseline ? *target.baseline : sc.baseline;
    const bool higher = target.orientation == Orientation::kHigherIsBetter;
    const double margin =
        higher ? -sc.noise_half_width : sc.noise_half_width;
    std::mt19937_64 gen(detail::target_seed(seed, target));

    TargetTrace out;
    out.orientation = target.orientation;
    out.trace = SampleSeries(target.subject, target.attribute);
    out.reference = SampleSeries(target.subject, target.attribute);

    std::vector<double> clean(n);
    std::vector<double> reference(n);
    std::vector<double> grid(n);
    std::vector<std::size_t> cause(n, sc.injections.size());
    for (std::size_t k = 0; k < n; ++k) {
      const double t = static_cast<double>(k) * sc.sample_period;
      const double base = baseline.at(t);
      double deficit = 0.0;
      for (std::size_t i = 0; i < sc.injections.size(); ++i) {
        const Injection& inj = sc.injections[i];
        if (inj.subject != target.subject ||
            inj.attribute != target.attribute) {
          continue;
        }
        const double d = inj.deficit_at(t);
        if (d > 0.0) {
          deficit = d;
          cause[k] = i;
        }
      }
      double value = higher ? base - deficit : base + deficit;
      if (target.clamp_at_zero) value = std::max(0.0, value);
      double noisy = value;
      if (sc.noise_half_width > 0.0) {
        noisy += (2.0 * detail::uniform01(gen) - 1.0) * sc.noise_half_width;
        if (target.clamp_at_zero) noisy = std::max(0.0, noisy);
      }
      grid[k] = t;
      clean[k] = value;
      reference[k] = base + margin;
      out.trace.append(t, noisy);
      out.reference.append(t, reference[k]);
    }

    // Ground truth: scan the noiseless values against the reference with
    // the same strict-violation, first-clean-sample-recovers convention
    // the detector uses, accumulating loss sample by sample.
    std::vector<double> dev(n);
    for (std::size_t k = 0; k < n; ++k) {
      dev[k] = higher ? reference[k] - clean[k] : clean[k] - reference[k];
    }
    std::size_t k = 0;
    while (k < n) {
      if (!(dev[k] > 0.0)) {
        ++k;
        continue;
      }
      std::size_t last = k;
      while (last + 1 < n && dev[last + 1] > 0.0) ++last;
      GroundTruthEpisode ep;
      ep.injection = cause[k];
      ep.t_start = grid[k];
      ep.expected.unrecovered = last + 1 == n;
      const std::size_t end = ep.expected.unrecovered ? last : last + 1;
      ep.t_end = grid[end];
      ep.expected.recovery_rapidity = ep.t_end - ep.t_start;
      for (std::size_t i = k; i <= last; ++i) {
        ep.expected.disruption_tolerance =
            std::max(ep.expected.disruption_tolerance, dev[i]);
        if (grid[i] < ep.t_end) {
          ep.expected.performance_loss += (grid[i + 1] - grid[i]) * dev[i];
        }
      }
      out.episodes.push_back(std::move(ep));
      k = last + 2;
    }
    result.targets.push_back(std::move(out));
  }
  return result;
}

namespace detail {

inline Baseline parse_baseline(const jsonx::json& j,
                               const std::string& path) {
  jsonx::object(j, path);
  const std::string kind = jsonx::req_string(j, "kind", path);
  if (kind == "constant") {
    jsonx::check_keys(j, path, {"kind", "value"});
    return Baseline::constant(jsonx::req_double(j, "value", path));
  }
  if (kind == "seasonal") {
    jsonx::check_keys(j, path, {"kind", "base", "amplitude", "period"});
    return Baseline::seasonal(jsonx::req_double(j, "base", path),
                              jsonx::req_double(j, "amplitude", path),
                              jsonx::req_double(j, "period", path));
  }
  throw ParseError(path + ".kind: unknown baseline kind \"" + kind + "\"");
}

inline jsonx::json baseline_to_json(const Baseline& b) {
  jsonx::json j = jsonx::json::object();
  if (b.kind == Baseline::Kind::kConstant) {
    j["kind"] = "constant";
    j["value"] = b.value;
  } else {
    j["kind"] = "seasonal";
    j["base"] = b.base;
    j["amplitude"] = b.amplitude;
    j["period"] = b.period;
  }
  return j;
}

inline InjectionShape parse_shape(const std::string& s,
                                  const std::string& path) {
  if (s == "step") return InjectionShape::kStep;
  if (s == "ramp") return InjectionShape::kRamp;
  if (s == "spike") return InjectionShape::kSpike;
  throw ParseError(path + ": unknown injection shape \"" + s + "\"");
}

}  // namespace detail

inline Scenario load_scenario(const std::string& text) {
  const jsonx::json j = jsonx::parse(text, "scenario file");
  jsonx::object(j, "$");
  jsonx::check_keys(j, "$",
                    {"format", "duration", "sample_period",
                     "noise_half_width", "baseline", "targets",
                     "injections"});
  jsonx::expect_format(j, "msr-scenario/1", "$");

  Scenario sc;
  sc.duration = jsonx::req_double(j, "duration", "$");
  sc.sample_period = jsonx::req_double(j, "sample_period", "$");
  sc.noise_half_width =
      jsonx::opt_double(j, "noise_half_width", "$").value_or(0.0);
  sc.baseline = detail::parse_baseline(jsonx::member(j, "baseline", "$"),
                                       "$.baseline");

  const jsonx::json& targets =
      jsonx::array(jsonx::member(j, "targets", "$"), "$.targets");
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const std::string path = "$.targets[" + std::to_string(i) + "]";
    const jsonx::json& t = jsonx::object(targets[i], path);
    jsonx::check_keys(t, path,
                      {"subject", "attribute", "orientation", "baseline",
                       "clamp_at_zero"});
    Target target;
    target.subject = jsonx::req_string(t, "subject", path);
    target.attribute = jsonx::req_string(t, "attribute", path);
    const std::string orient = jsonx::req_string(t, "orientation", path);
    if (orient == "higher_is_better") {
      target.orientation = Orientation::kHigherIsBetter;
    } else if (orient == "lower_is_better") {
      target.orientation = Orientation::kLowerIsBetter;
    } else {
      throw ParseError(path + ".orientation: unknown orientation \"" +
                       orient + "\"");
    }
    if (t.find("baseline") != t.end()) {
      target.baseline =
          detail::parse_baseline(t["baseline"], path + ".baseline");
    }
    target.clamp_at_zero = jsonx::opt_bool(t, "clamp_at_zero", path, true);
    sc.targets.push_back(std::move(target));
  }

  const jsonx::json& injections =
      jsonx::array(jsonx::member(j, "injections", "$"), "$.injections");
  for (std::size_t i = 0; i < injections.size(); ++i) {
    const std::string path = "$.injections[" + std::to_string(i) + "]";
    const jsonx::json& inj = jsonx::object(injections[i], path);
    jsonx::check_keys(inj, path,
                      {"subject", "attribute", "start", "duration", "shape",
                       "depth"});
    Injection injection;
    injection.subject = jsonx::req_string(inj, "subject", path);
    injection.attribute = jsonx::req_string(inj, "attribute", path);
    injection.start = jsonx::req_double(inj, "start", path);
    injection.duration = jsonx::req_double(inj, "duration", path);
    injection.shape = detail::parse_shape(
        jsonx::req_string(inj, "shape", path), path + ".shape");
    injection.depth = jsonx::req_double(inj, "depth", path);
    sc.injections.push_back(std::move(injection));
  }

  validate_scenario(sc);
  return sc;
}

inline std::string save_scenario(const Scenario& sc) {
  jsonx::json j;
  j["format"] = "msr-scenario/1";
  j["duration"] = sc.duration;
  j["sample_period"] = sc.sample_period;
  if (sc.noise_half_width != 0.0) {
    j["noise_half_width"] = sc.noise_half_width;
  }
  j["baseline"] = detail::baseline_to_json(sc.baseline);
  jsonx::json targets = jsonx::json::array();
  for (const Target& t : sc.targets) {
    jsonx::json tj;
    tj["subject"] = t.subject;
    tj["attribute"] = t.attribute;
    tj["orientation"] = to_string(t.orientation);
    if (t.baseline) tj["baseline"] = detail::baseline_to_json(*t.baseline);
    if (!t.clamp_at_zero) tj["clamp_at_zero"] = false;
    targets.push_back(std::move(tj));
  }
  j["targets"] = std::move(targets);
  jsonx::json injections = jsonx::json::array();
  for (const Injection& inj : sc.injections) {
    jsonx::json ij;
    ij["subject"] = inj.subject;
    ij["attribute"] = inj.attribute;
    ij["start"] = inj.start;
    ij["duration"] = inj.duration;
    ij["shape"] = to_string(inj.shape);
    ij["depth"] = inj.depth;
    injections.push_back(std::move(ij));
  }
  j["injections"] = std::move(injections);
  return jsonx::dump_canonical(j);
}

inline Scenario load_scenario_file(const std::string& path) {
  try {
    return load_scenario(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

// Ground-truth sidecar ("msr-groundtruth/1") for external harnesses.
inline std::string save_ground_truth(const SimulationResult& result) {
  jsonx::json j;
  j["format"] = "msr-groundtruth/1";
  jsonx::json targets = jsonx::json::array();
  for (const TargetTrace& t : result.targets) {
    jsonx::json tj;
    tj["subject"] = t.trace.subject();
    tj["attribute"] = t.trace.attribute();
    jsonx::json eps = jsonx::json::array();
    for (const GroundTruthEpisode& ep : t.episodes) {
      jsonx::json ej;
      ej["injection"] = ep.injection;
      ej["t_start"] = ep.t_start;
      ej["t_end"] = ep.t_end;
      ej["disruption_tolerance"] = ep.expected.disruption_tolerance;
      ej["recovery_rapidity"] = ep.expected.recovery_rapidity;
      ej["performance_loss"] = ep.expected.performance_loss;
      if (ep.expected.unrecovered) ej["unrecovered"] = true;
      eps.push_back(std::move(ej));
    }
    tj["episodes"] = std::move(eps);
    targets.push_back(std::move(tj));
  }
  j["targets"] = std::move(targets);
  return jsonx::dump_canonical(j);
}

}  // namespace msr

#endif  // MSR_TRACE_SIM_HPP
