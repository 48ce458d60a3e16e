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

#ifndef MSR_FORECAST_HPP
#define MSR_FORECAST_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "msr/errors.hpp"
#include "msr/types.hpp"

namespace msr {

enum class ForecastKind {
  kEwma,
  kHoltWintersAdditive,
};

class ForecastModel;

inline const char* to_string(ForecastKind k) {
  return k == ForecastKind::kEwma ? "ewma" : "holt_winters_additive";
}

// Smoothing parameters.  All parameters live in (0, 1]; season_length is the
// number of samples per season, at least 2.
struct EwmaParams {
  double alpha = 0.5;
};

struct HoltWintersParams {
  double alpha = 0.5;
  double beta = 0.1;
  double gamma = 0.1;
  std::size_t season_length = 0;
};

namespace detail {

inline void check_param(double value, const char* name) {
  if (!(value > 0.0) || value > 1.0) {
    throw InputError(std::string("smoothing parameter ") + name + "=" +
                     std::to_string(value) + " outside (0, 1]");
  }
}

}  // namespace detail

// Flat snapshot of a fitted model, the unit of (de)serialization.  A model
// reconstructed from a snapshot behaves identically to the one that produced
// it; ForecastModel::restore() validates shape and ranges.
struct ForecastState {
  ForecastKind kind = ForecastKind::kEwma;
  std::variant<EwmaParams, HoltWintersParams> params;
  double level = 0.0;
  double trend = 0.0;
  std::vector<double> seasonal;
  double training_start = 0.0;
  double training_end = 0.0;
  std::size_t training_samples = 0;
  double sample_period = 0.0;
  double training_sse = 0.0;
  std::size_t sse_terms = 0;
  std::string subject;
  std::string attribute;
};

/**
 * A fitted forecasting model over a uniformly sampled series, usable as a
 * benchmark for timestamps at or after the end of its training window.
 *
 * EWMA keeps a single exponentially weighted level:
 *
 *   l_0 = y_0
 *   l_t = alpha * y_t + (1 - alpha) * l_{t-1}
 *
 * and forecasts the final level at every horizon.
 *
 * Additive Holt-Winters (triple exponential smoothing) keeps a level, a
 * trend, and one seasonal term per position in the season (m = season_length):
 *
 *   l_t = alpha * (y_t - s_{t-m}) + (1 - alpha) * (l_{t-1} + b_{t-1})
 *   b_t = beta  * (l_t - l_{t-1}) + (1 - beta)  * b_{t-1}
 *   s_t = gamma * (y_t - l_{t-1} - b_{t-1}) + (1 - gamma) * s_{t-m}
 *
 * initialized from the first two seasons:
 *
 *   l_{m-1} = (y_0 + ... + y_{m-1}) / m
 *   b_{m-1} = ((y_m - y_0) + ... + (y_{2m-1} - y_{m-1})) / m^2
 *   s_i     = y_i - l_{m-1}                       for i in [0, m)
 *
 * The h-step-ahead forecast from the end of training (last sample index
 * n - 1) is
 *
 *   f(h) = l + h * b + s[(n - 1 + h) mod m]
 *
 * One-step-ahead residuals accumulate into `training_sse` while fitting
 * (EWMA from the second sample on, Holt-Winters from sample m on); grid
 * search minimizes exactly this quantity.
 *
 * value_at() maps a continuous timestamp onto the forecast grid: forecasts
 * are held constant between grid points, with f(1) also covering the stretch
 * between the last training sample and the first grid point.  Timestamps
 * before the end of training are not evaluable.
 */
class ForecastModel {
 public:
  ForecastKind kind() const { return kind_; }
  const std::variant<EwmaParams, HoltWintersParams>& params() const {
    return params_;
  }

  double level() const { return level_; }
  double trend() const { return trend_; }
  const std::vector<double>& seasonal() const { return seasonal_; }

  double training_start() const { return training_start_; }
  double training_end() const { return training_end_; }
  std::size_t training_samples() const { return training_samples_; }
  double sample_period() const { return sample_period_; }
  double training_sse() const { return training_sse_; }
  std::size_t sse_terms() const { return sse_terms_; }

  const std::string& subject() const { return subject_; }
  const std::string& attribute() const { return attribute_; }

  ForecastState state() const {
    return ForecastState{kind_,           params_,
                         level_,          trend_,
                         seasonal_,       training_start_,
                         training_end_,   training_samples_,
                         sample_period_,  training_sse_,
                         sse_terms_,      subject_,
                         attribute_};
  }

  static ForecastModel restore(const ForecastState& st) {
    if (!std::isfinite(st.level) || !std::isfinite(st.trend) ||
        !std::isfinite(st.training_sse)) {
      throw InputError("forecast state contains non-finite numbers");
    }
    if (st.kind == ForecastKind::kEwma) {
      const auto* p = std::get_if<EwmaParams>(&st.params);
      if (p == nullptr) throw InputError("ewma state carries wrong params");
      detail::check_param(p->alpha, "alpha");
      if (!st.seasonal.empty()) {
        throw InputError("ewma state must not carry seasonal terms");
      }
    } else {
      const auto* p = std::get_if<HoltWintersParams>(&st.params);
      if (p == nullptr) {
        throw InputError("holt-winters state carries wrong params");
      }
      detail::check_param(p->alpha, "alpha");
      detail::check_param(p->beta, "beta");
      detail::check_param(p->gamma, "gamma");
      if (p->season_length < 2 || st.seasonal.size() != p->season_length) {
        throw InputError("holt-winters state has " +
                         std::to_string(st.seasonal.size()) +
                         " seasonal terms for season_length=" +
                         std::to_string(p->season_length));
      }
      for (double s : st.seasonal) {
        if (!std::isfinite(s)) {
          throw InputError("forecast state contains non-finite numbers");
        }
      }
      if (!(st.sample_period > 0.0)) {
        throw InputError("holt-winters state needs a positive sample_period");
      }
      if (st.training_samples == 0) {
        throw InputError("holt-winters state needs training_samples");
      }
    }
    ForecastModel m;
    m.kind_ = st.kind;
    m.params_ = st.params;
    m.level_ = st.level;
    m.trend_ = st.trend;
    m.seasonal_ = st.seasonal;
    m.training_start_ = st.training_start;
    m.training_end_ = st.training_end;
    m.training_samples_ = st.training_samples;
    m.sample_period_ = st.sample_period;
    m.training_sse_ = st.training_sse;
    m.sse_terms_ = st.sse_terms;
    m.subject_ = st.subject;
    m.attribute_ = st.attribute;
    return m;
  }

  // Forecast h steps past the end of training; h >= 1.
  double forecast_step(std::size_t h) const {
    if (h == 0) throw EvalError("forecast horizon must be at least 1 step");
    if (kind_ == ForecastKind::kEwma) return level_;
    const std::size_t m = seasonal_.size();
    const std::size_t idx = (training_samples_ - 1 + h) % m;
    return level_ + static_cast<double>(h) * trend_ + seasonal_[idx];
  }

  // Benchmark value at a continuous timestamp.  Throws EvalError for
  // timestamps before the end of training.
  double value_at(double t) const {
    if (t < training_end_) {
      throw EvalError("benchmark not evaluable at t=" + std::to_string(t) +
                      ": model trained through t=" +
                      std::to_string(training_end_));
    }
    if (kind_ == ForecastKind::kEwma) return level_;
    double h = std::floor((t - training_end_) / sample_period_ + 1e-9);
    if (h < 1.0) h = 1.0;
    return forecast_step(static_cast<std::size_t>(h));
  }

 private:
  friend ForecastModel fit_ewma(const SampleSeries&, double);
  friend ForecastModel fit_holt_winters(const SampleSeries&, double, double,
                                        double, std::size_t);

  ForecastModel() = default;

  ForecastKind kind_ = ForecastKind::kEwma;
  std::variant<EwmaParams, HoltWintersParams> params_;
  double level_ = 0.0;
  double trend_ = 0.0;
  std::vector<double> seasonal_;
  double training_start_ = 0.0;
  double training_end_ = 0.0;
  std::size_t training_samples_ = 0;
  double sample_period_ = 0.0;
  double training_sse_ = 0.0;
  std::size_t sse_terms_ = 0;
  std::string subject_;
  std::string attribute_;
};

namespace detail {

// Returns the common gap of a uniformly spaced series, or throws with the
// observed gap range.
inline double uniform_period(const SampleSeries& series) {
  const auto& s = series.samples();
  double period = s[1].t - s[0].t;
  double lo = period, hi = period;
  for (std::size_t i = 2; i < s.size(); ++i) {
    const double gap = s[i].t - s[i - 1].t;
    lo = std::min(lo, gap);
    hi = std::max(hi, gap);
  }
  if (hi - lo > 1e-9 * std::max(1.0, std::abs(period))) {
    throw InputError(
        "series " + series.subject() + "/" + series.attribute() +
        " is not uniformly sampled: gaps range from " + std::to_string(lo) +
        " to " + std::to_string(hi) + " over " +
        std::to_string(s.size()) + " samples");
  }
  return period;
}

}  // namespace detail

inline ForecastModel fit_ewma(const SampleSeries& series, double alpha) {
  detail::check_param(alpha, "alpha");
  if (series.empty()) {
    throw InputError("cannot fit ewma: series " + series.subject() + "/" +
                     series.attribute() + " is empty");
  }
  const auto& s = series.samples();
  ForecastModel m;
  m.kind_ = ForecastKind::kEwma;
  m.params_ = EwmaParams{alpha};
  m.level_ = s[0].v;
  for (std::size_t i = 1; i < s.size(); ++i) {
    const double err = s[i].v - m.level_;
    m.training_sse_ += err * err;
    ++m.sse_terms_;
    m.level_ = alpha * s[i].v + (1.0 - alpha) * m.level_;
  }
  m.training_start_ = s.front().t;
  m.training_end_ = s.back().t;
  m.training_samples_ = s.size();
  m.sample_period_ = s.size() > 1 ? (s.back().t - s.front().t) /
                                        static_cast<double>(s.size() - 1)
                                  : 0.0;
  m.subject_ = series.subject();
  m.attribute_ = series.attribute();
  return m;
}

inline ForecastModel fit_holt_winters(const SampleSeries& series, double alpha,
                                      double beta, double gamma,
                                      std::size_t season_length) {
  detail::check_param(alpha, "alpha");
  detail::check_param(beta, "beta");
  detail::check_param(gamma, "gamma");
  if (season_length < 2) {
    throw InputError("season_length=" + std::to_string(season_length) +
                     " too short: need at least 2 samples per season");
  }
  const auto& s = series.samples();
  const std::size_t m = season_length;
  if (s.size() < 2 * m) {
    throw InputError(
        "cannot fit holt-winters: series " + series.subject() + "/" +
        series.attribute() + " has " + std::to_string(s.size()) +
        " samples, need at least two full seasons (" + std::to_string(2 * m) +
        ")");
  }
  ForecastModel model;
  model.sample_period_ = detail::uniform_period(series);

  double level = 0.0;
  for (std::size_t i = 0; i < m; ++i) level += s[i].v;
  level /= static_cast<double>(m);

  double trend = 0.0;
  for (std::size_t i = 0; i < m; ++i) trend += s[m + i].v - s[i].v;
  trend /= static_cast<double>(m) * static_cast<double>(m);

  std::vector<double> seasonal(m);
  for (std::size_t i = 0; i < m; ++i) seasonal[i] = s[i].v - level;

  for (std::size_t t = m; t < s.size(); ++t) {
    const std::size_t idx = t % m;
    const double y = s[t].v;
    const double pred = level + trend + seasonal[idx];
    const double err = y - pred;
    model.training_sse_ += err * err;
    ++model.sse_terms_;
    const double new_level =
        alpha * (y - seasonal[idx]) + (1.0 - alpha) * (level + trend);
    const double new_trend =
        beta * (new_level - level) + (1.0 - beta) * trend;
    seasonal[idx] =
        gamma * (y - level - trend) + (1.0 - gamma) * seasonal[idx];
    level = new_level;
    trend = new_trend;
  }

  model.kind_ = ForecastKind::kHoltWintersAdditive;
  model.params_ = HoltWintersParams{alpha, beta, gamma, m};
  model.level_ = level;
  model.trend_ = trend;
  model.seasonal_ = std::move(seasonal);
  model.training_start_ = s.front().t;
  model.training_end_ = s.back().t;
  model.training_samples_ = s.size();
  model.subject_ = series.subject();
  model.attribute_ = series.attribute();
  return model;
}

// Candidate values {step, 2*step, ...} up to and including 1.0.
inline std::vector<double> uniform_grid(double step) {
  if (!(step > 0.0) || step > 1.0) {
    throw InputError("grid step " + std::to_string(step) +
                     " outside (0, 1]");
  }
  std::vector<double> grid;
  for (double v = step; v <= 1.0 + 1e-12; v += step) {
    grid.push_back(std::min(v, 1.0));
  }
  return grid;
}

// Candidate sets for grid_fit.  EWMA searches alphas only; Holt-Winters
// searches the cross product of alphas, betas and gammas.
struct GridSpec {
  ForecastKind kind = ForecastKind::kEwma;
  std::size_t season_length = 0;
  std::vector<double> alphas;
  std::vector<double> betas;
  std::vector<double> gammas;
};

// Exhaustive search over the candidate sets, minimizing one-step-ahead SSE.
// Ties break toward the smallest (alpha, beta, gamma) in lexicographic
// order, which the ascending scan below yields without extra bookkeeping.
inline ForecastModel grid_fit(const SampleSeries& series,
                              const GridSpec& grid) {
  if (grid.alphas.empty()) {
    throw InputError("grid_fit: no alpha candidates");
  }
  if (grid.kind == ForecastKind::kEwma) {
    std::optional<ForecastModel> best;
    for (double a : grid.alphas) {
      ForecastModel m = fit_ewma(series, a);
      if (!best || m.training_sse() < best->training_sse()) best = m;
    }
    return *best;
  }
  if (grid.betas.empty() || grid.gammas.empty()) {
    throw InputError("grid_fit: no beta or gamma candidates");
  }
  std::optional<ForecastModel> best;
  for (double a : grid.alphas) {
    for (double b : grid.betas) {
      for (double g : grid.gammas) {
        ForecastModel m =
            fit_holt_winters(series, a, b, g, grid.season_length);
        if (!best || m.training_sse() < best->training_sse()) best = m;
      }
    }
  }
  return *best;
}

inline ForecastModel grid_fit(const SampleSeries& series, ForecastKind kind,
                              std::size_t season_length, double step) {
  GridSpec g;
  g.kind = kind;
  g.season_length = season_length;
  g.alphas = uniform_grid(step);
  if (kind == ForecastKind::kHoltWintersAdditive) {
    g.betas = g.alphas;
    g.gammas = g.alphas;
  }
  return grid_fit(series, g);
}

// Holt-Winters grid search with the same candidate set {step, 2*step, ... 1}
// on all three parameters.
inline ForecastModel grid_fit(const SampleSeries& series,
                              std::size_t season_length, double step) {
  return grid_fit(series, ForecastKind::kHoltWintersAdditive, season_length,
                  step);
}

}  // namespace msr

#endif  // MSR_FORECAST_HPP
