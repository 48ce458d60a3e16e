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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstddef>
#include <vector>

#include "msr/benchmark.hpp"
#include "msr/forecast.hpp"
#include "msr/types.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

namespace {

using msr::ForecastKind;
using msr::ForecastModel;
using msr::GridSpec;
using msr::SampleSeries;

SampleSeries series_of(const std::vector<double>& values, double t0 = 0.0,
                       double period = 1.0) {
  SampleSeries s("svc", "metric");
  for (std::size_t i = 0; i < values.size(); ++i) {
    s.append(t0 + static_cast<double>(i) * period, values[i]);
  }
  return s;
}

// One full period of a zero-trend seasonal signal.
std::vector<double> seasonal_pattern(std::size_t m) {
  std::vector<double> p;
  for (std::size_t i = 0; i < m; ++i) {
    p.push_back(100.0 + 10.0 * std::sin(2.0 * M_PI *
                                        static_cast<double>(i) /
                                        static_cast<double>(m)));
  }
  return p;
}

TEST_CASE("ewma of a constant series forecasts the constant") {
  const auto m = msr::fit_ewma(series_of({7, 7, 7, 7}), 0.3);
  CHECK(m.level() == 7.0);
  CHECK(m.training_sse() == 0.0);
  CHECK(m.forecast_step(1) == 7.0);
  CHECK(m.forecast_step(50) == 7.0);
}

TEST_CASE("ewma with alpha one repeats the last observation") {
  const auto m = msr::fit_ewma(series_of({3, 9, 4, 12}), 1.0);
  CHECK(m.level() == 12.0);
}

TEST_CASE("ewma halves its way between two observations") {
  const auto m = msr::fit_ewma(series_of({10, 20}), 0.5);
  CHECK(m.level() == 15.0);
  CHECK(m.value_at(1.0) == 15.0);
  CHECK(m.value_at(9999.0) == 15.0);
}

TEST_CASE("ewma rejects empty series and out-of-range alpha") {
  CHECK_THROWS_AS(msr::fit_ewma(SampleSeries("s", "a"), 0.5),
                  msr::InputError);
  CHECK_THROWS_AS(msr::fit_ewma(series_of({1}), 0.0), msr::InputError);
  CHECK_THROWS_AS(msr::fit_ewma(series_of({1}), 1.5), msr::InputError);
}

TEST_CASE("holt-winters reproduces a constant series exactly") {
  const auto m =
      msr::fit_holt_winters(series_of(std::vector<double>(12, 42.0)), 0.4,
                            0.2, 0.3, 4);
  CHECK(m.level() == 42.0);
  CHECK(m.trend() == 0.0);
  for (double s : m.seasonal()) CHECK(s == 0.0);
  CHECK(m.training_sse() == 0.0);
  for (std::size_t h = 1; h <= 8; ++h) CHECK(m.forecast_step(h) == 42.0);
}

TEST_CASE("holt-winters needs two seasons and uniform sampling") {
  CHECK_THROWS_AS(msr::fit_holt_winters(series_of({1, 2, 3}), 0.5, 0.5, 0.5, 2),
                  msr::InputError);
  SampleSeries jittered("svc", "metric");
  jittered.append(0, 1);
  jittered.append(1, 2);
  jittered.append(2.5, 3);
  jittered.append(3.5, 4);
  CHECK_THROWS_AS(msr::fit_holt_winters(jittered, 0.5, 0.5, 0.5, 2),
                  msr::InputError);
  CHECK_THROWS_AS(
      msr::fit_holt_winters(series_of(std::vector<double>(8, 1.0)), 0.5, 0.5,
                            0.5, 1),
      msr::InputError);
}

TEST_CASE("a periodic zero-trend series is a fixed point of holt-winters") {
  const std::size_t m = 6;
  const auto pattern = seasonal_pattern(m);
  std::vector<double> values;
  for (int season = 0; season < 5; ++season) {
    values.insert(values.end(), pattern.begin(), pattern.end());
  }
  const auto model = msr::fit_holt_winters(series_of(values), 0.5, 0.3, 0.4, m);
  // Init is exact for this signal, so every one-step residual is zero and
  // forecasts continue the pattern.
  CHECK(model.training_sse() < 1e-18);
  for (std::size_t h = 1; h <= 2 * m; ++h) {
    const double expected = pattern[(values.size() - 1 + h) % m];
    CHECK(model.forecast_step(h) == Catch::Approx(expected).margin(1e-9));
  }
}

TEST_CASE("holt-winters tracks a linear ramp after warm-up") {
  const std::size_t m = 4;
  std::vector<double> values;
  for (std::size_t i = 0; i < 30 * m; ++i) {
    values.push_back(5.0 + 2.0 * static_cast<double>(i));
  }
  const auto model = msr::fit_holt_winters(series_of(values), 0.8, 0.4, 0.5, m);
  for (std::size_t h = 1; h <= m; ++h) {
    const double expected =
        5.0 + 2.0 * static_cast<double>(values.size() - 1 + h);
    CHECK(model.forecast_step(h) ==
          Catch::Approx(expected).epsilon(1e-3));
  }
}

TEST_CASE("holt-winters agrees with an independent reference") {
  test_support::Rng rng(20260821);
  for (int round = 0; round < 25; ++round) {
    const std::size_t m = 3 + rng.below(6);
    const std::size_t seasons = 3 + rng.below(4);
    std::vector<double> values;
    for (std::size_t i = 0; i < seasons * m; ++i) {
      values.push_back(50.0 + 20.0 * rng.uniform01());
    }
    const double alpha = 0.05 + 0.95 * rng.uniform01();
    const double beta = 0.05 + 0.95 * rng.uniform01();
    const double gamma = 0.05 + 0.95 * rng.uniform01();

    const auto model =
        msr::fit_holt_winters(series_of(values), alpha, beta, gamma, m);
    double ref_sse = 0.0;
    const auto ref = test_support::reference_holt_winters(
        values, m, alpha, beta, gamma, 2 * m, &ref_sse);
    CHECK(model.training_sse() == Catch::Approx(ref_sse).margin(1e-9));
    for (std::size_t h = 1; h <= 2 * m; ++h) {
      CHECK(model.forecast_step(h) ==
            Catch::Approx(ref[h - 1]).margin(1e-9));
    }
  }
}

TEST_CASE("value_at holds forecasts between grid points") {
  const std::size_t m = 4;
  const auto pattern = seasonal_pattern(m);
  std::vector<double> values;
  for (int season = 0; season < 3; ++season) {
    values.insert(values.end(), pattern.begin(), pattern.end());
  }
  const auto model =
      msr::fit_holt_winters(series_of(values, 0.0, 2.0), 0.5, 0.5, 0.5, m);
  const double t_last = model.training_end();
  CHECK(model.value_at(t_last) == model.forecast_step(1));
  CHECK(model.value_at(t_last + 1.0) == model.forecast_step(1));
  CHECK(model.value_at(t_last + 2.0) == model.forecast_step(1));
  CHECK(model.value_at(t_last + 3.9) == model.forecast_step(1));
  CHECK(model.value_at(t_last + 4.0) == model.forecast_step(2));
  CHECK(model.value_at(t_last + 9.0) == model.forecast_step(4));
  CHECK_THROWS_AS(model.value_at(t_last - 0.5), msr::EvalError);
}

TEST_CASE("the benchmark wrapper matches direct model evaluation") {
  const auto pattern = seasonal_pattern(5);
  std::vector<double> values;
  for (int season = 0; season < 4; ++season) {
    values.insert(values.end(), pattern.begin(), pattern.end());
  }
  const auto model = msr::fit_holt_winters(series_of(values), 0.6, 0.2, 0.2, 5);
  const auto bench = msr::Benchmark::model(model);
  for (double t = model.training_end(); t < model.training_end() + 12.0;
       t += 0.7) {
    CHECK(bench.value_at(t) == model.value_at(t));
  }
}

TEST_CASE("grid_fit with a singleton grid is the direct fit") {
  const auto pattern = seasonal_pattern(4);
  std::vector<double> values;
  for (int season = 0; season < 4; ++season) {
    values.insert(values.end(), pattern.begin(), pattern.end());
  }
  GridSpec grid;
  grid.kind = ForecastKind::kHoltWintersAdditive;
  grid.season_length = 4;
  grid.alphas = {0.5};
  grid.betas = {0.5};
  grid.gammas = {0.5};
  const auto picked = msr::grid_fit(series_of(values), grid);
  const auto direct = msr::fit_holt_winters(series_of(values), 0.5, 0.5, 0.5, 4);
  CHECK(picked.training_sse() == direct.training_sse());
  CHECK(picked.level() == direct.level());
  CHECK(picked.trend() == direct.trend());
  CHECK(picked.seasonal() == direct.seasonal());
}

TEST_CASE("grid_fit minimizes one-step error over the whole grid") {
  test_support::Rng rng(99);
  const std::size_t m = 5;
  std::vector<double> values;
  for (std::size_t i = 0; i < 6 * m; ++i) {
    values.push_back(
        80.0 +
        15.0 * std::sin(2.0 * M_PI * static_cast<double>(i % m) /
                        static_cast<double>(m)) +
        2.0 * rng.uniform01());
  }
  const auto series = series_of(values);
  const auto picked = msr::grid_fit(series, m, 0.25);
  const auto candidates = msr::uniform_grid(0.25);
  for (double a : candidates) {
    for (double b : candidates) {
      for (double g : candidates) {
        const auto other = msr::fit_holt_winters(series, a, b, g, m);
        CHECK(picked.training_sse() <= other.training_sse());
      }
    }
  }
}

TEST_CASE("grid_fit breaks ties toward the smallest parameters") {
  // On a constant series every parameter triple has zero error.
  const auto series = series_of(std::vector<double>(12, 5.0));
  const auto picked = msr::grid_fit(series, 3, 0.5);
  const auto* params =
      std::get_if<msr::HoltWintersParams>(&picked.params());
  REQUIRE(params != nullptr);
  CHECK(params->alpha == 0.5);
  CHECK(params->beta == 0.5);
  CHECK(params->gamma == 0.5);
}

TEST_CASE("uniform_grid covers (0, 1] without overshooting") {
  const auto g = msr::uniform_grid(0.2);
  REQUIRE(g.size() == 5);
  CHECK(g.front() == 0.2);
  CHECK(g.back() == 1.0);
  CHECK_THROWS_AS(msr::uniform_grid(0.0), msr::InputError);
  CHECK_THROWS_AS(msr::uniform_grid(1.5), msr::InputError);
}

TEST_CASE("restore round-trips a fitted model") {
  const auto pattern = seasonal_pattern(4);
  std::vector<double> values;
  for (int season = 0; season < 3; ++season) {
    values.insert(values.end(), pattern.begin(), pattern.end());
  }
  const auto model = msr::fit_holt_winters(series_of(values), 0.7, 0.1, 0.2, 4);
  const auto copy = ForecastModel::restore(model.state());
  for (std::size_t h = 1; h <= 8; ++h) {
    CHECK(copy.forecast_step(h) == model.forecast_step(h));
  }
  CHECK(copy.training_sse() == model.training_sse());
}

TEST_CASE("restore validates shape and ranges") {
  auto st = msr::fit_ewma(series_of({1, 2, 3}), 0.5).state();
  st.seasonal = {1.0};
  CHECK_THROWS_AS(ForecastModel::restore(st), msr::InputError);

  auto hw = msr::fit_holt_winters(series_of(std::vector<double>(8, 1.0)), 0.5,
                                  0.5, 0.5, 4)
                .state();
  hw.seasonal.pop_back();
  CHECK_THROWS_AS(ForecastModel::restore(hw), msr::InputError);
}

}  // namespace
