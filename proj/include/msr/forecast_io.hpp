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

// Fitted-model file format ("msr-benchmark/1").  The file captures the
// parameters, smoothing state, and training summary of a ForecastModel so
// that an evaluation run can reuse a fit without the training series.
// restore() revalidates everything on load, so a hand-edited file fails
// with the same messages a bad in-memory state would.

#ifndef MSR_FORECAST_IO_HPP
#define MSR_FORECAST_IO_HPP

#include <cmath>
#include <string>

#include "msr/forecast.hpp"
#include "msr/io_util.hpp"
#include "msr/json_util.hpp"

namespace msr {

inline std::string save_forecast(const ForecastModel& model) {
  const ForecastState st = model.state();
  jsonx::json j;
  j["format"] = "msr-benchmark/1";
  j["kind"] = to_string(st.kind);

  jsonx::json params = jsonx::json::object();
  if (st.kind == ForecastKind::kEwma) {
    params["alpha"] = std::get<EwmaParams>(st.params).alpha;
  } else {
    const auto& p = std::get<HoltWintersParams>(st.params);
    params["alpha"] = p.alpha;
    params["beta"] = p.beta;
    params["gamma"] = p.gamma;
    params["season_length"] = p.season_length;
  }
  j["params"] = std::move(params);

  jsonx::json state = jsonx::json::object();
  state["level"] = st.level;
  if (st.kind == ForecastKind::kHoltWintersAdditive) {
    state["trend"] = st.trend;
    state["seasonal"] = st.seasonal;
  }
  j["state"] = std::move(state);

  jsonx::json training = jsonx::json::object();
  training["start"] = st.training_start;
  training["end"] = st.training_end;
  training["samples"] = st.training_samples;
  training["sample_period"] = st.sample_period;
  training["sse"] = st.training_sse;
  training["sse_terms"] = st.sse_terms;
  j["training"] = std::move(training);

  if (!st.subject.empty() || !st.attribute.empty()) {
    j["series"] = {{"subject", st.subject}, {"attribute", st.attribute}};
  }

  return jsonx::dump_canonical(j);
}

inline ForecastModel load_forecast(const std::string& text) {
  const jsonx::json j = jsonx::parse(text, "benchmark file");
  jsonx::object(j, "$");
  jsonx::check_keys(j, "$",
                    {"format", "kind", "params", "state", "training",
                     "series"});
  jsonx::expect_format(j, "msr-benchmark/1", "$");

  ForecastState st;
  const std::string kind = jsonx::req_string(j, "kind", "$");
  if (kind == "ewma") {
    st.kind = ForecastKind::kEwma;
  } else if (kind == "holt_winters_additive") {
    st.kind = ForecastKind::kHoltWintersAdditive;
  } else {
    throw ParseError("$.kind: unknown forecast kind \"" + kind + "\"");
  }

  const jsonx::json& params =
      jsonx::object(jsonx::member(j, "params", "$"), "$.params");
  const jsonx::json& state =
      jsonx::object(jsonx::member(j, "state", "$"), "$.state");
  if (st.kind == ForecastKind::kEwma) {
    jsonx::check_keys(params, "$.params", {"alpha"});
    EwmaParams p;
    p.alpha = jsonx::req_double(params, "alpha", "$.params");
    st.params = p;
    jsonx::check_keys(state, "$.state", {"level"});
  } else {
    jsonx::check_keys(params, "$.params",
                      {"alpha", "beta", "gamma", "season_length"});
    HoltWintersParams p;
    p.alpha = jsonx::req_double(params, "alpha", "$.params");
    p.beta = jsonx::req_double(params, "beta", "$.params");
    p.gamma = jsonx::req_double(params, "gamma", "$.params");
    p.season_length = jsonx::req_count(params, "season_length", "$.params");
    st.params = p;
    jsonx::check_keys(state, "$.state", {"level", "trend", "seasonal"});
    st.trend = jsonx::req_double(state, "trend", "$.state");
    const jsonx::json& seasonal = jsonx::array(
        jsonx::member(state, "seasonal", "$.state"), "$.state.seasonal");
    for (std::size_t i = 0; i < seasonal.size(); ++i) {
      if (!seasonal[i].is_number()) {
        throw ParseError("$.state.seasonal[" + std::to_string(i) +
                         "] must be a number");
      }
      st.seasonal.push_back(seasonal[i].get<double>());
    }
  }
  st.level = jsonx::req_double(state, "level", "$.state");

  const jsonx::json& training =
      jsonx::object(jsonx::member(j, "training", "$"), "$.training");
  jsonx::check_keys(training, "$.training",
                    {"start", "end", "samples", "sample_period", "sse",
                     "sse_terms"});
  st.training_start = jsonx::req_double(training, "start", "$.training");
  st.training_end = jsonx::req_double(training, "end", "$.training");
  st.training_samples = jsonx::req_count(training, "samples", "$.training");
  st.sample_period =
      jsonx::req_double(training, "sample_period", "$.training");
  st.training_sse = jsonx::req_double(training, "sse", "$.training");
  st.sse_terms = jsonx::req_count(training, "sse_terms", "$.training");

  if (j.find("series") != j.end()) {
    const jsonx::json& series = jsonx::object(j["series"], "$.series");
    jsonx::check_keys(series, "$.series", {"subject", "attribute"});
    st.subject = jsonx::opt_string(series, "subject", "$.series");
    st.attribute = jsonx::opt_string(series, "attribute", "$.series");
  }

  try {
    return ForecastModel::restore(st);
  } catch (const InputError& e) {
    throw ParseError(std::string("benchmark file rejected: ") + e.what());
  }
}

inline ForecastModel load_forecast_file(const std::string& path) {
  try {
    return load_forecast(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline void save_forecast_file(const ForecastModel& model,
                               const std::string& path) {
  write_file(path, save_forecast(model));
}

}  // namespace msr

#endif  // MSR_FORECAST_IO_HPP
