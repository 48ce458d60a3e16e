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

#ifndef MSR_MSR_HPP
#define MSR_MSR_HPP

#include "msr/aggregate.hpp"
#include "msr/benchmark.hpp"
#include "msr/cli.hpp"
#include "msr/csv.hpp"
#include "msr/detection.hpp"
#include "msr/dot_export.hpp"
#include "msr/errors.hpp"
#include "msr/evaluate.hpp"
#include "msr/forecast.hpp"
#include "msr/forecast_io.hpp"
#include "msr/goal_graph.hpp"
#include "msr/markdown_export.hpp"
#include "msr/metrics.hpp"
#include "msr/model_io.hpp"
#include "msr/report.hpp"
#include "msr/trace_sim.hpp"
#include "msr/types.hpp"
#include "msr/validate.hpp"

#endif  // MSR_MSR_HPP
