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

#include <map>
#include <string>

#include "msr/evaluate.hpp"
#include "support/graph_gen.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

namespace {

using msr::GoalStatus;

TEST_CASE("propagation matches the rank oracle on random DAGs") {
  test_support::Rng rng(20260821);
  for (int round = 0; round < 500; ++round) {
    const auto c = test_support::random_refinement_case(rng, 10);
    const auto statuses = msr::propagate(c.graph, c.terminal);
    for (const auto& [id, status] : statuses) {
      INFO("round " << round << ", node " << id);
      CHECK(status == test_support::oracle_status(c.graph, c.terminal, id));
    }
  }
}

TEST_CASE("propagation is monotone in the terminal evidence") {
  // Retracting one terminal Violated raises that input in the order
  // violated < unknown < satisfied; every combinator is monotone, so no
  // node's status may drop.  In particular Satisfied stays Satisfied.
  test_support::Rng rng(7);
  for (int round = 0; round < 200; ++round) {
    auto c = test_support::random_refinement_case(rng, 8);
    std::string dropped;
    for (const auto& [id, st] : c.terminal) {
      if (st == GoalStatus::kViolated) {
        dropped = id;
        break;
      }
    }
    if (dropped.empty()) continue;
    const auto before = msr::propagate(c.graph, c.terminal);
    c.terminal.erase(dropped);
    const auto after = msr::propagate(c.graph, c.terminal);
    for (const auto& [id, was] : before) {
      INFO("round " << round << ", node " << id);
      if (was == GoalStatus::kSatisfied) {
        CHECK(after.at(id) == GoalStatus::kSatisfied);
      } else if (was == GoalStatus::kUnknown) {
        CHECK(after.at(id) != GoalStatus::kViolated);
      }
    }
  }
}

TEST_CASE("terminal statuses of unrefined nodes pass through untouched") {
  test_support::Rng rng(99);
  for (int round = 0; round < 100; ++round) {
    const auto c = test_support::random_refinement_case(rng, 10);
    const auto statuses = msr::propagate(c.graph, c.terminal);
    for (const auto& [id, status] : statuses) {
      bool refined = false;
      for (const msr::Edge& e : c.graph.edges()) {
        refined = refined || e.target == id;
      }
      if (refined) continue;
      const auto it = c.terminal.find(id);
      const GoalStatus expect =
          it == c.terminal.end() ? GoalStatus::kUnknown : it->second;
      INFO("round " << round << ", node " << id);
      CHECK(status == expect);
    }
  }
}

}  // namespace
