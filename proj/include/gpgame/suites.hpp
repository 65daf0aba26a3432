#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gpgame/game_engine.hpp"
#include "gpgame/generators.hpp"
#include "gpgame/report.hpp"

namespace gpgame {

struct SuiteOptions {
  std::uint64_t seed = 1;
  int vertex_cap = kDefaultVertexCap;
  std::uint64_t state_cap = kDefaultStateCap;
};

// Names of the verification suites, in canonical execution order.
const std::vector<std::string>& suite_names();

// Runs one suite. Cases whose graphs exceed the vertex cap are omitted from
// the report. Throws UnknownSuiteError for names outside suite_names() and
// BudgetError when a solve breaches the state cap.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts = {});

// Every suite, in suite_names() order.
std::vector<SuiteReport> run_all_suites(const SuiteOptions& opts = {});

}  // namespace gpgame
