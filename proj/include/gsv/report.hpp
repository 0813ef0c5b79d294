#pragma once

#include <string>

#include <json.hpp>

#include "gsv/scenario.hpp"

namespace gsv {

struct RunOptions {
  bool timing = false;   // wall-clock timing breaks byte-for-byte determinism
  std::size_t hom_cap = 32;
  std::uint64_t search_bound = kDefaultSearchBound;

  static RunOptions from_env();
};

struct RunResult {
  nlohmann::ordered_json report;
  int exit_code = 0;  // 0: all meta-verdicts satisfied, 1: some violated
};

/// Executes the selected suites in dependency order. Two-sided claims are
/// encoded as meta-verdicts: a suite whose failure occurs exactly where the
/// criterion predicts it still satisfies its meta-verdict.
RunResult run_scenario(const Scenario& sc, const RunOptions& opt = RunOptions::from_env());

}  // namespace gsv
