/*
   Copyright 2026 The fclt Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fclt/experiment_config.hpp"
#include "fclt/report.hpp"
#include "fclt/step_path.hpp"

namespace fclt {

struct ExperimentResult {
  std::vector<ReportRow> rows;
  std::vector<CheckResult> checks;
  /// Optional per-replica path dumps (filled when dump_paths is set).
  std::vector<std::pair<std::string, std::string>> path_dumps;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

struct RunOptions {
  unsigned workers = 0;     ///< 0 = hardware default
  bool dump_paths = false;  ///< emit per-replica StepPath CSVs
};

/// Registered experiment names, in registry order.
std::vector<std::string> experiment_names();

/// Dispatches to the experiment named in the config.
ExperimentResult run_experiment(const ExperimentConfig& config,
                                const RunOptions& options = {});

// The individual experiments (exposed for tests).
ExperimentResult exp_marginal_convergence(const ExperimentConfig& config,
                                          const RunOptions& options = {});
ExperimentResult exp_j1_vs_m1(const ExperimentConfig& config,
                              const RunOptions& options = {});
ExperimentResult exp_truncation_gap(const ExperimentConfig& config,
                                    const RunOptions& options = {});
ExperimentResult exp_maximal_inequality(const ExperimentConfig& config,
                                        const RunOptions& options = {});
ExperimentResult exp_condition_abi(const ExperimentConfig& config,
                                   const RunOptions& options = {});
ExperimentResult exp_anticluster(const ExperimentConfig& config,
                                 const RunOptions& options = {});
ExperimentResult exp_addition_continuity(const ExperimentConfig& config,
                                         const RunOptions& options = {});

/// Loads the config file, runs the experiment, writes `<experiment>.csv`
/// and `summary.json` into output_dir (no partial files on config errors).
/// Exit codes: 0 success, 1 failed checks or crash, 2 config error.
int run_from_file(const std::string& config_path,
                  const std::string& output_dir_override = "",
                  const RunOptions& options = {});

/// Fast deterministic self-checks (no Monte Carlo); returns per-check
/// results and is wired to `fclt selftest`.
std::vector<CheckResult> selftest();

}  // namespace fclt
