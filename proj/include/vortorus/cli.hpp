#pragma once

#include <string>

#include "vortorus/config.hpp"

namespace vortorus {

/// Integrate the scenario and write trajectory.csv (plus
/// circulations.csv when enabled) and metadata.json into cfg.out_dir.
/// Prints the final Hamiltonian drift.  Returns 0.
int cmd_simulate(const ScenarioConfig& cfg);

/// Write lambda2.csv, phi.csv, robin.csv, dr_norm.csv and metadata.json
/// into out_dir.  Returns 0.
int cmd_fields(const ScenarioConfig& cfg, const std::string& out_dir);

/// Run the invariant suite; a supplied scenario replaces the canned
/// conservation run.  The JSON report goes to stdout, or to json_path
/// with a one-line summary on stdout.  Returns 0 if every check passes,
/// 2 otherwise.
int cmd_verify(const ScenarioConfig* scenario, const std::string& json_path);

/// Run simulate once per value of a swept key.  vary is
/// KEY=START:STOP:STEPS with dotted KEY addressing into the config JSON;
/// values are spaced evenly and inclusive of both ends.  Each scenario
/// lands in out_dir/scenario_NNN and a manifest.json indexes them.
/// Returns 0.
int cmd_sweep(const std::string& config_path, const std::string& vary,
              const std::string& out_dir);

} // namespace vortorus
