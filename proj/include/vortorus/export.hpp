#pragma once

#include <string>

#include "vortorus/config.hpp"
#include "vortorus/dynamics.hpp"
#include "vortorus/fields.hpp"

#include "json.hpp"

namespace vortorus {

/// Shortest-exact decimal form of a double (%.17g); all CSV numbers go
/// through this so identical configs reproduce identical bytes.
std::string format_double(double v);

/// Grid CSV with header s,t,x,y,value, row-major over the grid.
void write_field_csv(const std::string& path, const ScalarField& f);

/// Trajectory CSV with header t,x,y,s,tlat,A,B,H,robinPart,etaPart.
void write_trajectory_csv(const std::string& path, const Trajectory& traj);

/// Companion CSV (t,circA,circB) for trajectories recorded with
/// circulation diagnostics.
void write_circulations_csv(const std::string& path, const Trajectory& traj);

void write_json(const std::string& path, const nlohmann::json& j);

/// Metadata recorded next to every output: tool version, the fully
/// resolved config, conventions (Robin constant, orientation), pinned
/// tolerances, and any load-time warnings.
nlohmann::json run_metadata(const ScenarioConfig& cfg);

} // namespace vortorus
