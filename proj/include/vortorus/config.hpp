#pragma once

#include <array>
#include <string>
#include <vector>

#include "vortorus/dynamics.hpp"
#include "vortorus/fields.hpp"
#include "vortorus/geometry.hpp"

#include "json.hpp"

namespace vortorus {

/// Fully resolved scenario description: lattice, conformal spec, grid,
/// initial state, dynamics settings, output directory.  Defaults are the
/// flat square torus with eta_0 = 0, rk4, dt = 1e-3, T = 10, 128x128.
struct ScenarioConfig {
    std::array<double, 4> lattice_raw{1.0, 0.0, 0.0, 1.0};
    LatticeBasis lat; // normalized to unit volume
    ConformalSpec conformal;
    int N = 128;
    int M = 128;
    double x0 = 0.3;
    double y0 = 0.7;
    double A0 = 0.0;
    double B0 = 0.0;
    DynamicsConfig dyn;
    std::string out_dir = "out";
    std::vector<std::string> warnings; // e.g. lattice rescale notes
};

/// Parse and validate a config JSON value.  Unknown keys are rejected at
/// every level (ValidationError); value violations raise ValidationError
/// naming the invariant.
ScenarioConfig parse_config(const nlohmann::json& j);

/// Raw JSON of a config file, before validation.  Shared by load_config
/// and parameter sweeps (which patch one key per scenario).  Throws
/// ParseError (with the parser's position diagnostics) for malformed
/// JSON or an unreadable file.
nlohmann::json load_config_json(const std::string& path);

/// load_config_json followed by parse_config.
ScenarioConfig load_config(const std::string& path);

/// The fully resolved configuration (defaults applied) as JSON, as it is
/// recorded in output metadata.
nlohmann::json config_to_json(const ScenarioConfig& cfg);

const char* mode_name(Mode m);
const char* integrator_name(Integrator i);

} // namespace vortorus
