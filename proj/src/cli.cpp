#include "vortorus/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>

#include "vortorus/checks.hpp"
#include "vortorus/dynamics.hpp"
#include "vortorus/export.hpp"
#include "vortorus/fields.hpp"
#include "vortorus/version.hpp"

namespace vortorus {

namespace {

void run_scenario(const ScenarioConfig& cfg) {
    const TorusFields f = build_torus_fields(cfg.lat, cfg.conformal, cfg.N, cfg.M);
    const VortexState st0{wrap_point(cfg.lat, cfg.x0, cfg.y0), {cfg.A0, cfg.B0}};
    const Trajectory traj = integrate(st0, cfg.dyn, f);
    write_trajectory_csv(cfg.out_dir + "/trajectory.csv", traj);
    if (cfg.dyn.circulations) {
        write_circulations_csv(cfg.out_dir + "/circulations.csv", traj);
    }
    write_json(cfg.out_dir + "/metadata.json", run_metadata(cfg));
    const double drift = std::abs(traj.energies.back().H - traj.energies.front().H);
    std::cout << "final H drift: " << format_double(drift) << "\n";
}

} // namespace

int cmd_simulate(const ScenarioConfig& cfg) {
    run_scenario(cfg);
    return 0;
}

int cmd_fields(const ScenarioConfig& cfg, const std::string& out_dir) {
    const PeriodicGrid grid = make_grid(cfg.lat, cfg.N, cfg.M);
    const ScalarField lam2 = sample_conformal_factor(cfg.conformal, grid);
    ScalarField dev{grid, lam2.values};
    for (double& v : dev.values) v -= 1.0;
    const ScalarField phi = poisson_solve(dev);
    const ScalarField robin = robin_field(lam2);
    const CovectorField dR = differential(robin);
    ScalarField norm{grid, std::vector<double>(lam2.values.size(), 0.0)};
    for (std::size_t n = 0; n < norm.values.size(); ++n) {
        norm.values[n] = std::hypot(dR.cx[n], dR.cy[n]);
    }
    write_field_csv(out_dir + "/lambda2.csv", lam2);
    write_field_csv(out_dir + "/phi.csv", phi);
    write_field_csv(out_dir + "/robin.csv", robin);
    write_field_csv(out_dir + "/dr_norm.csv", norm);
    ScenarioConfig recorded = cfg;
    recorded.out_dir = out_dir;
    write_json(out_dir + "/metadata.json", run_metadata(recorded));
    return 0;
}

int cmd_verify(const ScenarioConfig* scenario, const std::string& json_path) {
    const std::vector<CheckResult> checks = all_checks(scenario);
    const nlohmann::json report = checks_report(checks);
    if (json_path.empty()) {
        std::cout << report.dump(2) << "\n";
    } else {
        write_json(json_path, report);
        const auto passed = std::count_if(checks.begin(), checks.end(),
                                          [](const CheckResult& c) { return c.pass; });
        std::cout << "verify: " << passed << "/" << checks.size() << " checks passed\n";
    }
    return all_passed(checks) ? 0 : 2;
}

int cmd_sweep(const std::string& config_path, const std::string& vary,
              const std::string& out_dir) {
    const auto eq = vary.find('=');
    if (eq == std::string::npos || eq == 0) {
        throw ValidationError("vary spec must be KEY=START:STOP:STEPS");
    }
    const std::string key = vary.substr(0, eq);
    double start = 0.0, stop = 0.0;
    int steps = 0;
    char trailing = 0;
    if (std::sscanf(vary.c_str() + eq + 1, "%lf:%lf:%d%c", &start, &stop, &steps,
                    &trailing) != 3) {
        throw ValidationError("vary spec must be KEY=START:STOP:STEPS");
    }
    if (steps < 1) throw ValidationError("vary STEPS >= 1");

    std::string path = "/" + key;
    std::replace(path.begin(), path.end(), '.', '/');
    const nlohmann::json::json_pointer ptr(path);

    const nlohmann::json base = load_config_json(config_path);
    nlohmann::json values = nlohmann::json::array();
    nlohmann::json dirs = nlohmann::json::array();
    for (int i = 0; i < steps; ++i) {
        const double v =
            steps == 1 ? start : start + (stop - start) * i / (steps - 1);
        nlohmann::json patched = base;
        // Integral values are stored as JSON integers so integer-typed
        // keys (grid sizes, record_every) can be swept too.
        if (std::nearbyint(v) == v && std::abs(v) < 1e15) {
            patched[ptr] = static_cast<long long>(v);
        } else {
            patched[ptr] = v;
        }
        ScenarioConfig cfg = parse_config(patched);
        char name[32];
        std::snprintf(name, sizeof(name), "scenario_%03d", i);
        cfg.out_dir = out_dir + "/" + name;
        run_scenario(cfg);
        values.push_back(v);
        dirs.push_back(name);
    }

    write_json(out_dir + "/manifest.json",
               nlohmann::json{{"tool", "vortorus"},
                              {"version", kVersion},
                              {"key", key},
                              {"values", std::move(values)},
                              {"scenarios", std::move(dirs)}});
    return 0;
}

} // namespace vortorus
