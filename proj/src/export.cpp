#include "vortorus/export.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "vortorus/version.hpp"

namespace vortorus {

namespace {

std::ofstream open_out(const std::string& path) {
    const auto parent = std::filesystem::path(path).parent_path();
    if (!parent.empty()) {
        std::filesystem::create_directories(parent);
    }
    std::ofstream out(path, std::ios::binary); // binary: identical bytes everywhere
    if (!out) {
        throw Error("cannot open output file: " + path);
    }
    return out;
}

} // namespace

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_field_csv(const std::string& path, const ScalarField& f) {
    auto out = open_out(path);
    out << "s,t,x,y,value\n";
    const auto& g = f.grid;
    for (int i = 0; i < g.N; ++i) {
        const double s = static_cast<double>(i) / g.N;
        for (int j = 0; j < g.M; ++j) {
            const double t = static_cast<double>(j) / g.M;
            const double x = s * g.lat.ax + t * g.lat.bx;
            const double y = s * g.lat.ay + t * g.lat.by;
            out << format_double(s) << ',' << format_double(t) << ',' << format_double(x)
                << ',' << format_double(y) << ',' << format_double(f.at(i, j)) << '\n';
        }
    }
}

void write_trajectory_csv(const std::string& path, const Trajectory& traj) {
    auto out = open_out(path);
    out << "t,x,y,s,tlat,A,B,H,robinPart,etaPart\n";
    for (std::size_t n = 0; n < traj.times.size(); ++n) {
        const auto& st = traj.states[n];
        const auto& e = traj.energies[n];
        out << format_double(traj.times[n]) << ',' << format_double(st.p.x) << ','
            << format_double(st.p.y) << ',' << format_double(st.p.s) << ','
            << format_double(st.p.t) << ',' << format_double(st.eta.A) << ','
            << format_double(st.eta.B) << ',' << format_double(e.H) << ','
            << format_double(e.robinPart) << ',' << format_double(e.etaPart) << '\n';
    }
}

void write_circulations_csv(const std::string& path, const Trajectory& traj) {
    auto out = open_out(path);
    out << "t,circA,circB\n";
    for (std::size_t n = 0; n < traj.circulations.size(); ++n) {
        out << format_double(traj.times[n]) << ',' << format_double(traj.circulations[n].a)
            << ',' << format_double(traj.circulations[n].b) << '\n';
    }
}

void write_json(const std::string& path, const nlohmann::json& j) {
    auto out = open_out(path);
    out << j.dump(2) << '\n';
}

nlohmann::json run_metadata(const ScenarioConfig& cfg) {
    return nlohmann::json{
        {"tool", "vortorus"},
        {"version", kVersion},
        {"config", config_to_json(cfg)},
        {"conventions",
         {{"robin_additive_constant", 0.0},
          {"orientation", "counterclockwise fundamental domain; wedge quadrature is the record"},
          {"interpolation", "trigonometric (band-limited exact)"}}},
        {"tolerances",
         {{"equilibrium_residual", 1e-9},
          {"midpoint_fixed_point", 1e-12},
          {"poisson_zero_mean", 1e-10}}},
        {"warnings", cfg.warnings},
    };
}

} // namespace vortorus
