#include "vortorus/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace vortorus {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                         const char* where) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        bool known = false;
        for (const char* a : allowed) {
            if (key == a) {
                known = true;
                break;
            }
        }
        if (!known) {
            throw ValidationError(std::string("unknown key \"") + key + "\" in " + where);
        }
    }
}

double require_number(const json& v, const char* what) {
    if (!v.is_number()) {
        throw ValidationError(std::string(what) + " must be a number");
    }
    return v.get<double>();
}

int require_int(const json& v, const char* what) {
    if (!v.is_number_integer()) {
        throw ValidationError(std::string(what) + " must be an integer");
    }
    return v.get<int>();
}

} // namespace

ScenarioConfig parse_config(const json& j) {
    if (!j.is_object()) {
        throw ValidationError("config root must be a JSON object");
    }
    reject_unknown_keys(j, {"lattice", "conformal", "grid", "initial", "dynamics", "output"},
                        "config root");

    ScenarioConfig cfg;

    if (j.contains("lattice")) {
        const auto& arr = j.at("lattice");
        if (!arr.is_array() || arr.size() != 4) {
            throw ValidationError("lattice must be an array of four numbers [ax, ay, bx, by]");
        }
        for (std::size_t i = 0; i < 4; ++i) {
            cfg.lattice_raw[i] = require_number(arr[i], "lattice entry");
        }
    }
    cfg.lat = make_lattice(cfg.lattice_raw[0], cfg.lattice_raw[1], cfg.lattice_raw[2],
                           cfg.lattice_raw[3]);
    const double det = cfg.lattice_raw[0] * cfg.lattice_raw[3] -
                       cfg.lattice_raw[1] * cfg.lattice_raw[2];
    if (std::abs(det - 1.0) > 1e-12) {
        char buf[128];
        std::snprintf(buf, sizeof(buf),
                      "lattice determinant %.17g != 1; generators rescaled by %.17g", det,
                      1.0 / std::sqrt(det));
        cfg.warnings.emplace_back(buf);
    }

    if (j.contains("conformal")) {
        const auto& arr = j.at("conformal");
        if (!arr.is_array()) {
            throw ValidationError("conformal must be an array of mode objects");
        }
        for (const auto& m : arr) {
            if (!m.is_object()) {
                throw ValidationError("conformal modes must be objects");
            }
            reject_unknown_keys(m, {"k1", "k2", "cosAmp", "sinAmp"}, "conformal mode");
            if (!m.contains("k1") || !m.contains("k2")) {
                throw ValidationError("conformal mode needs k1 and k2");
            }
            ConformalMode mode;
            mode.k1 = require_int(m.at("k1"), "conformal k1");
            mode.k2 = require_int(m.at("k2"), "conformal k2");
            if (m.contains("cosAmp")) mode.cosAmp = require_number(m.at("cosAmp"), "cosAmp");
            if (m.contains("sinAmp")) mode.sinAmp = require_number(m.at("sinAmp"), "sinAmp");
            cfg.conformal.modes.push_back(mode);
        }
    }

    if (j.contains("grid")) {
        const auto& g = j.at("grid");
        reject_unknown_keys(g, {"N", "M"}, "grid");
        if (g.contains("N")) cfg.N = require_int(g.at("N"), "grid N");
        if (g.contains("M")) cfg.M = require_int(g.at("M"), "grid M");
    }

    if (j.contains("initial")) {
        const auto& s = j.at("initial");
        reject_unknown_keys(s, {"x", "y", "A", "B"}, "initial");
        if (s.contains("x")) cfg.x0 = require_number(s.at("x"), "initial x");
        if (s.contains("y")) cfg.y0 = require_number(s.at("y"), "initial y");
        if (s.contains("A")) cfg.A0 = require_number(s.at("A"), "initial A");
        if (s.contains("B")) cfg.B0 = require_number(s.at("B"), "initial B");
    }

    if (j.contains("dynamics")) {
        const auto& d = j.at("dynamics");
        reject_unknown_keys(d, {"mode", "integrator", "dt", "T", "record_every", "circulations"},
                            "dynamics");
        if (d.contains("mode")) {
            if (!d.at("mode").is_string()) throw ValidationError("mode must be a string");
            const std::string m = d.at("mode").get<std::string>();
            if (m == "full") {
                cfg.dyn.mode = Mode::full;
            } else if (m == "incomplete") {
                cfg.dyn.mode = Mode::incomplete;
            } else {
                throw ValidationError("mode must be \"full\" or \"incomplete\"");
            }
        }
        if (d.contains("integrator")) {
            if (!d.at("integrator").is_string()) {
                throw ValidationError("integrator must be a string");
            }
            const std::string i = d.at("integrator").get<std::string>();
            if (i == "rk4") {
                cfg.dyn.integrator = Integrator::rk4;
            } else if (i == "implicit_midpoint") {
                cfg.dyn.integrator = Integrator::implicit_midpoint;
            } else {
                throw ValidationError("integrator must be \"rk4\" or \"implicit_midpoint\"");
            }
        }
        if (d.contains("dt")) cfg.dyn.dt = require_number(d.at("dt"), "dt");
        if (d.contains("T")) cfg.dyn.T = require_number(d.at("T"), "T");
        if (d.contains("record_every")) {
            cfg.dyn.record_every = require_int(d.at("record_every"), "record_every");
        }
        if (d.contains("circulations")) {
            if (!d.at("circulations").is_boolean()) {
                throw ValidationError("circulations must be a boolean");
            }
            cfg.dyn.circulations = d.at("circulations").get<bool>();
        }
    }

    if (j.contains("output")) {
        const auto& o = j.at("output");
        reject_unknown_keys(o, {"dir"}, "output");
        if (o.contains("dir")) {
            if (!o.at("dir").is_string()) throw ValidationError("output dir must be a string");
            cfg.out_dir = o.at("dir").get<std::string>();
        }
    }

    if (!(cfg.dyn.dt > 0.0)) throw ValidationError("dt > 0");
    if (!(cfg.dyn.T > 0.0)) throw ValidationError("T > 0");
    if (cfg.dyn.record_every < 1) throw ValidationError("record_every >= 1");
    // Grid sizes, mode band limits, and positivity are checked by the
    // field constructors; trigger them here so bad configs fail before
    // any real work happens.
    sample_conformal_factor(cfg.conformal, make_grid(cfg.lat, cfg.N, cfg.M));

    return cfg;
}

json load_config_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open config file: " + path);
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("config is not valid JSON: ") + e.what());
    }
}

ScenarioConfig load_config(const std::string& path) {
    return parse_config(load_config_json(path));
}

json config_to_json(const ScenarioConfig& cfg) {
    json modes = json::array();
    for (const auto& m : cfg.conformal.modes) {
        modes.push_back({{"k1", m.k1}, {"k2", m.k2}, {"cosAmp", m.cosAmp}, {"sinAmp", m.sinAmp}});
    }
    return json{
        {"lattice", {cfg.lat.ax, cfg.lat.ay, cfg.lat.bx, cfg.lat.by}},
        {"conformal", modes},
        {"grid", {{"N", cfg.N}, {"M", cfg.M}}},
        {"initial", {{"x", cfg.x0}, {"y", cfg.y0}, {"A", cfg.A0}, {"B", cfg.B0}}},
        {"dynamics",
         {{"mode", mode_name(cfg.dyn.mode)},
          {"integrator", integrator_name(cfg.dyn.integrator)},
          {"dt", cfg.dyn.dt},
          {"T", cfg.dyn.T},
          {"record_every", cfg.dyn.record_every},
          {"circulations", cfg.dyn.circulations}}},
        {"output", {{"dir", cfg.out_dir}}},
    };
}

const char* mode_name(Mode m) {
    return m == Mode::full ? "full" : "incomplete";
}

const char* integrator_name(Integrator i) {
    return i == Integrator::rk4 ? "rk4" : "implicit_midpoint";
}

} // namespace vortorus
