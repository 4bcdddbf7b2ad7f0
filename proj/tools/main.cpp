#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "vortorus/cli.hpp"
#include "vortorus/config.hpp"
#include "vortorus/version.hpp"

int main(int argc, char** argv) {
    CLI::App app{"single-vortex flow on a flat torus with a conformal metric"};
    app.set_version_flag("--version", vortorus::kVersion);
    app.require_subcommand(1);

    std::string sim_config, sim_mode, sim_out;
    CLI::App* sim = app.add_subcommand("simulate", "integrate a scenario and export the trajectory");
    sim->add_option("--config", sim_config, "scenario JSON file")->required();
    sim->add_option("--mode", sim_mode, "override the dynamics mode")
        ->check(CLI::IsMember({"full", "incomplete"}));
    sim->add_option("--out", sim_out, "output directory (overrides the config)");

    std::string fld_config, fld_out;
    CLI::App* fld = app.add_subcommand("fields", "export conformal factor, potential, and Robin grids");
    fld->add_option("--config", fld_config, "scenario JSON file")->required();
    fld->add_option("--out", fld_out, "output directory")->required();

    std::string ver_config, ver_json;
    CLI::App* ver = app.add_subcommand("verify", "run the invariant suite");
    CLI::Option* ver_cfg_opt =
        ver->add_option("--config", ver_config, "scenario for the conservation check");
    ver->add_option("--json", ver_json, "write the report here instead of stdout");

    std::string swp_config, swp_vary, swp_out;
    CLI::App* swp = app.add_subcommand("sweep", "simulate across one swept parameter");
    swp->add_option("--config", swp_config, "base scenario JSON file")->required();
    swp->add_option("--vary", swp_vary, "KEY=START:STOP:STEPS (dotted KEY into the config)")
        ->required();
    swp->add_option("--out", swp_out, "output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*sim) {
            vortorus::ScenarioConfig cfg = vortorus::load_config(sim_config);
            if (!sim_mode.empty()) {
                cfg.dyn.mode =
                    sim_mode == "full" ? vortorus::Mode::full : vortorus::Mode::incomplete;
            }
            if (!sim_out.empty()) cfg.out_dir = sim_out;
            return vortorus::cmd_simulate(cfg);
        }
        if (*fld) {
            return vortorus::cmd_fields(vortorus::load_config(fld_config), fld_out);
        }
        if (*ver) {
            if (ver_cfg_opt->count() > 0) {
                const vortorus::ScenarioConfig cfg = vortorus::load_config(ver_config);
                return vortorus::cmd_verify(&cfg, ver_json);
            }
            return vortorus::cmd_verify(nullptr, ver_json);
        }
        if (*swp) {
            return vortorus::cmd_sweep(swp_config, swp_vary, swp_out);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
