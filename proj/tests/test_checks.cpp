#include "doctest.h"

#include <algorithm>
#include <string>
#include <vector>

#include "vortorus/checks.hpp"
#include "vortorus/config.hpp"

using namespace vortorus;

namespace {

const CheckResult* find_check(const std::vector<CheckResult>& checks,
                              const std::string& name) {
    const auto it = std::find_if(checks.begin(), checks.end(),
                                 [&](const CheckResult& c) { return c.name == name; });
    return it == checks.end() ? nullptr : &*it;
}

} // namespace

TEST_CASE("the full invariant suite passes with default options") {
    const auto checks = all_checks();
    CHECK(checks.size() >= 30);
    for (const auto& c : checks) {
        INFO(c.name, ": value ", c.value, " target ", c.target, " tol ", c.tolerance);
        CHECK(c.pass);
    }
    CHECK(all_passed(checks));
}

TEST_CASE("negative control: a flipped star sign is caught") {
    CheckOptions opt;
    opt.flip_star_sign = true;
    const auto checks = geometry_checks(opt);
    CHECK_FALSE(all_passed(checks));

    // The wrong orientation must trip exactly the checks that depend on it.
    const auto* quad = find_check(checks, "geometry.pqr_closed_vs_quadrature");
    REQUIRE(quad != nullptr);
    CHECK_FALSE(quad->pass);
    const auto* star = find_check(checks, "geometry.star_closed_forms");
    REQUIRE(star != nullptr);
    CHECK_FALSE(star->pass);

    // Checks with no star dependence still pass under the injected fault.
    const auto* periods = find_check(checks, "geometry.basis_periods");
    REQUIRE(periods != nullptr);
    CHECK(periods->pass);
}

TEST_CASE("dynamics checks accept a caller-supplied scenario") {
    const ScenarioConfig cfg = parse_config(
        {{"conformal", {{{"k1", 0}, {"k2", 1}, {"cosAmp", 0.4}}}},
         {"grid", {{"N", 64}, {"M", 64}}},
         {"initial", {{"x", 0.4}, {"y", 0.15}, {"A", 0.2}, {"B", 0.1}}},
         {"dynamics", {{"T", 1.0}}}});
    const auto checks = dynamics_checks(&cfg);
    const auto* drift = find_check(checks, "dynamics.hamiltonian_drift");
    REQUIRE(drift != nullptr);
    CHECK(drift->pass);
    CHECK(drift->note.find("supplied config") != std::string::npos);
}

TEST_CASE("all_passed folds the pass flags") {
    CHECK(all_passed({}));
    std::vector<CheckResult> checks(3);
    checks[0].pass = true;
    checks[1].pass = true;
    checks[2].pass = true;
    CHECK(all_passed(checks));
    checks[1].pass = false;
    CHECK_FALSE(all_passed(checks));
}

TEST_CASE("the JSON report carries every check and the suite notes") {
    const auto checks = annulus_checks();
    const nlohmann::json report = checks_report(checks);
    CHECK(report.at("tool") == "vortorus");
    CHECK(report.at("version").is_string());
    CHECK(report.at("all_pass") == true);
    REQUIRE(report.at("checks").size() == checks.size());
    for (const auto& entry : report.at("checks")) {
        CHECK(entry.contains("name"));
        CHECK(entry.contains("value"));
        CHECK(entry.contains("target"));
        CHECK(entry.contains("tolerance"));
        CHECK(entry.contains("pass"));
    }
    REQUIRE(report.at("notes").is_array());
    bool flagged = false;
    for (const auto& note : report.at("notes")) {
        if (note.get<std::string>().find("harmonic measure") != std::string::npos)
            flagged = true;
    }
    CHECK(flagged);
}
