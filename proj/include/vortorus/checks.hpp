#pragma once

#include <string>
#include <vector>

#include "vortorus/config.hpp"

#include "json.hpp"

namespace vortorus {

/// One verification check: computed value against a target with a pinned
/// tolerance.  Lower-bound checks (value must exceed target) say so in
/// the note.
struct CheckResult {
    std::string name;
    double value = 0.0;
    double target = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string note;
};

/// Fault-injection knobs for negative-control tests.  Production callers
/// leave this defaulted; the test suite flips the star sign to prove the
/// orientation checks can fail.
struct CheckOptions {
    bool flip_star_sign = false;
};

std::vector<CheckResult> geometry_checks(const CheckOptions& opt = {});
std::vector<CheckResult> field_checks();

/// Dynamics invariants.  The conservation run uses a canned non-flat
/// scenario unless a config is supplied, in which case that scenario is
/// integrated instead.
std::vector<CheckResult> dynamics_checks(const ScenarioConfig* scenario = nullptr);

std::vector<CheckResult> annulus_checks();

std::vector<CheckResult> all_checks(const ScenarioConfig* scenario = nullptr,
                                    const CheckOptions& opt = {});

bool all_passed(const std::vector<CheckResult>& checks);

/// JSON report: one entry per check (name, value, target, tolerance,
/// pass, note) plus suite-level notes, including the harmonic-measure
/// closed-form discrepancy flag.
nlohmann::json checks_report(const std::vector<CheckResult>& checks);

} // namespace vortorus
