#pragma once

// Built-in verification suites run by `brylinski verify`.

#include <brylinski/cli/curve_spec.hpp>
#include <brylinski/cli/result_table.hpp>

#include <string>
#include <vector>

namespace brylinski::cli {

struct CheckResult {
    std::string suite;
    std::string name;
    bool pass = false;
    double measured = 0.0;  // relative (or absolute, see name) deviation
    double tolerance = 0.0;
    std::string detail;
};

struct VerifyOptions {
    /// Curves to use; empty selects the built-in circle, ellipse and torus knot.
    std::vector<CurveSpec> curves;
    /// Replace the corrected kappa_2 formula by a tampered copy.
    bool mutate = false;
    EngineOverrides engine;
};

/// Suite names: circle, formulas, paper-residues, engine, all. Unknown names throw E_USAGE.
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& options);

const std::vector<std::string>& suite_names();

ResultTable verify_table(const std::vector<CheckResult>& results);

} // namespace brylinski::cli
