#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uneq/oracle.hpp"
#include "uneq/solver.hpp"
#include "uneq/verify.hpp"

namespace uneq::cli {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A parameter that is either fixed or swept over a uniform grid.
struct ParamValue {
    double fixed = 0.0;
    std::optional<std::tuple<double, double, int>> sweep;  // lo, hi, count

    bool swept() const { return sweep.has_value(); }
    std::vector<double> values() const;
    double lo() const { return swept() ? std::get<0>(*sweep) : fixed; }
    double hi() const { return swept() ? std::get<1>(*sweep) : fixed; }
};

struct RunConfig {
    enum class Game { cournot, externality };
    Game game = Game::cournot;
    std::string analysis = "equilibrium";

    ParamValue theta1, theta2, pi1, pi2;
    // cost/type bounds; the externality game uses alpha1/beta1 for both sides
    double alpha1 = 0.0, beta1 = 0.0, alpha2 = 0.0, beta2 = 0.0;

    SolverOptions solver;
    oracle::OracleOptions oracle;
    verify::FaultInjection fault = verify::FaultInjection::none;
    int robust_pi_grid = 101;
    int dominance_theta_grid = 33;
    std::uint64_t seed = 1;
    int probe_restarts = 20;
    bool allow_nonconverged = false;

    std::string report_name = "report.txt";
    std::string csv_name = "results.csv";

    // swept parameter names in declaration order; first declared varies slowest
    std::vector<std::string> sweep_order;
};

RunConfig parse_config_text(const std::string& text);
RunConfig parse_config_file(const std::string& path);

struct SweepPoint {
    double theta1, theta2, pi1, pi2;
};

// Cartesian product of the declared grids, ordered lexicographically in
// declaration order.
std::vector<SweepPoint> expand_sweeps(const RunConfig& cfg);

}  // namespace uneq::cli
