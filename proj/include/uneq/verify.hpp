#pragma once

#include <string>
#include <vector>

#include "uneq/oracle.hpp"
#include "uneq/solver.hpp"

namespace uneq::verify {

// Deliberate perturbations of one closed form at a time; the corresponding
// check must then fail. Used as a negative control of the whole
// cross-checking harness.
enum class FaultInjection {
    none,
    cournot_center,
    cournot_radius,
    dominance_thresholds,
    robust_closed_form,
    externality_oo_interval,
    bayesian_formula,
};

FaultInjection fault_from_name(const std::string& name);
std::string fault_name(FaultInjection f);

struct VerifyOptions {
    oracle::OracleOptions oracle;
    SolverOptions solver;
    FaultInjection fault = FaultInjection::none;
    int maximin_pi_resolution = 41;  // per-run cost of the maximin checks
    std::uint64_t seed = 1;
};

struct VerifyCheck {
    std::string name;
    double delta = 0.0;      // measured disagreement
    double threshold = 0.0;  // allowed disagreement
    bool pass = false;
    std::string note;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    const VerifyCheck* first_failure() const {
        for (const auto& c : checks)
            if (!c.pass) return &c;
        return nullptr;
    }
};

VerifyReport verify_cournot_suite(const VerifyOptions& opt = {});
VerifyReport verify_externality_suite(const VerifyOptions& opt = {});
VerifyReport verify_all(const VerifyOptions& opt = {});

std::string render_report(const VerifyReport& report);

}  // namespace uneq::verify
