#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "uneq/response.hpp"

namespace uneq {

enum class SolveStatus { converged, max_iterations, oscillating };

struct SolverOptions {
    double tolerance = 1e-10;  // sup-norm of endpoint change per sweep
    int max_iter = 10000;
    int theta_grid = 129;      // samples of the type interval per response set
    SearchOptions search;
    bool auto_damping = true;  // halve the step after a period-2 cycle shows up
};

// A pair of strategy intervals, each the response-set image of the other,
// plus how the iteration got there.
struct UncertaintyEquilibrium {
    Interval X1{0.0, 0.0};
    Interval X2{0.0, 0.0};
    int iterations = 0;
    double residual = 0.0;
    bool converged = false;
    SolveStatus status = SolveStatus::max_iterations;
    bool damping_activated = false;

    const Interval& of(int player) const { return player == 1 ? X1 : X2; }
};

struct ConsistentSets {
    Interval X1{0.0, 0.0};
    Interval X2{0.0, 0.0};
    int iterations = 0;
    double residual = 0.0;
    bool converged = false;
    SolveStatus status = SolveStatus::max_iterations;
};

struct EquilibriumOutcome {
    double x1 = 0.0;
    double x2 = 0.0;
    double U1 = 0.0;
    double U2 = 0.0;
};

// Successive substitution on the four interval endpoints, starting from the
// full strategy spaces unless an initial pair is given. Games whose response
// endpoints have slope near -1 cycle with period 2; the solver detects that
// and continues with averaged updates.
UncertaintyEquilibrium solve_uncertainty_equilibrium(
    const GameDefinition& game, const AttitudeProfile& profile,
    std::optional<std::pair<Interval, Interval>> init = std::nullopt,
    const SolverOptions& options = {});

// Same iteration with the full-information consistency map in place of the
// attitude response map.
ConsistentSets solve_consistent_sets(const GameDefinition& game,
                                     std::optional<std::pair<Interval, Interval>> init = std::nullopt,
                                     const SolverOptions& options = {});

// Realised strategies and rewards once both types are fixed: each player best
// responds to the other's equilibrium set. Requires a converged equilibrium.
EquilibriumOutcome ex_post_outcome(const GameDefinition& game, const UncertaintyEquilibrium& eq,
                                   double theta1, double theta2, const AttitudeProfile& profile,
                                   const SolverOptions& options = {});

struct UniquenessReport {
    struct Cluster {
        UncertaintyEquilibrium representative;
        int hits = 0;
    };
    std::vector<Cluster> clusters;
    int non_converged = 0;
    double cluster_tolerance = 1e-6;
};

// Re-solves from randomised initial interval pairs and clusters the fixed
// points found. One cluster is evidence (not proof) of uniqueness.
UniquenessReport uniqueness_probe(const GameDefinition& game, const AttitudeProfile& profile,
                                  int restarts, std::uint64_t seed = 1,
                                  const SolverOptions& options = {});

}  // namespace uneq
