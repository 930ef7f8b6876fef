#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "uneq/cournot.hpp"
#include "uneq/externality.hpp"
#include "uneq/solver.hpp"

namespace uneq::attitude {

// Realised rewards of the two-stage game: players first commit to optimism
// or pessimism, then play the induced game.
struct MatrixEntry {
    double U1 = 0.0, U2 = 0.0;
    double x1 = 0.0, x2 = 0.0;
    bool ok = false;
    SolveStatus status = SolveStatus::max_iterations;
};

struct AttitudeMatrix {
    std::array<MatrixEntry, 4> entries;
    double theta1 = 0.0, theta2 = 0.0;

    static int index(bool p1_optimist, bool p2_optimist) {
        return (p1_optimist ? 2 : 0) + (p2_optimist ? 1 : 0);
    }
    const MatrixEntry& at(bool p1_optimist, bool p2_optimist) const {
        return entries[static_cast<size_t>(index(p1_optimist, p2_optimist))];
    }
    bool complete() const {
        for (const auto& e : entries)
            if (!e.ok) return false;
        return true;
    }
};

// Solves the four profile equilibria once; they do not depend on realised
// types, so they can be shared across a grid of (theta1, theta2).
std::array<UncertaintyEquilibrium, 4> solve_profile_equilibria(const GameDefinition& game,
                                                               const SolverOptions& opt = {});

AttitudeMatrix build_attitude_matrix(const GameDefinition& game, double theta1, double theta2,
                                     const SolverOptions& opt = {});
AttitudeMatrix build_attitude_matrix(const GameDefinition& game, double theta1, double theta2,
                                     const std::array<UncertaintyEquilibrium, 4>& equilibria,
                                     const SolverOptions& opt = {});

// Profiles where no player gains more than eps by flipping her attitude,
// listed in the order (O,O), (O,P), (P,O), (P,P).
std::vector<std::pair<bool, bool>> pure_nash_profiles(const AttitudeMatrix& m,
                                                      double eps = 1e-9);
// Profiles where every unilateral flip strictly loses at least eps.
std::vector<std::pair<bool, bool>> strict_nash_profiles(const AttitudeMatrix& m,
                                                        double eps = 1e-9);

enum class Verdict { optimism, pessimism, none, indifferent };

std::string to_string(Verdict v);

struct DominanceReport {
    int player = 1;
    Verdict verdict = Verdict::none;
    bool strict = false;
    enum class Method { closed_form, grid } method = Method::grid;
    // grid method: worst-case advantage of each attitude over the other
    double min_margin_optimism = 0.0;
    double min_margin_pessimism = 0.0;
    double witness_theta_j = 0.0;
    bool witness_opp_optimist = false;
    int theta_j_grid = 0;
    std::optional<cournot::DominanceThresholds> thresholds;  // closed form only
};

// Checks the dominance inequality over both opponent attitudes and a grid of
// opponent types, using the numeric solver end to end.
DominanceReport dominance_analysis_grid(const GameDefinition& game, int player, double theta_i,
                                        int theta_j_grid = 33, const SolverOptions& opt = {},
                                        double eps = 1e-9);

// Threshold comparison for the duopoly game.
DominanceReport dominance_analysis_closed_form(const cournot::CournotParams& p, int player);

struct ParetoReport {
    // dominated[p]: some other profile is weakly better for both and strictly
    // better for one
    std::array<bool, 4> dominated{};
    // superior[q][p]: profile q Pareto-dominates profile p
    std::array<std::array<bool, 4>, 4> superior{};
};

ParetoReport pareto_analysis(const AttitudeMatrix& m, double eps = 1e-9);

struct PrisonersDilemmaCertificate {
    bool is_pd = false;           // beta <= max(1/3, 2 alpha)
    double beta_bound = 0.0;      // max(1/3, 2 alpha)
    bool pp_not_nash = false;
    bool pp_pareto_efficient = false;
    bool pp_superior_to_oo = false;
    bool oo_unique_nash = false;  // meaningful when is_pd holds
    AttitudeMatrix matrix;        // witnesses at the params' (theta1, theta2)
};

// Symmetric duopoly only; degenerate type intervals are rejected.
PrisonersDilemmaCertificate classify_prisoners_dilemma(const cournot::CournotParams& p,
                                                       const SolverOptions& opt = {});

enum class OpponentTypeMode {
    worst_case,  // minimise over the opponent type as well as her attitude
    fixed        // keep the opponent type at a caller-supplied value
};

struct RobustOptions {
    int pi_grid = 201;
    int theta_j_grid = 33;
    OpponentTypeMode type_mode = OpponentTypeMode::worst_case;
    double fixed_theta_j = 0.0;
    SolverOptions solver;
    RobustOptions() { solver.theta_grid = 17; }
};

struct RobustAttitudeResult {
    double pi_sharp = 0.0;
    double value = 0.0;
    std::vector<double> worst_case;  // guaranteed reward per attitude grid point
};

// Attitude maximising the worst-case realised reward over the opponent's
// attitude (and, in worst_case mode, her type). Grid search over [0, 1]^2
// with the solver providing the per-profile equilibrium.
RobustAttitudeResult robust_attitude(const GameDefinition& game, int player, double theta_i,
                                     const RobustOptions& opt = {});

struct PessimismCounterexample {
    std::string description;
};

struct NoMutualPessimismReport {
    int samples = 0;
    int skipped = 0;            // degenerate draws where attitudes are irrelevant
    int mutual_pessimism = 0;   // both players pessimism-dominant
    int pessimism_any = 0;      // either player pessimism-dominant
    std::vector<PessimismCounterexample> counterexamples;
};

NoMutualPessimismReport check_no_mutual_pessimism_cournot(int samples, std::uint64_t seed,
                                                          int theta_j_grid = 17,
                                                          const SolverOptions& opt = {});

NoMutualPessimismReport check_no_pessimism_externality(int samples, std::uint64_t seed,
                                                       int theta_j_grid = 17,
                                                       const SolverOptions& opt = {});

}  // namespace uneq::attitude
