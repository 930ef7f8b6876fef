#pragma once

#include <utility>

#include "uneq/game.hpp"

namespace uneq::cournot {

// Duopoly with price (1 - x1 - x2)^+ and per-item costs theta_i. Each player
// knows her own cost and an interval [alpha_j, beta_j] containing the
// opponent's. Costs live in [0, 1/2]; the strategy space is [0, 1/2].
struct CournotParams {
    double theta1;
    double theta2;
    Interval Theta1;
    Interval Theta2;

    CournotParams(double t1, double t2, Interval T1, Interval T2);

    double theta(int player) const { return player == 1 ? theta1 : theta2; }
    const Interval& types(int player) const { return player == 1 ? Theta1 : Theta2; }
    double alpha(int player) const { return types(player).lo; }
    double beta(int player) const { return types(player).hi; }
    double delta(int player) const { return types(player).width(); }

    bool symmetric() const { return Theta1 == Theta2; }
};

GameDefinition make_game(const CournotParams& p);

double utility(double x_own, double x_opp, double theta);

struct NashPoint {
    double x1, x2, u1, u2;
};

// Full-information equilibrium: x_i = (1 - 2 theta_i + theta_j) / 3,
// u_i = x_i^2.
NashPoint nash_equilibrium(const CournotParams& p);

struct SocialOptimum {
    double x1, x2, value;
    bool tie;  // equal costs: any split of the total is optimal
};

// Maximiser of u1 + u2: the cheaper producer supplies (1 - theta)/2 alone.
SocialOptimum social_optimum(const CournotParams& p);

// Mean-cost equilibrium of the probabilistic benchmark:
// x_i = (2 - 3 theta_i - mu_i + 2 mu_j) / 6.
std::pair<double, double> bayesian_equilibrium(double mu1, double mu2, double theta1,
                                               double theta2);

// Equilibrium interval centers: s_i = Delta_j pi_i / 3 - Delta_i pi_j / 6
// + (4 - 3 beta_i - 5 alpha_i + 4 alpha_j) / 12; half-width Delta_i / 4.
std::pair<Interval, Interval> uncertainty_equilibrium_closed_form(const CournotParams& p,
                                                                  const AttitudeProfile& profile);

// Reward-maximising strategies at the equilibrium:
// x_i = Delta_j pi_i / 3 - Delta_i pi_j / 6 + lambda_i.
std::pair<double, double> interim_strategy(const CournotParams& p,
                                           const AttitudeProfile& profile);

struct DominanceThresholds {
    double theta_lo;  // optimism dominant at or below
    double theta_hi;  // pessimism dominant at or above
};

DominanceThresholds dominance_thresholds(const CournotParams& p, int player);

enum class AttitudeVerdict { optimism, pessimism, none, indifferent };

AttitudeVerdict dominant_attitude(const CournotParams& p, int player);

// Attitude maximising the worst-case (over the opponent attitude) realised
// reward: min(1, (2 - 3 theta_i - beta_i + 2 alpha_j) / (4 Delta_j)).
// Undefined when the opponent type interval is a point.
double robust_attitude_closed_form(const CournotParams& p, int player);

}  // namespace uneq::cournot
