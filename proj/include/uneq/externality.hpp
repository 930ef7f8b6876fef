#pragma once

#include "uneq/game.hpp"

namespace uneq::externality {

// Consumption game with a shared degradation term: each player gains her
// consumption x_i in [0, 1] and loses exp(-theta_i + x1 + x2). Types lie in
// [alpha, beta] with 0 < alpha < 2 alpha < beta < 1.
struct ExternalityParams {
    double theta1;
    double theta2;
    double alpha;
    double beta;

    ExternalityParams(double t1, double t2, double a, double b);

    double theta(int player) const { return player == 1 ? theta1 : theta2; }
    Interval types() const { return Interval(alpha, beta); }
};

GameDefinition make_game(const ExternalityParams& p);

double utility(const ExternalityParams& p, int player, double x1, double x2);

// Full-information best response to a fixed opponent strategy.
double certainty_best_response(double theta, double x_opp);

struct CertaintyNash {
    double x1 = 0.0;
    double x2 = 0.0;
    bool tie = false;  // equal types: every (x, theta - x) with x in [0, theta]
};

CertaintyNash certainty_nash(const ExternalityParams& p);

// Closed forms for one discrete attitude profile. Several of the printed
// expressions leave strategies unclipped (possibly below 0); both readings
// are returned. The feasible fields respect the [0, 1] strategy space and
// match the numeric solver; the paper_ fields reproduce the printed
// expressions.
struct ProfileEquilibrium {
    Interval set1_paper{0.0, 0.0}, set2_paper{0.0, 0.0};
    Interval set1{0.0, 0.0}, set2{0.0, 0.0};
    double x1_paper = 0.0, x2_paper = 0.0;
    double x1 = 0.0, x2 = 0.0;
    double U1_paper = 0.0, U2_paper = 0.0;
    double U1 = 0.0, U2 = 0.0;
};

ProfileEquilibrium profile_equilibrium(const ExternalityParams& p, bool p1_optimist,
                                       bool p2_optimist);

struct DominanceCertificate {
    // margins of optimism for player 1 at the given theta2
    double vs_pessimist_paper;  // U1(O,P) - U1(P,P)
    double vs_optimist_paper;   // U1(O,O) - U1(P,O)
    double vs_pessimist_feasible;
    double vs_optimist_feasible;
    // minima of the same margins over a theta2 grid
    double grid_min_paper;
    double grid_min_feasible;
    bool holds_paper;
    bool holds_feasible;
};

// Checks the two inequalities that make optimism dominant for player 1, under
// both the printed and the feasible reward conventions, at the configured
// types and over a type grid. Player 2 follows by symmetry.
DominanceCertificate optimism_dominance_certificate(const ExternalityParams& p,
                                                    int theta_grid = 33);

}  // namespace uneq::externality
