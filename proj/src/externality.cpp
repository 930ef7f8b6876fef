#include "uneq/externality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace uneq::externality {

namespace {

double raw_utility(double x_own, double x_opp, double theta) {
    return x_own - std::exp(-theta + x_own + x_opp);
}

}  // namespace

ExternalityParams::ExternalityParams(double t1, double t2, double a, double b)
    : theta1(t1), theta2(t2), alpha(a), beta(b) {
    std::ostringstream msg;
    if (!(0.0 < a && 2.0 * a < b && b < 1.0)) {
        msg << "externality parameters require 0 < alpha < 2 alpha < beta < 1, got alpha=" << a
            << ", beta=" << b;
        throw std::invalid_argument(msg.str());
    }
    for (int i = 1; i <= 2; ++i) {
        const double t = i == 1 ? t1 : t2;
        if (t < a || t > b) {
            msg << "theta" << i << " = " << t << " outside [alpha, beta] = [" << a << ", " << b
                << "]";
            throw std::invalid_argument(msg.str());
        }
    }
}

GameDefinition make_game(const ExternalityParams& p) {
    GameDefinition g;
    g.utility = [](int player, double x1, double x2, double theta) {
        return player == 1 ? raw_utility(x1, x2, theta) : raw_utility(x2, x1, theta);
    };
    g.strategy_space = {Interval(0.0, 1.0), Interval(0.0, 1.0)};
    g.type_space = {p.types(), p.types()};
    g.opponent_monotonicity = {OpponentMonotonicity::decreasing,
                               OpponentMonotonicity::decreasing};
    return g;
}

double utility(const ExternalityParams& p, int player, double x1, double x2) {
    require_player(player);
    return player == 1 ? raw_utility(x1, x2, p.theta1) : raw_utility(x2, x1, p.theta2);
}

double certainty_best_response(double theta, double x_opp) {
    return clip01(theta - x_opp);
}

CertaintyNash certainty_nash(const ExternalityParams& p) {
    if (p.theta1 == p.theta2) return {p.theta1, 0.0, true};
    if (p.theta1 < p.theta2) return {0.0, p.theta2, false};
    return {p.theta1, 0.0, false};
}

ProfileEquilibrium profile_equilibrium(const ExternalityParams& p, bool p1_optimist,
                                       bool p2_optimist) {
    const double a = p.alpha;
    const double b = p.beta;
    ProfileEquilibrium out;

    if (p1_optimist && p2_optimist) {
        out.set1_paper = Interval(a / 2.0, b - a / 2.0);
        out.set2_paper = out.set1_paper;
        out.x1_paper = p.theta1 - a / 2.0;
        out.x2_paper = p.theta2 - a / 2.0;
    } else if (!p1_optimist && !p2_optimist) {
        out.set1_paper = Interval(a - b / 2.0, b / 2.0);
        out.set2_paper = out.set1_paper;
        out.x1_paper = p.theta1 - b / 2.0;
        out.x2_paper = p.theta2 - b / 2.0;
    } else if (p1_optimist) {  // (O, P)
        out.set1_paper = Interval(a, b);
        out.set2_paper = Interval::singleton(0.0);
        out.x1_paper = p.theta1;
        out.x2_paper = p.theta2 - b;
    } else {  // (P, O)
        out.set1_paper = Interval::singleton(0.0);
        out.set2_paper = Interval(a, b);
        out.x1_paper = p.theta1 - b;
        out.x2_paper = p.theta2;
    }

    out.set1 = Interval(clip01(out.set1_paper.lo), clip01(out.set1_paper.hi));
    out.set2 = Interval(clip01(out.set2_paper.lo), clip01(out.set2_paper.hi));
    out.x1 = clip01(out.x1_paper);
    out.x2 = clip01(out.x2_paper);

    out.U1_paper = raw_utility(out.x1_paper, out.x2_paper, p.theta1);
    out.U2_paper = raw_utility(out.x2_paper, out.x1_paper, p.theta2);
    out.U1 = raw_utility(out.x1, out.x2, p.theta1);
    out.U2 = raw_utility(out.x2, out.x1, p.theta2);
    return out;
}

DominanceCertificate optimism_dominance_certificate(const ExternalityParams& p, int theta_grid) {
    if (theta_grid < 2) theta_grid = 2;

    auto margins = [&](double theta2) {
        ExternalityParams q(p.theta1, theta2, p.alpha, p.beta);
        const auto OO = profile_equilibrium(q, true, true);
        const auto OP = profile_equilibrium(q, true, false);
        const auto PO = profile_equilibrium(q, false, true);
        const auto PP = profile_equilibrium(q, false, false);
        struct M {
            double vs_p_paper, vs_o_paper, vs_p_feas, vs_o_feas;
        };
        return M{OP.U1_paper - PP.U1_paper, OO.U1_paper - PO.U1_paper,
                 OP.U1 - PP.U1, OO.U1 - PO.U1};
    };

    const auto at = margins(p.theta2);
    DominanceCertificate cert;
    cert.vs_pessimist_paper = at.vs_p_paper;
    cert.vs_optimist_paper = at.vs_o_paper;
    cert.vs_pessimist_feasible = at.vs_p_feas;
    cert.vs_optimist_feasible = at.vs_o_feas;

    double min_paper = std::numeric_limits<double>::infinity();
    double min_feas = min_paper;
    for (int k = 0; k < theta_grid; ++k) {
        const double t =
            k == theta_grid - 1 ? p.beta : p.alpha + (p.beta - p.alpha) * k / (theta_grid - 1);
        const auto m = margins(t);
        min_paper = std::min({min_paper, m.vs_p_paper, m.vs_o_paper});
        min_feas = std::min({min_feas, m.vs_p_feas, m.vs_o_feas});
    }
    cert.grid_min_paper = min_paper;
    cert.grid_min_feasible = min_feas;
    cert.holds_paper = min_paper >= 0.0;
    cert.holds_feasible = min_feas >= 0.0;
    return cert;
}

}  // namespace uneq::externality
