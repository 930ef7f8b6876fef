#include "uneq/cournot.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace uneq::cournot {

namespace {

constexpr double kMaxCost = 0.5;

void check_side(double theta, const Interval& Theta, int player) {
    std::ostringstream msg;
    if (Theta.lo < 0.0 || Theta.hi > kMaxCost) {
        msg << "cost interval of player " << player << " must lie inside [0, 0.5], got ["
            << Theta.lo << ", " << Theta.hi << "]";
        throw std::invalid_argument(msg.str());
    }
    if (!Theta.contains(theta)) {
        msg << "theta" << player << " = " << theta << " outside its cost interval ["
            << Theta.lo << ", " << Theta.hi << "]";
        throw std::invalid_argument(msg.str());
    }
}

// Closed forms hold only where the price term stays non-negative.
void check_price_region(double x1, double x2) {
    if (x1 + x2 > 1.0 + 1e-12)
        throw std::domain_error(
            "cournot closed form: total quantity exceeds 1, price kink active; "
            "use the numeric solver for this configuration");
}

}  // namespace

CournotParams::CournotParams(double t1, double t2, Interval T1, Interval T2)
    : theta1(t1), theta2(t2), Theta1(T1), Theta2(T2) {
    check_side(theta1, Theta1, 1);
    check_side(theta2, Theta2, 2);
}

double utility(double x_own, double x_opp, double theta) {
    const double price = std::max(1.0 - x_own - x_opp, 0.0);
    return x_own * price - theta * x_own;
}

GameDefinition make_game(const CournotParams& p) {
    GameDefinition g;
    g.utility = [](int player, double x1, double x2, double theta) {
        return player == 1 ? utility(x1, x2, theta) : utility(x2, x1, theta);
    };
    g.strategy_space = {Interval(0.0, kMaxCost), Interval(0.0, kMaxCost)};
    g.type_space = {p.Theta1, p.Theta2};
    g.opponent_monotonicity = {OpponentMonotonicity::decreasing,
                               OpponentMonotonicity::decreasing};
    return g;
}

NashPoint nash_equilibrium(const CournotParams& p) {
    const double x1 = (1.0 - 2.0 * p.theta1 + p.theta2) / 3.0;
    const double x2 = (1.0 - 2.0 * p.theta2 + p.theta1) / 3.0;
    check_price_region(x1, x2);
    return {x1, x2, x1 * x1, x2 * x2};
}

SocialOptimum social_optimum(const CournotParams& p) {
    if (p.theta1 == p.theta2) {
        const double total = (1.0 - p.theta1) / 2.0;
        return {total / 2.0, total / 2.0, total * total, true};
    }
    const double cheap = std::min(p.theta1, p.theta2);
    const double q = (1.0 - cheap) / 2.0;
    const double value = (1.0 - cheap) * (1.0 - cheap) / 4.0;
    if (p.theta1 < p.theta2) return {q, 0.0, value, false};
    return {0.0, q, value, false};
}

std::pair<double, double> bayesian_equilibrium(double mu1, double mu2, double theta1,
                                               double theta2) {
    for (double mu : {mu1, mu2})
        if (mu < 0.0 || mu > kMaxCost)
            throw std::invalid_argument("bayesian_equilibrium: mean cost outside [0, 0.5]");
    const double x1 = (2.0 - 3.0 * theta1 - mu1 + 2.0 * mu2) / 6.0;
    const double x2 = (2.0 - 3.0 * theta2 - mu2 + 2.0 * mu1) / 6.0;
    return {x1, x2};
}

namespace {

double center(const CournotParams& p, int i, const AttitudeProfile& profile) {
    const int j = opponent_of(i);
    return p.delta(j) * profile.of(i).value() / 3.0 - p.delta(i) * profile.of(j).value() / 6.0 +
           (4.0 - 3.0 * p.beta(i) - 5.0 * p.alpha(i) + 4.0 * p.alpha(j)) / 12.0;
}

}  // namespace

std::pair<Interval, Interval> uncertainty_equilibrium_closed_form(const CournotParams& p,
                                                                  const AttitudeProfile& profile) {
    const double s1 = center(p, 1, profile);
    const double s2 = center(p, 2, profile);
    const double r1 = p.delta(1) / 4.0;
    const double r2 = p.delta(2) / 4.0;
    check_price_region(s1 + r1, s2 + r2);
    return {Interval(s1 - r1, s1 + r1), Interval(s2 - r2, s2 + r2)};
}

std::pair<double, double> interim_strategy(const CournotParams& p,
                                           const AttitudeProfile& profile) {
    auto one = [&](int i) {
        const int j = opponent_of(i);
        const double lambda =
            (2.0 - p.alpha(i) + 2.0 * p.alpha(j) - 3.0 * p.theta(i)) / 6.0;
        return p.delta(j) * profile.of(i).value() / 3.0 -
               p.delta(i) * profile.of(j).value() / 6.0 + lambda;
    };
    const double x1 = one(1);
    const double x2 = one(2);
    check_price_region(x1, x2);
    return {x1, x2};
}

DominanceThresholds dominance_thresholds(const CournotParams& p, int player) {
    require_player(player);
    const int i = player;
    const int j = opponent_of(i);
    return {(2.0 - p.beta(i) + 4.0 * p.alpha(j) - 2.0 * p.beta(j)) / 3.0,
            (2.0 - p.alpha(i) + 4.0 * p.beta(j) - 2.0 * p.alpha(j)) / 3.0};
}

AttitudeVerdict dominant_attitude(const CournotParams& p, int player) {
    const auto t = dominance_thresholds(p, player);
    const double theta = p.theta(player);
    if (p.delta(1) == 0.0 && p.delta(2) == 0.0) return AttitudeVerdict::indifferent;
    if (theta <= t.theta_lo) return AttitudeVerdict::optimism;
    if (theta >= t.theta_hi) return AttitudeVerdict::pessimism;
    return AttitudeVerdict::none;
}

double robust_attitude_closed_form(const CournotParams& p, int player) {
    require_player(player);
    const int j = opponent_of(player);
    if (p.delta(j) == 0.0)
        throw std::domain_error(
            "robust_attitude_closed_form: opponent cost interval has zero width");
    const double raw = (2.0 - 3.0 * p.theta(player) - p.beta(player) + 2.0 * p.alpha(j)) /
                       (4.0 * p.delta(j));
    return std::min(1.0, raw);
}

}  // namespace uneq::cournot
