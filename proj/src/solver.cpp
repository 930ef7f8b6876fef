#include "uneq/solver.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>

namespace uneq {

namespace {

using Endpoints = std::array<double, 4>;  // lo1, hi1, lo2, hi2

Endpoints to_endpoints(const Interval& a, const Interval& b) {
    return {a.lo, a.hi, b.lo, b.hi};
}

double sup_change(const Endpoints& a, const Endpoints& b) {
    double d = 0.0;
    for (int k = 0; k < 4; ++k) d = std::max(d, std::fabs(a[k] - b[k]));
    return d;
}

struct IterationResult {
    Endpoints state;
    int iterations;
    double residual;
    SolveStatus status;
    bool damping;
};

// Successive substitution on the endpoint 4-tuple; `map` produces the next
// interval pair from the current one.
template <class Map>
IterationResult iterate_endpoints(Endpoints state, Map&& map, const SolverOptions& opt) {
    Endpoints prev = state;
    Endpoints prev2 = state;
    bool damping = false;
    double residual = std::numeric_limits<double>::infinity();
    int it = 0;

    for (; it < opt.max_iter; ++it) {
        Endpoints next = map(state);
        if (damping)
            for (int k = 0; k < 4; ++k) next[k] = 0.5 * (state[k] + next[k]);

        residual = sup_change(next, state);
        prev2 = prev;
        prev = state;
        state = next;

        if (residual <= opt.tolerance) {
            ++it;
            return {state, it, residual, SolveStatus::converged, damping};
        }

        // Period-2 cycle: the new state returns to where we were two sweeps
        // ago while still moving each sweep.
        if (opt.auto_damping && !damping && it >= 2 &&
            sup_change(state, prev2) <= opt.tolerance && residual > opt.tolerance)
            damping = true;
    }

    const bool cycling = sup_change(state, prev2) <= 10.0 * opt.tolerance;
    return {state, it, residual,
            cycling ? SolveStatus::oscillating : SolveStatus::max_iterations, damping};
}

Interval make_interval_sorted(double a, double b) {
    return a <= b ? Interval(a, b) : Interval(b, a);
}

}  // namespace

UncertaintyEquilibrium solve_uncertainty_equilibrium(
    const GameDefinition& game, const AttitudeProfile& profile,
    std::optional<std::pair<Interval, Interval>> init, const SolverOptions& opt) {
    const Interval X1_0 = init ? init->first : game.strategies(1);
    const Interval X2_0 = init ? init->second : game.strategies(2);

    auto map = [&](const Endpoints& s) -> Endpoints {
        const Interval X1 = make_interval_sorted(s[0], s[1]);
        const Interval X2 = make_interval_sorted(s[2], s[3]);
        const Interval Y1 =
            response_set(game, 1, X2, profile.p1, opt.theta_grid, opt.search);
        const Interval Y2 =
            response_set(game, 2, X1, profile.p2, opt.theta_grid, opt.search);
        return to_endpoints(Y1, Y2);
    };

    const auto r = iterate_endpoints(to_endpoints(X1_0, X2_0), map, opt);

    UncertaintyEquilibrium eq;
    eq.X1 = make_interval_sorted(r.state[0], r.state[1]);
    eq.X2 = make_interval_sorted(r.state[2], r.state[3]);
    eq.iterations = r.iterations;
    eq.residual = r.residual;
    eq.status = r.status;
    eq.converged = r.status == SolveStatus::converged;
    eq.damping_activated = r.damping;
    return eq;
}

ConsistentSets solve_consistent_sets(const GameDefinition& game,
                                     std::optional<std::pair<Interval, Interval>> init,
                                     const SolverOptions& opt) {
    const Interval X1_0 = init ? init->first : game.strategies(1);
    const Interval X2_0 = init ? init->second : game.strategies(2);

    auto map = [&](const Endpoints& s) -> Endpoints {
        const Interval X1 = make_interval_sorted(s[0], s[1]);
        const Interval X2 = make_interval_sorted(s[2], s[3]);
        const Interval Y1 = certainty_response_set(game, 1, X2, opt.theta_grid / 4 + 2,
                                                   opt.theta_grid / 4 + 2, opt.search);
        const Interval Y2 = certainty_response_set(game, 2, X1, opt.theta_grid / 4 + 2,
                                                   opt.theta_grid / 4 + 2, opt.search);
        return to_endpoints(Y1, Y2);
    };

    const auto r = iterate_endpoints(to_endpoints(X1_0, X2_0), map, opt);

    ConsistentSets cs;
    cs.X1 = make_interval_sorted(r.state[0], r.state[1]);
    cs.X2 = make_interval_sorted(r.state[2], r.state[3]);
    cs.iterations = r.iterations;
    cs.residual = r.residual;
    cs.status = r.status;
    cs.converged = r.status == SolveStatus::converged;
    return cs;
}

EquilibriumOutcome ex_post_outcome(const GameDefinition& game, const UncertaintyEquilibrium& eq,
                                   double theta1, double theta2, const AttitudeProfile& profile,
                                   const SolverOptions& opt) {
    if (!eq.converged)
        throw std::invalid_argument("ex_post_outcome: equilibrium did not converge");
    if (!game.types(1).contains(theta1, 1e-12) || !game.types(2).contains(theta2, 1e-12))
        throw std::invalid_argument("ex_post_outcome: theta outside the type space");

    EquilibriumOutcome out;
    out.x1 = best_response(game, 1, eq.X2, theta1, profile.p1, opt.search).x;
    out.x2 = best_response(game, 2, eq.X1, theta2, profile.p2, opt.search).x;
    out.U1 = game.reward(1, out.x1, out.x2, theta1);
    out.U2 = game.reward(2, out.x1, out.x2, theta2);
    return out;
}

UniquenessReport uniqueness_probe(const GameDefinition& game, const AttitudeProfile& profile,
                                  int restarts, std::uint64_t seed, const SolverOptions& opt) {
    if (restarts < 1) throw std::invalid_argument("uniqueness_probe: restarts must be >= 1");

    UniquenessReport rep;
    std::mt19937_64 rng(seed);

    auto random_subinterval = [&](const Interval& space) {
        std::uniform_real_distribution<double> dist(space.lo, space.hi);
        double a = dist(rng);
        double b = dist(rng);
        if (a > b) std::swap(a, b);
        return Interval(a, b);
    };

    for (int r = 0; r < restarts; ++r) {
        const auto init = std::make_pair(random_subinterval(game.strategies(1)),
                                         random_subinterval(game.strategies(2)));
        const UncertaintyEquilibrium eq =
            solve_uncertainty_equilibrium(game, profile, init, opt);
        if (!eq.converged) {
            ++rep.non_converged;
            continue;
        }
        bool matched = false;
        for (auto& cluster : rep.clusters) {
            const auto& c = cluster.representative;
            const double d = std::max(
                std::max(std::fabs(c.X1.lo - eq.X1.lo), std::fabs(c.X1.hi - eq.X1.hi)),
                std::max(std::fabs(c.X2.lo - eq.X2.lo), std::fabs(c.X2.hi - eq.X2.hi)));
            if (d <= rep.cluster_tolerance) {
                ++cluster.hits;
                matched = true;
                break;
            }
        }
        if (!matched) rep.clusters.push_back({eq, 1});
    }
    return rep;
}

}  // namespace uneq
