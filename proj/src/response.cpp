#include "uneq/response.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace uneq {

namespace {

void require_in(const Interval& domain, double x, const char* what) {
    if (!domain.contains(x, 1e-12)) {
        std::ostringstream msg;
        msg << what << " = " << x << " outside [" << domain.lo << ", " << domain.hi << "]";
        throw std::invalid_argument(msg.str());
    }
}

// Extremes of the reward over the opponent set at a fixed own strategy.
std::pair<double, double> opponent_extremes(const GameDefinition& game, int player, double x_own,
                                            const Interval& opp_set, double theta,
                                            const SearchOptions& search) {
    auto u = [&](double x_opp) { return game.reward_own(player, x_own, x_opp, theta); };
    switch (game.monotonicity(player)) {
        case OpponentMonotonicity::decreasing:
            return {u(opp_set.hi), u(opp_set.lo)};
        case OpponentMonotonicity::increasing:
            return {u(opp_set.lo), u(opp_set.hi)};
        case OpponentMonotonicity::unknown: {
            const double worst = minimize_on(u, opp_set, search).value;
            const double best = maximize_on(u, opp_set, search).value;
            return {worst, best};
        }
    }
    return {0.0, 0.0};  // unreachable
}

}  // namespace

double anticipated_reward(const GameDefinition& game, int player, double x_own,
                          const Interval& opp_set, double theta, Attitude pi,
                          const SearchOptions& search) {
    require_player(player);
    require_in(game.strategies(player), x_own, "own strategy");
    require_in(game.types(player), theta, "theta");
    if (!game.strategies(opponent_of(player)).contains(opp_set, 1e-12))
        throw std::invalid_argument("opponent set exceeds the opponent strategy space");

    const auto [worst, best] = opponent_extremes(game, player, x_own, opp_set, theta, search);
    const double p = pi.value();
    return p * best + (1.0 - p) * worst;
}

double hurwicz_point(const Interval& opp_set, Attitude pi, OpponentMonotonicity m) {
    const double p = pi.value();
    switch (m) {
        case OpponentMonotonicity::decreasing:
            return p * opp_set.lo + (1.0 - p) * opp_set.hi;
        case OpponentMonotonicity::increasing:
            return p * opp_set.hi + (1.0 - p) * opp_set.lo;
        case OpponentMonotonicity::unknown:
            break;
    }
    throw std::invalid_argument(
        "hurwicz_point: monotonicity unknown; evaluate anticipated_reward directly");
}

BestResponse best_response(const GameDefinition& game, int player, const Interval& opp_set,
                           double theta, Attitude pi, const SearchOptions& search) {
    require_player(player);
    require_in(game.types(player), theta, "theta");
    if (!game.strategies(opponent_of(player)).contains(opp_set, 1e-9))
        throw std::invalid_argument("opponent set exceeds the opponent strategy space");

    const OpponentMonotonicity m = game.monotonicity(player);
    ScalarMaxResult r;
    if (m != OpponentMonotonicity::unknown) {
        // Extremes sit at the endpoints of opp_set; the attitude mix of the two
        // endpoint evaluations is exact for any monotone reward.
        const double best_at = m == OpponentMonotonicity::decreasing ? opp_set.lo : opp_set.hi;
        const double worst_at = m == OpponentMonotonicity::decreasing ? opp_set.hi : opp_set.lo;
        const double p = pi.value();
        r = maximize_on(
            [&](double x) {
                return p * game.reward_own(player, x, best_at, theta) +
                       (1.0 - p) * game.reward_own(player, x, worst_at, theta);
            },
            game.strategies(player), search);
    } else {
        r = maximize_on(
            [&](double x) {
                const auto [worst, best] =
                    opponent_extremes(game, player, x, opp_set, theta, search);
                return pi.value() * best + (1.0 - pi.value()) * worst;
            },
            game.strategies(player), search);
    }
    return {r.x, r.value, r.tie};
}

Interval response_set(const GameDefinition& game, int player, const Interval& opp_set,
                      Attitude pi, int theta_grid, const SearchOptions& search) {
    if (theta_grid < 2) theta_grid = 2;
    const Interval& types = game.types(player);
    if (types.is_singleton())
        return Interval::singleton(best_response(game, player, opp_set, types.lo, pi, search).x);

    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (int k = 0; k < theta_grid; ++k) {
        const double t = (k == theta_grid - 1)
                             ? types.hi
                             : types.lo + types.width() * k / (theta_grid - 1);
        const double x = best_response(game, player, opp_set, t, pi, search).x;
        lo = std::min(lo, x);
        hi = std::max(hi, x);
    }
    return Interval(lo, hi);
}

ResponseSetDiagnostic response_set_diagnostic(const GameDefinition& game, int player,
                                              const Interval& opp_set, Attitude pi,
                                              int theta_grid, const SearchOptions& search) {
    if (theta_grid < 2) theta_grid = 2;
    const Interval& types = game.types(player);
    std::vector<double> responses;
    responses.reserve(static_cast<size_t>(theta_grid));
    for (int k = 0; k < theta_grid; ++k) {
        const double t = types.is_singleton()
                             ? types.lo
                             : (k == theta_grid - 1
                                    ? types.hi
                                    : types.lo + types.width() * k / (theta_grid - 1));
        responses.push_back(best_response(game, player, opp_set, t, pi, search).x);
    }
    std::sort(responses.begin(), responses.end());

    ResponseSetDiagnostic d;
    d.hull = Interval(responses.front(), responses.back());
    for (size_t k = 1; k < responses.size(); ++k)
        d.max_gap = std::max(d.max_gap, responses[k] - responses[k - 1]);
    // A connected image sampled at n points has gaps ~ width/n; flag anything
    // an order of magnitude larger.
    const double expected = d.hull.width() / (theta_grid - 1);
    d.gap_flag = d.hull.width() > 0 && d.max_gap > 10.0 * expected + 1e-9;
    return d;
}

Interval certainty_response_set(const GameDefinition& game, int player, const Interval& opp_set,
                                int x_grid, int theta_grid, const SearchOptions& search) {
    const Interval& types = game.types(player);
    const int nx = opp_set.is_singleton() ? 1 : std::max(2, x_grid);
    const int nt = types.is_singleton() ? 1 : std::max(2, theta_grid);

    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (int a = 0; a < nx; ++a) {
        const double x_opp =
            nx == 1 ? opp_set.lo
                    : (a == nx - 1 ? opp_set.hi : opp_set.lo + opp_set.width() * a / (nx - 1));
        for (int b = 0; b < nt; ++b) {
            const double t =
                nt == 1 ? types.lo
                        : (b == nt - 1 ? types.hi : types.lo + types.width() * b / (nt - 1));
            const double x = maximize_on(
                                 [&](double z) { return game.reward_own(player, z, x_opp, t); },
                                 game.strategies(player), search)
                                 .x;
            lo = std::min(lo, x);
            hi = std::max(hi, x);
        }
    }
    return Interval(lo, hi);
}

GameProbeReport probe_game(const GameDefinition& game, int samples_per_axis,
                           const SearchOptions& search) {
    GameProbeReport rep;
    std::ostringstream detail;
    const int n = std::max(3, samples_per_axis);

    for (int player = 1; player <= 2; ++player) {
        const Interval& own = game.strategies(player);
        const Interval& opp = game.strategies(opponent_of(player));
        const Interval& types = game.types(player);
        const double eps = std::max(1e-7, own.width() * 1e-7);

        for (int a = 0; a < n; ++a) {
            const double x_opp = opp.lo + opp.width() * a / (n - 1);
            for (int b = 0; b < n; ++b) {
                const double t = types.lo + types.width() * b / (n - 1);

                // continuity probe: central differences should not explode
                for (int c = 1; c + 1 < n; ++c) {
                    const double x = own.lo + own.width() * c / (n - 1);
                    const double u0 = game.reward_own(player, x, x_opp, t);
                    const double u1 = game.reward_own(player, x + eps, x_opp, t);
                    if (!std::isfinite(u0) || !std::isfinite(u1) ||
                        std::fabs(u1 - u0) > 1e6 * (std::fabs(u0) + 1.0) * eps) {
                        rep.continuity_ok = false;
                        ++rep.violations;
                        detail << "jump near x=" << x << " (player " << player << ")\n";
                    }
                }

                const BestResponse br =
                    best_response(game, player, Interval::singleton(x_opp), t,
                                  pessimism(), search);
                if (br.tie) {
                    rep.unique_maximizer_ok = false;
                    ++rep.violations;
                    detail << "non-unique maximiser at x_opp=" << x_opp << ", theta=" << t
                           << " (player " << player << ")\n";
                }
            }
        }
    }
    rep.detail = detail.str();
    return rep;
}

}  // namespace uneq
