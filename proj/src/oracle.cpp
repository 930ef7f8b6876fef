#include "uneq/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace uneq::oracle {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

GridSet::GridSet(Interval base_, int resolution_) : base(base_), resolution(resolution_) {
    if (resolution < 2) throw std::invalid_argument("GridSet: resolution must be >= 2");
    member.assign(static_cast<size_t>(resolution), 0);
}

GridSet GridSet::full(const Interval& base, int resolution) {
    GridSet g(base, resolution);
    std::fill(g.member.begin(), g.member.end(), std::uint8_t{1});
    return g;
}

GridSet GridSet::empty_set(const Interval& base, int resolution) {
    return GridSet(base, resolution);
}

GridSet GridSet::from_span(const Interval& base, int resolution, const Interval& span) {
    GridSet g(base, resolution);
    const double slack = 0.5 * g.cell();
    for (int k = 0; k < resolution; ++k)
        if (g.point(k) >= span.lo - slack && g.point(k) <= span.hi + slack)
            g.member[static_cast<size_t>(k)] = 1;
    if (g.empty()) {
        // span narrower than a cell: keep the nearest point
        int nearest = 0;
        double best = kInf;
        for (int k = 0; k < resolution; ++k) {
            const double d = std::fabs(g.point(k) - span.mid());
            if (d < best) {
                best = d;
                nearest = k;
            }
        }
        g.member[static_cast<size_t>(nearest)] = 1;
    }
    return g;
}

int GridSet::count() const {
    int n = 0;
    for (auto m : member) n += m != 0;
    return n;
}

double GridSet::min_point() const {
    for (int k = 0; k < resolution; ++k)
        if (member[static_cast<size_t>(k)]) return point(k);
    throw std::logic_error("GridSet: empty set has no minimum");
}

double GridSet::max_point() const {
    for (int k = resolution - 1; k >= 0; --k)
        if (member[static_cast<size_t>(k)]) return point(k);
    throw std::logic_error("GridSet: empty set has no maximum");
}

Interval GridSet::hull() const { return Interval(min_point(), max_point()); }

std::vector<int> GridSet::member_indices() const {
    std::vector<int> idx;
    idx.reserve(member.size());
    for (int k = 0; k < resolution; ++k)
        if (member[static_cast<size_t>(k)]) idx.push_back(k);
    return idx;
}

// ---------------------------------------------------------------------------
// grid tier

GridSet grid_psi(const GameDefinition& game, int player, const GridSet& opp, Attitude pi,
                 int type_resolution, int strategy_resolution, bool parallel) {
    require_player(player);
    if (opp.empty()) throw std::invalid_argument("grid_psi: opponent set is empty");
    if (type_resolution < 1) type_resolution = 1;

    const Interval& types = game.types(player);
    const int nt = types.is_singleton() ? 1 : std::max(2, type_resolution);
    const GridSet own_frame(game.strategies(player), strategy_resolution);
    const std::vector<int> opp_idx = opp.member_indices();
    std::vector<double> opp_pts(opp_idx.size());
    for (size_t m = 0; m < opp_idx.size(); ++m) opp_pts[m] = opp.point(opp_idx[m]);

    const double p = pi.value();
    std::vector<int> argmax_per_type(static_cast<size_t>(nt), 0);

#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
    for (int b = 0; b < nt; ++b) {
        const double theta =
            nt == 1 ? types.lo
                    : (b == nt - 1 ? types.hi : types.lo + types.width() * b / (nt - 1));
        int best_k = 0;
        double best_f = -kInf;
        for (int k = 0; k < own_frame.resolution; ++k) {
            const double x = own_frame.point(k);
            double lo = kInf, hi = -kInf;
            for (double xo : opp_pts) {
                const double u = game.reward_own(player, x, xo, theta);
                if (u < lo) lo = u;
                if (u > hi) hi = u;
            }
            const double f = p * hi + (1.0 - p) * lo;
            if (f > best_f) {
                best_f = f;
                best_k = k;
            }
        }
        argmax_per_type[static_cast<size_t>(b)] = best_k;
    }

    GridSet image(game.strategies(player), strategy_resolution);
    for (int k : argmax_per_type) image.member[static_cast<size_t>(k)] = 1;
    return image;
}

namespace {

std::uint64_t state_hash(const GridSet& a, const GridSet& b) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](const std::vector<std::uint8_t>& v) {
        for (std::uint8_t byte : v) {
            h ^= byte;
            h *= 1099511628211ull;
        }
        h ^= 0xabu;
        h *= 1099511628211ull;
    };
    mix(a.member);
    mix(b.member);
    return h;
}

std::pair<GridSet, GridSet> cycle_midpoint(const std::pair<GridSet, GridSet>& A,
                                           const std::pair<GridSet, GridSet>& B) {
    auto mid = [](const GridSet& x, const GridSet& y) {
        const Interval span(0.5 * (x.min_point() + y.min_point()),
                            0.5 * (x.max_point() + y.max_point()));
        return GridSet::from_span(x.base, x.resolution, span);
    };
    return {mid(A.first, B.first), mid(A.second, B.second)};
}

GridSet set_union(const GridSet& a, const GridSet& b) {
    GridSet u = a;
    for (size_t k = 0; k < u.member.size(); ++k) u.member[k] |= b.member[k];
    return u;
}

}  // namespace

GridEquilibrium grid_equilibrium(const GameDefinition& game, const AttitudeProfile& profile,
                                 const OracleOptions& opt) {
    std::pair<GridSet, GridSet> state{
        GridSet::full(game.strategies(1), opt.strategy_resolution),
        GridSet::full(game.strategies(2), opt.strategy_resolution)};

    GridEquilibrium out;
    std::vector<std::pair<std::uint64_t, std::pair<GridSet, GridSet>>> history;

    for (int it = 0; it < opt.max_iter; ++it) {
        std::pair<GridSet, GridSet> next{
            grid_psi(game, 1, state.second, profile.p1, opt.type_resolution,
                     opt.strategy_resolution, opt.parallel),
            grid_psi(game, 2, state.first, profile.p2, opt.type_resolution,
                     opt.strategy_resolution, opt.parallel)};
        ++out.iterations;

        if (next == state) {
            out.X1 = next.first;
            out.X2 = next.second;
            out.fixed_point = true;
            return out;
        }

        const std::uint64_t h = state_hash(next.first, next.second);
        bool restarted = false;
        for (size_t back = 0; back < history.size(); ++back) {
            if (history[back].first == h && history[back].second == next) {
                const int period = static_cast<int>(history.size() - back);

                double drift = 0.0;
                for (size_t k = back; k < history.size(); ++k) {
                    const auto& s = history[k].second;
                    drift = std::max({drift,
                                      std::fabs(s.first.min_point() - next.first.min_point()),
                                      std::fabs(s.first.max_point() - next.first.max_point()),
                                      std::fabs(s.second.min_point() - next.second.min_point()),
                                      std::fabs(s.second.max_point() - next.second.max_point())});
                }
                const double cell = next.first.cell() + 1e-12;

                if (drift > cell && out.restarts < opt.cycle_restarts) {
                    ++out.restarts;
                    state = cycle_midpoint(next, history.back().second);
                    history.clear();
                    restarted = true;
                    break;
                }
                // report the cycle with the union of its states
                out.cycle = true;
                out.cycle_length = period;
                out.stable_within_cell = drift <= cell;
                std::pair<GridSet, GridSet> u = next;
                for (size_t k = back; k < history.size(); ++k) {
                    u.first = set_union(u.first, history[k].second.first);
                    u.second = set_union(u.second, history[k].second.second);
                }
                out.X1 = u.first;
                out.X2 = u.second;
                return out;
            }
        }
        if (restarted) continue;

        history.emplace_back(h, next);
        if (history.size() > 8) history.erase(history.begin());
        state = next;
    }

    out.X1 = state.first;
    out.X2 = state.second;
    return out;
}

// ---------------------------------------------------------------------------
// refined tier

namespace {

// Attitude-weighted value of x against an opponent interval, scanning the
// interval when no direction is declared.
double weighted_value(const GameDefinition& game, int player, double x, const Interval& opp,
                      double theta, double pi, int inner_scan) {
    double best, worst;
    switch (game.monotonicity(player)) {
        case OpponentMonotonicity::decreasing:
            best = game.reward_own(player, x, opp.lo, theta);
            worst = game.reward_own(player, x, opp.hi, theta);
            break;
        case OpponentMonotonicity::increasing:
            best = game.reward_own(player, x, opp.hi, theta);
            worst = game.reward_own(player, x, opp.lo, theta);
            break;
        default: {
            best = -kInf;
            worst = kInf;
            const int n = std::max(2, inner_scan);
            for (int m = 0; m < n; ++m) {
                const double xo =
                    m == n - 1 ? opp.hi : opp.lo + opp.width() * m / (n - 1);
                const double u = game.reward_own(player, x, xo, theta);
                best = std::max(best, u);
                worst = std::min(worst, u);
            }
            break;
        }
    }
    return pi * best + (1.0 - pi) * worst;
}

// Ternary refinement of a unimodal objective down to a small bracket, then
// one quadratic interpolation; comparison-only refinement is noise-bound
// near a flat maximum.
template <class F>
double ternary_argmax(F&& f, double lo, double hi, double xtol) {
    while (hi - lo > xtol) {
        const double third = (hi - lo) / 3.0;
        const double m1 = lo + third;
        const double m2 = hi - third;
        if (f(m1) < f(m2))
            lo = m1;
        else
            hi = m2;
    }
    const double m = 0.5 * (lo + hi);
    const double fl = f(lo), fm = f(m), fh = f(hi);
    const double num =
        (m - lo) * (m - lo) * (fm - fh) - (m - hi) * (m - hi) * (fm - fl);
    const double den = (m - lo) * (fm - fh) - (m - hi) * (fm - fl);
    double best = fm >= fl ? (fm >= fh ? m : hi) : (fl >= fh ? lo : hi);
    if (std::fabs(den) < 1e-300) return best;
    const double v = m - 0.5 * num / den;
    if (!(v >= lo && v <= hi)) return best;
    return f(v) >= std::max({fl, fm, fh}) ? v : best;
}

double refined_reply(const GameDefinition& game, int player, const Interval& opp, double theta,
                     double pi, const OracleOptions& opt) {
    const Interval& own = game.strategies(player);
    return ternary_argmax(
        [&](double x) {
            return weighted_value(game, player, x, opp, theta, pi, opt.inner_scan_resolution);
        },
        own.lo, own.hi, opt.x_tolerance);
}

std::array<double, 4> endpoint_sweep(const GameDefinition& game, const AttitudeProfile& profile,
                                     const std::array<double, 4>& s, const OracleOptions& opt) {
    std::array<double, 4> next{};
    for (int player = 1; player <= 2; ++player) {
        const Interval opp = player == 1 ? Interval(s[2], s[3]) : Interval(s[0], s[1]);
        const Interval& types = game.types(player);
        const int nt = types.is_singleton() ? 1 : std::max(2, opt.equilibrium_type_resolution);
        double lo = kInf, hi = -kInf;
        for (int b = 0; b < nt; ++b) {
            const double theta =
                nt == 1 ? types.lo
                        : (b == nt - 1 ? types.hi : types.lo + types.width() * b / (nt - 1));
            const double r =
                refined_reply(game, player, opp, theta, profile.of(player).value(), opt);
            lo = std::min(lo, r);
            hi = std::max(hi, r);
        }
        next[player == 1 ? 0 : 2] = lo;
        next[player == 1 ? 1 : 3] = hi;
    }
    return next;
}

double sup_diff(const std::array<double, 4>& a, const std::array<double, 4>& b) {
    double d = 0.0;
    for (int k = 0; k < 4; ++k) d = std::max(d, std::fabs(a[k] - b[k]));
    return d;
}

}  // namespace

EndpointEquilibrium endpoint_equilibrium(const GameDefinition& game,
                                         const AttitudeProfile& profile,
                                         const OracleOptions& opt,
                                         const EndpointEquilibrium* warm) {
    EndpointEquilibrium eq;
    eq.s = warm ? warm->s
                : std::array<double, 4>{game.strategies(1).lo, game.strategies(1).hi,
                                        game.strategies(2).lo, game.strategies(2).hi};

    std::array<double, 4> prev = eq.s;
    std::array<double, 4> prev2 = eq.s;

    for (int it = 0; it < opt.max_iter; ++it) {
        const std::array<double, 4> next = endpoint_sweep(game, profile, eq.s, opt);
        ++eq.iterations;
        const double step = sup_diff(next, eq.s);
        prev2 = prev;
        prev = eq.s;
        eq.s = next;
        if (step <= opt.endpoint_tolerance) {
            eq.converged = true;
            return eq;
        }
        // period-2 orbit: restart from the midpoint of the two states
        if (it >= 2 && sup_diff(eq.s, prev2) <= opt.endpoint_tolerance &&
            eq.restarts < opt.cycle_restarts) {
            ++eq.restarts;
            for (int k = 0; k < 4; ++k) eq.s[k] = 0.5 * (eq.s[k] + prev[k]);
            prev = eq.s;
            prev2 = eq.s;
        }
    }
    return eq;
}

double ex_post_value(const GameDefinition& game, const EndpointEquilibrium& eq, int player,
                     double theta_own, double theta_opp, const AttitudeProfile& profile,
                     const OracleOptions& opt) {
    const int opp = opponent_of(player);
    const double x_own = refined_reply(game, player, eq.of(opp), theta_own,
                                       profile.of(player).value(), opt);
    const double x_opp = refined_reply(game, opp, eq.of(player), theta_opp,
                                       profile.of(opp).value(), opt);
    return game.reward_own(player, x_own, x_opp, theta_own);
}

MaximinResult exhaustive_maximin(const GameDefinition& game, int player, double theta_i,
                                 int pi_resolution, int theta_j_resolution,
                                 const OracleOptions& opt) {
    require_player(player);
    if (pi_resolution < 2)
        throw std::invalid_argument("exhaustive_maximin: pi_resolution must be >= 2");
    const int opp = opponent_of(player);
    const Interval& opp_types = game.types(opp);
    const int nt = opp_types.is_singleton() ? 1 : std::max(2, theta_j_resolution);

    MaximinResult res;
    res.pi_resolution = pi_resolution;
    res.worst_case.assign(static_cast<size_t>(pi_resolution), -kInf);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (opt.parallel)
#endif
    for (int a = 0; a < pi_resolution; ++a) {
        const double pi_i =
            a == pi_resolution - 1 ? 1.0 : static_cast<double>(a) / (pi_resolution - 1);
        EndpointEquilibrium warm;
        bool have_warm = false;
        double row_min = kInf;
        bool row_ok = false;

        for (int b = 0; b < pi_resolution; ++b) {
            const double pi_j =
                b == pi_resolution - 1 ? 1.0 : static_cast<double>(b) / (pi_resolution - 1);
            const AttitudeProfile profile = player == 1 ? AttitudeProfile(pi_i, pi_j)
                                                        : AttitudeProfile(pi_j, pi_i);
            const EndpointEquilibrium eq =
                endpoint_equilibrium(game, profile, opt, have_warm ? &warm : nullptr);
            if (!eq.converged) continue;
            warm = eq;
            have_warm = true;

            const double x_i =
                refined_reply(game, player, eq.of(opp), theta_i, pi_i, opt);
            for (int c = 0; c < nt; ++c) {
                const double tj = nt == 1 ? opp_types.lo
                                          : (c == nt - 1 ? opp_types.hi
                                                         : opp_types.lo + opp_types.width() *
                                                                              c / (nt - 1));
                const double x_j = refined_reply(game, opp, eq.of(player), tj, pi_j, opt);
                row_min = std::min(row_min, game.reward_own(player, x_i, x_j, theta_i));
                row_ok = true;
            }
        }
        res.worst_case[static_cast<size_t>(a)] = row_ok ? row_min : -kInf;
    }

    size_t best = 0;
    for (size_t a = 1; a < res.worst_case.size(); ++a)
        if (res.worst_case[a] > res.worst_case[best]) best = a;
    res.pi_sharp = best == static_cast<size_t>(pi_resolution - 1)
                       ? 1.0
                       : static_cast<double>(best) / (pi_resolution - 1);
    res.value = res.worst_case[best];
    return res;
}

DominanceVerdict exhaustive_dominance(const GameDefinition& game, int player, double theta_i,
                                      int theta_j_resolution, const OracleOptions& opt) {
    require_player(player);
    const int opp = opponent_of(player);
    const Interval& opp_types = game.types(opp);
    const int nt = opp_types.is_singleton() ? 1 : std::max(2, theta_j_resolution);

    // the four profile equilibria, keyed by (own optimist, opp optimist)
    auto profile_for = [&](bool own_opt, bool opp_opt) {
        const double own = own_opt ? 1.0 : 0.0;
        const double other = opp_opt ? 1.0 : 0.0;
        return player == 1 ? AttitudeProfile(own, other) : AttitudeProfile(other, own);
    };
    std::array<EndpointEquilibrium, 4> eqs;
    for (int oo = 0; oo < 2; ++oo)
        for (int po = 0; po < 2; ++po) {
            eqs[static_cast<size_t>(oo * 2 + po)] =
                endpoint_equilibrium(game, profile_for(oo != 0, po != 0), opt);
            if (!eqs[static_cast<size_t>(oo * 2 + po)].converged)
                throw std::runtime_error("exhaustive_dominance: equilibrium did not converge");
        }
    auto eq_at = [&](bool own_opt, bool opp_opt) -> const EndpointEquilibrium& {
        return eqs[static_cast<size_t>((own_opt ? 2 : 0) + (opp_opt ? 1 : 0))];
    };

    DominanceVerdict v;
    v.min_margin_optimism = kInf;
    v.min_margin_pessimism = kInf;

    for (bool opp_opt : {true, false}) {
        const double pi_j = opp_opt ? 1.0 : 0.0;
        const EndpointEquilibrium& eq_O = eq_at(true, opp_opt);
        const EndpointEquilibrium& eq_P = eq_at(false, opp_opt);
        const double x_own_O = refined_reply(game, player, eq_O.of(opp), theta_i, 1.0, opt);
        const double x_own_P = refined_reply(game, player, eq_P.of(opp), theta_i, 0.0, opt);

        for (int c = 0; c < nt; ++c) {
            const double tj =
                nt == 1 ? opp_types.lo
                        : (c == nt - 1 ? opp_types.hi
                                       : opp_types.lo + opp_types.width() * c / (nt - 1));
            const double x_opp_O = refined_reply(game, opp, eq_O.of(player), tj, pi_j, opt);
            const double x_opp_P = refined_reply(game, opp, eq_P.of(player), tj, pi_j, opt);
            const double U_O = game.reward_own(player, x_own_O, x_opp_O, theta_i);
            const double U_P = game.reward_own(player, x_own_P, x_opp_P, theta_i);
            const double margin = U_O - U_P;
            if (margin < v.min_margin_optimism) {
                v.min_margin_optimism = margin;
                v.witness_theta_j = tj;
                v.witness_opp_optimist = opp_opt;
            }
            v.min_margin_pessimism = std::min(v.min_margin_pessimism, -margin);
        }
    }

    const bool opt_dom = v.min_margin_optimism >= -opt.margin_tolerance;
    const bool pess_dom = v.min_margin_pessimism >= -opt.margin_tolerance;
    if (opt_dom && pess_dom)
        v.verdict = Verdict::indifferent;
    else if (opt_dom)
        v.verdict = Verdict::optimism;
    else if (pess_dom)
        v.verdict = Verdict::pessimism;
    else
        v.verdict = Verdict::none;
    return v;
}

}  // namespace uneq::oracle
