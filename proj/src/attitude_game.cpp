#include "uneq/attitude_game.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace uneq::attitude {

namespace {

constexpr std::array<std::pair<bool, bool>, 4> kProfileOrder = {
    std::pair<bool, bool>{true, true},
    {true, false},
    {false, true},
    {false, false},
};

}  // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::optimism: return "optimism";
        case Verdict::pessimism: return "pessimism";
        case Verdict::none: return "none";
        case Verdict::indifferent: return "indifferent";
    }
    return "?";
}

std::array<UncertaintyEquilibrium, 4> solve_profile_equilibria(const GameDefinition& game,
                                                               const SolverOptions& opt) {
    std::array<UncertaintyEquilibrium, 4> eqs;
    for (const auto& [o1, o2] : kProfileOrder) {
        eqs[static_cast<size_t>(AttitudeMatrix::index(o1, o2))] =
            solve_uncertainty_equilibrium(game, discrete_profile(o1, o2), std::nullopt, opt);
    }
    return eqs;
}

AttitudeMatrix build_attitude_matrix(const GameDefinition& game, double theta1, double theta2,
                                     const std::array<UncertaintyEquilibrium, 4>& equilibria,
                                     const SolverOptions& opt) {
    AttitudeMatrix m;
    m.theta1 = theta1;
    m.theta2 = theta2;
    for (const auto& [o1, o2] : kProfileOrder) {
        const int idx = AttitudeMatrix::index(o1, o2);
        const auto& eq = equilibria[static_cast<size_t>(idx)];
        MatrixEntry& e = m.entries[static_cast<size_t>(idx)];
        e.status = eq.status;
        if (!eq.converged) continue;  // poisoned entry, ok stays false
        const EquilibriumOutcome out =
            ex_post_outcome(game, eq, theta1, theta2, discrete_profile(o1, o2), opt);
        e.U1 = out.U1;
        e.U2 = out.U2;
        e.x1 = out.x1;
        e.x2 = out.x2;
        e.ok = true;
    }
    return m;
}

AttitudeMatrix build_attitude_matrix(const GameDefinition& game, double theta1, double theta2,
                                     const SolverOptions& opt) {
    return build_attitude_matrix(game, theta1, theta2, solve_profile_equilibria(game, opt), opt);
}

namespace {

void require_complete(const AttitudeMatrix& m, const char* who) {
    if (!m.complete())
        throw std::invalid_argument(std::string(who) + ": matrix has a non-converged entry");
}

bool is_nash_at(const AttitudeMatrix& m, bool o1, bool o2, double eps, bool strict) {
    const MatrixEntry& here = m.at(o1, o2);
    const double gain1 = m.at(!o1, o2).U1 - here.U1;
    const double gain2 = m.at(o1, !o2).U2 - here.U2;
    if (strict) return gain1 < -eps && gain2 < -eps;
    return gain1 <= eps && gain2 <= eps;
}

}  // namespace

std::vector<std::pair<bool, bool>> pure_nash_profiles(const AttitudeMatrix& m, double eps) {
    require_complete(m, "pure_nash_profiles");
    std::vector<std::pair<bool, bool>> out;
    for (const auto& [o1, o2] : kProfileOrder)
        if (is_nash_at(m, o1, o2, eps, false)) out.emplace_back(o1, o2);
    return out;
}

std::vector<std::pair<bool, bool>> strict_nash_profiles(const AttitudeMatrix& m, double eps) {
    require_complete(m, "strict_nash_profiles");
    std::vector<std::pair<bool, bool>> out;
    for (const auto& [o1, o2] : kProfileOrder)
        if (is_nash_at(m, o1, o2, eps, true)) out.emplace_back(o1, o2);
    return out;
}

DominanceReport dominance_analysis_grid(const GameDefinition& game, int player, double theta_i,
                                        int theta_j_grid, const SolverOptions& opt, double eps) {
    require_player(player);
    if (theta_j_grid < 2) theta_j_grid = 2;
    const int opp = opponent_of(player);
    const Interval& opp_types = game.types(opp);

    const auto eqs = solve_profile_equilibria(game, opt);
    for (const auto& eq : eqs)
        if (!eq.converged)
            throw std::runtime_error("dominance_analysis_grid: profile solve did not converge");

    // Own strategy per profile; the opponent's realised type never enters it.
    auto own_strategy = [&](bool own_opt, bool opp_opt) {
        const auto& eq =
            eqs[static_cast<size_t>(player == 1 ? AttitudeMatrix::index(own_opt, opp_opt)
                                                : AttitudeMatrix::index(opp_opt, own_opt))];
        return best_response(game, player, eq.of(opp), theta_i,
                             own_opt ? optimism() : pessimism(), opt.search)
            .x;
    };

    DominanceReport rep;
    rep.player = player;
    rep.method = DominanceReport::Method::grid;
    rep.theta_j_grid = theta_j_grid;
    rep.min_margin_optimism = std::numeric_limits<double>::infinity();
    rep.min_margin_pessimism = std::numeric_limits<double>::infinity();

    for (bool opp_opt : {true, false}) {
        const double x_own_O = own_strategy(true, opp_opt);
        const double x_own_P = own_strategy(false, opp_opt);
        const auto& eq_O =
            eqs[static_cast<size_t>(player == 1 ? AttitudeMatrix::index(true, opp_opt)
                                                : AttitudeMatrix::index(opp_opt, true))];
        const auto& eq_P =
            eqs[static_cast<size_t>(player == 1 ? AttitudeMatrix::index(false, opp_opt)
                                                : AttitudeMatrix::index(opp_opt, false))];

        for (int k = 0; k < theta_j_grid; ++k) {
            const double tj = opp_types.is_singleton()
                                  ? opp_types.lo
                                  : (k == theta_j_grid - 1
                                         ? opp_types.hi
                                         : opp_types.lo +
                                               opp_types.width() * k / (theta_j_grid - 1));
            const Attitude opp_att = opp_opt ? optimism() : pessimism();
            const double x_opp_O =
                best_response(game, opp, eq_O.of(player), tj, opp_att, opt.search).x;
            const double x_opp_P =
                best_response(game, opp, eq_P.of(player), tj, opp_att, opt.search).x;

            const double U_O = game.reward_own(player, x_own_O, x_opp_O, theta_i);
            const double U_P = game.reward_own(player, x_own_P, x_opp_P, theta_i);
            const double margin = U_O - U_P;

            if (margin < rep.min_margin_optimism) {
                rep.min_margin_optimism = margin;
                rep.witness_theta_j = tj;
                rep.witness_opp_optimist = opp_opt;
            }
            rep.min_margin_pessimism = std::min(rep.min_margin_pessimism, -margin);
            if (opp_types.is_singleton()) break;
        }
    }

    const bool opt_dominant = rep.min_margin_optimism >= -eps;
    const bool pess_dominant = rep.min_margin_pessimism >= -eps;
    if (opt_dominant && pess_dominant)
        rep.verdict = Verdict::indifferent;
    else if (opt_dominant)
        rep.verdict = Verdict::optimism;
    else if (pess_dominant)
        rep.verdict = Verdict::pessimism;
    else
        rep.verdict = Verdict::none;
    rep.strict = (opt_dominant && rep.min_margin_optimism > eps) ||
                 (pess_dominant && rep.min_margin_pessimism > eps);
    return rep;
}

DominanceReport dominance_analysis_closed_form(const cournot::CournotParams& p, int player) {
    DominanceReport rep;
    rep.player = player;
    rep.method = DominanceReport::Method::closed_form;
    rep.thresholds = cournot::dominance_thresholds(p, player);
    switch (cournot::dominant_attitude(p, player)) {
        case cournot::AttitudeVerdict::optimism: rep.verdict = Verdict::optimism; break;
        case cournot::AttitudeVerdict::pessimism: rep.verdict = Verdict::pessimism; break;
        case cournot::AttitudeVerdict::none: rep.verdict = Verdict::none; break;
        case cournot::AttitudeVerdict::indifferent: rep.verdict = Verdict::indifferent; break;
    }
    rep.strict = rep.verdict == Verdict::optimism
                     ? p.theta(player) < rep.thresholds->theta_lo
                     : (rep.verdict == Verdict::pessimism &&
                        p.theta(player) > rep.thresholds->theta_hi);
    return rep;
}

ParetoReport pareto_analysis(const AttitudeMatrix& m, double eps) {
    require_complete(m, "pareto_analysis");
    ParetoReport rep;
    for (int q = 0; q < 4; ++q) {
        for (int p = 0; p < 4; ++p) {
            if (p == q) continue;
            const auto& eq = m.entries[static_cast<size_t>(q)];
            const auto& ep = m.entries[static_cast<size_t>(p)];
            const bool weak1 = eq.U1 >= ep.U1 - eps;
            const bool weak2 = eq.U2 >= ep.U2 - eps;
            const bool strict = eq.U1 > ep.U1 + eps || eq.U2 > ep.U2 + eps;
            if (weak1 && weak2 && strict) {
                rep.superior[static_cast<size_t>(q)][static_cast<size_t>(p)] = true;
                rep.dominated[static_cast<size_t>(p)] = true;
            }
        }
    }
    return rep;
}

PrisonersDilemmaCertificate classify_prisoners_dilemma(const cournot::CournotParams& p,
                                                       const SolverOptions& opt) {
    if (!p.symmetric())
        throw std::invalid_argument(
            "classify_prisoners_dilemma: requires a symmetric game (Theta1 == Theta2)");
    if (p.delta(1) == 0.0)
        throw std::invalid_argument(
            "classify_prisoners_dilemma: type interval must have non-zero length");

    const double alpha = p.alpha(1);
    const double beta = p.beta(1);

    PrisonersDilemmaCertificate cert;
    cert.beta_bound = std::max(1.0 / 3.0, 2.0 * alpha);
    cert.is_pd = beta <= cert.beta_bound;

    const GameDefinition game = cournot::make_game(p);
    cert.matrix = build_attitude_matrix(game, p.theta1, p.theta2, opt);
    const auto nash = pure_nash_profiles(cert.matrix);
    cert.pp_not_nash =
        std::find(nash.begin(), nash.end(), std::make_pair(false, false)) == nash.end();
    const auto pareto = pareto_analysis(cert.matrix);
    const auto pp = static_cast<size_t>(AttitudeMatrix::index(false, false));
    const auto oo = static_cast<size_t>(AttitudeMatrix::index(true, true));
    cert.pp_pareto_efficient = !pareto.dominated[pp];
    cert.pp_superior_to_oo = pareto.superior[pp][oo] ||
                             (cert.matrix.entries[pp].U1 >= cert.matrix.entries[oo].U1 - 1e-9 &&
                              cert.matrix.entries[pp].U2 >= cert.matrix.entries[oo].U2 - 1e-9);
    cert.oo_unique_nash = nash.size() == 1 && nash.front() == std::make_pair(true, true);
    return cert;
}

RobustAttitudeResult robust_attitude(const GameDefinition& game, int player, double theta_i,
                                     const RobustOptions& opt) {
    require_player(player);
    if (opt.pi_grid < 2) throw std::invalid_argument("robust_attitude: pi_grid must be >= 2");
    const int opp = opponent_of(player);
    const Interval& opp_types = game.types(opp);

    const int n = opt.pi_grid;
    const int nj = opt.pi_grid;
    std::vector<double> worst(static_cast<size_t>(n),
                              std::numeric_limits<double>::infinity());

    const int nt = opt.type_mode == OpponentTypeMode::fixed || opp_types.is_singleton()
                       ? 1
                       : std::max(2, opt.theta_j_grid);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int a = 0; a < n; ++a) {
        const double pi_i = a == n - 1 ? 1.0 : static_cast<double>(a) / (n - 1);
        std::optional<std::pair<Interval, Interval>> warm;
        double row_min = std::numeric_limits<double>::infinity();
        bool row_ok = false;
        try {
        for (int b = 0; b < nj; ++b) {
            const double pi_j = b == nj - 1 ? 1.0 : static_cast<double>(b) / (nj - 1);
            const AttitudeProfile profile = player == 1 ? AttitudeProfile(pi_i, pi_j)
                                                        : AttitudeProfile(pi_j, pi_i);
            const UncertaintyEquilibrium eq =
                solve_uncertainty_equilibrium(game, profile, warm, opt.solver);
            if (!eq.converged) continue;
            warm = std::make_pair(eq.X1, eq.X2);

            const double x_i = best_response(game, player, eq.of(opp), theta_i,
                                             Attitude(pi_i), opt.solver.search)
                                   .x;
            for (int c = 0; c < nt; ++c) {
                const double tj =
                    nt == 1 ? (opt.type_mode == OpponentTypeMode::fixed ? opt.fixed_theta_j
                                                                        : opp_types.lo)
                            : (c == nt - 1 ? opp_types.hi
                                           : opp_types.lo + opp_types.width() * c / (nt - 1));
                const double x_j = best_response(game, opp, eq.of(player), tj,
                                                 Attitude(pi_j), opt.solver.search)
                                       .x;
                row_min = std::min(row_min,
                                   game.reward_own(player, x_i, x_j, theta_i));
                row_ok = true;
            }
        }
        } catch (const std::exception&) {
            row_ok = false;
        }
        worst[static_cast<size_t>(a)] =
            row_ok ? row_min : -std::numeric_limits<double>::infinity();
    }

    RobustAttitudeResult res;
    res.worst_case = std::move(worst);
    size_t best = 0;
    for (size_t a = 1; a < res.worst_case.size(); ++a)
        if (res.worst_case[a] > res.worst_case[best]) best = a;
    res.pi_sharp = best == static_cast<size_t>(n - 1) ? 1.0
                                                      : static_cast<double>(best) / (n - 1);
    res.value = res.worst_case[best];
    return res;
}

namespace {

// tuple layout: cournot {a1, b1, a2, b2, th1, th2}; externality {alpha, beta, th1, th2, 0, 0}
NoMutualPessimismReport run_pessimism_check(
    const std::vector<std::array<double, 6>>& tuples, bool cournot_family, int theta_j_grid,
    const SolverOptions& opt) {
    NoMutualPessimismReport rep;
    rep.samples = static_cast<int>(tuples.size());

    std::vector<std::array<Verdict, 2>> verdicts(tuples.size(),
                                                 {Verdict::none, Verdict::none});
    std::vector<char> skipped(tuples.size(), 0);
    std::vector<std::string> errors(tuples.size());

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (size_t s = 0; s < tuples.size(); ++s) {
        try {
            const auto& t = tuples[s];
            GameDefinition game;
            double th1, th2;
            if (cournot_family) {
                const Interval T1(t[0], t[1]);
                const Interval T2(t[2], t[3]);
                th1 = t[4];
                th2 = t[5];
                if (T1.is_singleton() && T2.is_singleton()) {
                    skipped[s] = 1;
                    continue;
                }
                game = cournot::make_game(cournot::CournotParams(th1, th2, T1, T2));
            } else {
                th1 = t[2];
                th2 = t[3];
                game = externality::make_game(
                    externality::ExternalityParams(th1, th2, t[0], t[1]));
            }
            for (int player = 1; player <= 2; ++player) {
                const double theta = player == 1 ? th1 : th2;
                verdicts[s][static_cast<size_t>(player - 1)] =
                    dominance_analysis_grid(game, player, theta, theta_j_grid, opt).verdict;
            }
        } catch (const std::exception& e) {
            skipped[s] = 1;
            errors[s] = e.what();
        }
    }

    for (size_t s = 0; s < tuples.size(); ++s) {
        if (skipped[s]) {
            ++rep.skipped;
            if (!errors[s].empty())
                rep.counterexamples.push_back({"tuple " + std::to_string(s) +
                                               " skipped with error: " + errors[s]});
            continue;
        }
        const bool p1 = verdicts[s][0] == Verdict::pessimism;
        const bool p2 = verdicts[s][1] == Verdict::pessimism;
        if (p1 || p2) ++rep.pessimism_any;
        if (p1 && p2) {
            ++rep.mutual_pessimism;
            std::ostringstream msg;
            msg << "tuple " << s << ": (" << tuples[s][0] << ", " << tuples[s][1] << ", "
                << tuples[s][2] << ", " << tuples[s][3] << ") pessimism dominant for both";
            rep.counterexamples.push_back({msg.str()});
        } else if (!cournot_family && (p1 || p2)) {
            std::ostringstream msg;
            msg << "tuple " << s << ": pessimism dominant for player " << (p1 ? 1 : 2);
            rep.counterexamples.push_back({msg.str()});
        }
    }
    return rep;
}

}  // namespace

NoMutualPessimismReport check_no_mutual_pessimism_cournot(int samples, std::uint64_t seed,
                                                          int theta_j_grid,
                                                          const SolverOptions& opt) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 0.5);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    std::vector<std::array<double, 6>> tuples;
    tuples.reserve(static_cast<size_t>(samples));
    while (static_cast<int>(tuples.size()) < samples) {
        double a1 = u(rng), b1 = u(rng), a2 = u(rng), b2 = u(rng);
        if (a1 > b1) std::swap(a1, b1);
        if (a2 > b2) std::swap(a2, b2);
        if (b1 - a1 < 1e-3 && b2 - a2 < 1e-3) continue;  // effectively degenerate
        const double th1 = a1 + (b1 - a1) * u01(rng);
        const double th2 = a2 + (b2 - a2) * u01(rng);
        tuples.push_back({a1, b1, a2, b2, th1, th2});
    }
    return run_pessimism_check(tuples, true, theta_j_grid, opt);
}

NoMutualPessimismReport check_no_pessimism_externality(int samples, std::uint64_t seed,
                                                       int theta_j_grid,
                                                       const SolverOptions& opt) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    std::vector<std::array<double, 6>> tuples;
    tuples.reserve(static_cast<size_t>(samples));
    while (static_cast<int>(tuples.size()) < samples) {
        const double alpha = 0.02 + 0.28 * u01(rng);
        const double beta = 2.0 * alpha + (0.98 - 2.0 * alpha) * u01(rng);
        if (beta <= 2.0 * alpha || beta >= 1.0) continue;
        const double th1 = alpha + (beta - alpha) * u01(rng);
        const double th2 = alpha + (beta - alpha) * u01(rng);
        tuples.push_back({alpha, beta, th1, th2, 0.0, 0.0});
    }
    return run_pessimism_check(tuples, false, theta_j_grid, opt);
}

}  // namespace uneq::attitude
