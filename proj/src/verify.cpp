#include "uneq/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "uneq/attitude_game.hpp"
#include "uneq/cournot.hpp"
#include "uneq/externality.hpp"

namespace uneq::verify {

namespace {

double faulted(double value, FaultInjection which, FaultInjection active,
               double shift = 0.01) {
    return which == active ? value + shift : value;
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

VerifyCheck make_check(const std::string& name, double delta, double threshold,
                       const std::string& note = "") {
    return {name, delta, threshold, delta <= threshold, note};
}

std::vector<cournot::CournotParams> cournot_configs() {
    using cournot::CournotParams;
    return {
        CournotParams(0.2, 0.2, Interval(0.1, 0.3), Interval(0.1, 0.3)),
        CournotParams(0.15, 0.35, Interval(0.1, 0.3), Interval(0.2, 0.4)),
        CournotParams(0.25, 0.1, Interval(0.0, 0.5), Interval(0.05, 0.15)),
        CournotParams(0.45, 0.4, Interval(0.4, 0.5), Interval(0.3, 0.5)),
        CournotParams(0.05, 0.05, Interval(0.0, 0.1), Interval(0.0, 0.1)),
        CournotParams(0.45, 0.45, Interval(0.1, 0.45), Interval(0.1, 0.45)),
        // just above the optimism threshold 0.35: exercises the "no dominant
        // attitude" verdict and keeps the threshold comparison fault-sensitive
        CournotParams(0.355, 0.2, Interval(0.1, 0.45), Interval(0.1, 0.45)),
        CournotParams(0.3, 0.2, Interval::singleton(0.3), Interval::singleton(0.2)),
    };
}

// Threshold verdicts claim weak dominance; an enumerated tie (indifferent)
// does not contradict them.
bool verdicts_compatible(oracle::Verdict closed, oracle::Verdict enumerated) {
    if (closed == enumerated) return true;
    if (enumerated == oracle::Verdict::indifferent)
        return closed == oracle::Verdict::optimism || closed == oracle::Verdict::pessimism ||
               closed == oracle::Verdict::indifferent;
    return false;
}

std::vector<AttitudeProfile> discrete_profiles() {
    return {discrete_profile(true, true), discrete_profile(true, false),
            discrete_profile(false, true), discrete_profile(false, false)};
}

}  // namespace

FaultInjection fault_from_name(const std::string& name) {
    if (name.empty() || name == "none") return FaultInjection::none;
    if (name == "cournot-center") return FaultInjection::cournot_center;
    if (name == "cournot-radius") return FaultInjection::cournot_radius;
    if (name == "dominance-thresholds") return FaultInjection::dominance_thresholds;
    if (name == "robust-closed-form") return FaultInjection::robust_closed_form;
    if (name == "externality-oo-interval") return FaultInjection::externality_oo_interval;
    if (name == "bayesian-formula") return FaultInjection::bayesian_formula;
    throw std::invalid_argument("unknown fault name: " + name);
}

std::string fault_name(FaultInjection f) {
    switch (f) {
        case FaultInjection::none: return "none";
        case FaultInjection::cournot_center: return "cournot-center";
        case FaultInjection::cournot_radius: return "cournot-radius";
        case FaultInjection::dominance_thresholds: return "dominance-thresholds";
        case FaultInjection::robust_closed_form: return "robust-closed-form";
        case FaultInjection::externality_oo_interval: return "externality-oo-interval";
        case FaultInjection::bayesian_formula: return "bayesian-formula";
    }
    return "?";
}

VerifyReport verify_cournot_suite(const VerifyOptions& opt) {
    VerifyReport rep;
    const auto configs = cournot_configs();
    const auto profiles = discrete_profiles();
    const double cell = Interval(0.0, 0.5).width() / (opt.oracle.strategy_resolution - 1);

    // closed form vs interval solver, radius law, interim strategy containment
    {
        double d_endpoints = 0.0, d_radius = 0.0, d_interim = 0.0;
        for (const auto& p : configs) {
            const GameDefinition game = cournot::make_game(p);
            for (const auto& profile : profiles) {
                auto [C1, C2] = cournot::uncertainty_equilibrium_closed_form(p, profile);
                C1 = Interval(faulted(C1.lo, FaultInjection::cournot_center, opt.fault),
                              faulted(C1.hi, FaultInjection::cournot_center, opt.fault));
                const double r1 =
                    faulted(0.5 * C1.width(), FaultInjection::cournot_radius, opt.fault);
                const double r2 = 0.5 * C2.width();

                const UncertaintyEquilibrium eq =
                    solve_uncertainty_equilibrium(game, profile, std::nullopt, opt.solver);
                if (!eq.converged) {
                    rep.checks.push_back(make_check("cournot/solver-converged", 1.0, 0.0,
                                                    "solver failed to converge"));
                    continue;
                }
                d_endpoints = std::max({d_endpoints, std::fabs(eq.X1.lo - C1.lo),
                                        std::fabs(eq.X1.hi - C1.hi),
                                        std::fabs(eq.X2.lo - C2.lo),
                                        std::fabs(eq.X2.hi - C2.hi)});
                d_radius = std::max({d_radius, std::fabs(0.5 * eq.X1.width() - r1),
                                     std::fabs(0.5 * eq.X2.width() - r2)});

                const auto [x1, x2] = cournot::interim_strategy(p, profile);
                d_interim = std::max({d_interim, std::max(0.0, C1.lo - x1),
                                      std::max(0.0, x1 - C1.hi), std::max(0.0, C2.lo - x2),
                                      std::max(0.0, x2 - C2.hi)});
            }
        }
        rep.checks.push_back(
            make_check("cournot/closed-form-vs-solver-endpoints", d_endpoints, 1e-6));
        rep.checks.push_back(make_check("cournot/solver-radius-law", d_radius, 1e-8,
                                        "half-width must equal Delta/4"));
        rep.checks.push_back(
            make_check("cournot/interim-strategy-in-interval", d_interim, 1e-9));
    }

    // grid oracle vs solver endpoints, and width arbitration
    {
        double d_oracle = 0.0, d_width = 0.0;
        for (const auto& p : {configs[0], configs[1]}) {
            const GameDefinition game = cournot::make_game(p);
            for (const auto& profile : profiles) {
                const UncertaintyEquilibrium eq =
                    solve_uncertainty_equilibrium(game, profile, std::nullopt, opt.solver);
                const oracle::GridEquilibrium ge =
                    oracle::grid_equilibrium(game, profile, opt.oracle);
                const Interval H1 = ge.X1.hull();
                const Interval H2 = ge.X2.hull();
                d_oracle = std::max({d_oracle, std::fabs(H1.lo - eq.X1.lo),
                                     std::fabs(H1.hi - eq.X1.hi), std::fabs(H2.lo - eq.X2.lo),
                                     std::fabs(H2.hi - eq.X2.hi)});
                const double w1 =
                    faulted(p.delta(1) / 2.0, FaultInjection::cournot_radius, opt.fault);
                d_width = std::max(d_width, std::fabs(H1.width() - w1));
            }
        }
        rep.checks.push_back(
            make_check("cournot/grid-oracle-vs-solver-endpoints", d_oracle, 2.0 * cell));
        rep.checks.push_back(make_check("cournot/grid-oracle-width-arbitration", d_width,
                                        2.0 * cell,
                                        "grid image width must match the full Delta/2 span"));
    }

    // singleton types reproduce the full-information equilibrium, attitude-free
    {
        double d = 0.0;
        for (double t1 : {0.1, 0.3}) {
            for (double t2 : {0.2, 0.45}) {
                const cournot::CournotParams p(t1, t2, Interval::singleton(t1),
                                               Interval::singleton(t2));
                const GameDefinition game = cournot::make_game(p);
                const auto nash = cournot::nash_equilibrium(p);
                for (double pi1 : {0.0, 0.5, 1.0}) {
                    for (double pi2 : {0.0, 1.0}) {
                        const UncertaintyEquilibrium eq = solve_uncertainty_equilibrium(
                            game, AttitudeProfile(pi1, pi2), std::nullopt, opt.solver);
                        d = std::max({d, std::fabs(eq.X1.lo - nash.x1),
                                      std::fabs(eq.X1.hi - nash.x1),
                                      std::fabs(eq.X2.lo - nash.x2),
                                      std::fabs(eq.X2.hi - nash.x2)});
                    }
                }
            }
        }
        rep.checks.push_back(make_check("cournot/singleton-coincides-with-nash", d, 1e-8));
    }

    // dominance thresholds vs exhaustive enumeration
    {
        int mismatches = 0;
        std::string note;
        for (const auto& p : configs) {
            for (int player = 1; player <= 2; ++player) {
                auto th = cournot::dominance_thresholds(p, player);
                th.theta_lo = faulted(th.theta_lo, FaultInjection::dominance_thresholds, opt.fault);
                const double theta = p.theta(player);
                oracle::Verdict closed;
                if (p.delta(1) == 0.0 && p.delta(2) == 0.0)
                    closed = oracle::Verdict::indifferent;
                else if (theta <= th.theta_lo)
                    closed = oracle::Verdict::optimism;
                else if (theta >= th.theta_hi)
                    closed = oracle::Verdict::pessimism;
                else
                    closed = oracle::Verdict::none;

                const GameDefinition game = cournot::make_game(p);
                const auto ex = oracle::exhaustive_dominance(game, player, theta, 33, opt.oracle);
                if (!verdicts_compatible(closed, ex.verdict)) {
                    ++mismatches;
                    if (note.empty())
                        note = "player " + std::to_string(player) + " at theta=" + fmt(theta);
                }
            }
        }
        rep.checks.push_back(make_check("cournot/dominance-thresholds-vs-enumeration",
                                        static_cast<double>(mismatches), 0.0, note));
    }

    // robust attitude closed form vs exhaustive maximin
    {
        double d = 0.0;
        const int n = opt.maximin_pi_resolution;
        const double step = 1.0 / (n - 1);
        const std::vector<cournot::CournotParams> robust_cases = {
            cournot::CournotParams(0.4, 0.25, Interval(0.2, 0.5), Interval(0.0, 0.5)),
            cournot::CournotParams(0.2, 0.2, Interval(0.1, 0.3), Interval(0.1, 0.3)),
        };
        for (const auto& p : robust_cases) {
            const GameDefinition game = cournot::make_game(p);
            for (int player = 1; player <= 2; ++player) {
                const double closed = faulted(
                    std::clamp(cournot::robust_attitude_closed_form(p, player), 0.0, 1.0),
                    FaultInjection::robust_closed_form, opt.fault, 0.2);
                const auto mm = oracle::exhaustive_maximin(game, player, p.theta(player), n,
                                                           17, opt.oracle);
                d = std::max(d, std::fabs(mm.pi_sharp - closed));
            }
        }
        rep.checks.push_back(make_check("cournot/robust-attitude-vs-maximin", d,
                                        1.5 * step + 1e-9));
    }

    // probabilistic benchmark satisfies its first-order conditions
    {
        double d = 0.0;
        for (double mu1 : {0.1, 0.3}) {
            for (double mu2 : {0.2, 0.4}) {
                for (double t1 : {0.05, 0.25}) {
                    for (double t2 : {0.15, 0.45}) {
                        auto [x1, x2] = cournot::bayesian_equilibrium(mu1, mu2, t1, t2);
                        x1 = faulted(x1, FaultInjection::bayesian_formula, opt.fault);
                        const double ex1 = (1.0 - 2.0 * mu1 + mu2) / 3.0;
                        const double ex2 = (1.0 - 2.0 * mu2 + mu1) / 3.0;
                        d = std::max({d, std::fabs(x1 - (1.0 - ex2 - t1) / 2.0),
                                      std::fabs(x2 - (1.0 - ex1 - t2) / 2.0)});
                    }
                }
            }
        }
        rep.checks.push_back(make_check("cournot/bayesian-first-order-conditions", d, 1e-12));
    }

    return rep;
}

VerifyReport verify_externality_suite(const VerifyOptions& opt) {
    VerifyReport rep;
    const externality::ExternalityParams base(0.3, 0.4, 0.2, 0.45);
    const GameDefinition game = externality::make_game(base);
    const double cell = 1.0 / (opt.oracle.strategy_resolution - 1);

    // closed-form sets and strategies vs interval solver, all four profiles
    {
        double d_oo = 0.0, d_rest = 0.0;
        for (bool o1 : {true, false}) {
            for (bool o2 : {true, false}) {
                const auto closed = externality::profile_equilibrium(base, o1, o2);
                const UncertaintyEquilibrium eq = solve_uncertainty_equilibrium(
                    game, discrete_profile(o1, o2), std::nullopt, opt.solver);
                if (!eq.converged) {
                    rep.checks.push_back(make_check("externality/solver-converged", 1.0, 0.0));
                    continue;
                }
                Interval c1 = closed.set1;
                Interval c2 = closed.set2;
                if (o1 && o2) {
                    c1 = Interval(
                        faulted(c1.lo, FaultInjection::externality_oo_interval, opt.fault),
                        faulted(c1.hi, FaultInjection::externality_oo_interval, opt.fault));
                    const EquilibriumOutcome out = ex_post_outcome(
                        game, eq, base.theta1, base.theta2, discrete_profile(o1, o2),
                        opt.solver);
                    d_oo = std::max({d_oo, std::fabs(eq.X1.lo - c1.lo),
                                     std::fabs(eq.X1.hi - c1.hi),
                                     std::fabs(out.x1 - closed.x1),
                                     std::fabs(out.x2 - closed.x2)});
                } else {
                    d_rest = std::max({d_rest, std::fabs(eq.X1.lo - c1.lo),
                                       std::fabs(eq.X1.hi - c1.hi),
                                       std::fabs(eq.X2.lo - c2.lo),
                                       std::fabs(eq.X2.hi - c2.hi)});
                }
            }
        }
        rep.checks.push_back(make_check("externality/oo-closed-form-vs-solver", d_oo, 1e-6));
        rep.checks.push_back(
            make_check("externality/other-profiles-closed-form-vs-solver", d_rest, 1e-6));
    }

    // grid oracle vs solver
    {
        double d = 0.0;
        for (bool o1 : {true, false}) {
            for (bool o2 : {true, false}) {
                const UncertaintyEquilibrium eq = solve_uncertainty_equilibrium(
                    game, discrete_profile(o1, o2), std::nullopt, opt.solver);
                const oracle::GridEquilibrium ge =
                    oracle::grid_equilibrium(game, discrete_profile(o1, o2), opt.oracle);
                const Interval H1 = ge.X1.hull();
                const Interval H2 = ge.X2.hull();
                d = std::max({d, std::fabs(H1.lo - eq.X1.lo), std::fabs(H1.hi - eq.X1.hi),
                              std::fabs(H2.lo - eq.X2.lo), std::fabs(H2.hi - eq.X2.hi)});
            }
        }
        rep.checks.push_back(make_check("externality/grid-oracle-vs-solver", d, 2.0 * cell));
    }

    // consistent sets collapse to [0, beta]
    {
        const ConsistentSets cs = solve_consistent_sets(game, std::nullopt, opt.solver);
        const double d =
            std::max({std::fabs(cs.X1.lo - 0.0), std::fabs(cs.X1.hi - base.beta),
                      std::fabs(cs.X2.lo - 0.0), std::fabs(cs.X2.hi - base.beta)});
        rep.checks.push_back(make_check("externality/consistent-sets", d, 1e-6));
    }

    // only mutual optimism survives as a stable attitude profile
    {
        int bad = 0;
        const auto eqs = attitude::solve_profile_equilibria(game, opt.solver);
        for (double t1 : {0.2, 0.325, 0.45}) {
            for (double t2 : {0.2, 0.325, 0.45}) {
                const auto m = attitude::build_attitude_matrix(game, t1, t2, eqs, opt.solver);
                const auto nash = attitude::pure_nash_profiles(m);
                if (nash.size() != 1 || nash.front() != std::make_pair(true, true)) ++bad;
            }
        }
        rep.checks.push_back(make_check("externality/unique-optimism-nash",
                                        static_cast<double>(bad), 0.0));
    }

    // enumeration agrees that optimism dominates
    {
        int bad = 0;
        for (double t : {0.2, 0.3, 0.45}) {
            const externality::ExternalityParams p(t, 0.4, 0.2, 0.45);
            const GameDefinition g = externality::make_game(p);
            const auto v = oracle::exhaustive_dominance(g, 1, t, 17, opt.oracle);
            if (v.verdict != oracle::Verdict::optimism) ++bad;
        }
        rep.checks.push_back(make_check("externality/enumerated-optimism-dominance",
                                        static_cast<double>(bad), 0.0));
    }

    return rep;
}

VerifyReport verify_all(const VerifyOptions& opt) {
    VerifyReport rep = verify_cournot_suite(opt);
    VerifyReport ext = verify_externality_suite(opt);
    rep.checks.insert(rep.checks.end(), ext.checks.begin(), ext.checks.end());
    return rep;
}

std::string render_report(const VerifyReport& report) {
    std::ostringstream os;
    os << "verification checks\n";
    os << "-------------------\n";
    for (const auto& c : report.checks) {
        os << (c.pass ? "pass" : "FAIL") << "  " << c.name << "  delta=" << fmt(c.delta)
           << " threshold=" << fmt(c.threshold);
        if (!c.note.empty()) os << "  (" << c.note << ")";
        os << "\n";
    }
    os << (report.all_pass() ? "all checks passed\n" : "VERIFICATION FAILED\n");
    return os.str();
}

}  // namespace uneq::verify
