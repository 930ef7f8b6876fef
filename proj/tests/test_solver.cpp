#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "uneq/cournot.hpp"
#include "uneq/externality.hpp"
#include "uneq/solver.hpp"

using namespace uneq;

namespace {

const cournot::CournotParams kCournot(0.2, 0.2, Interval(0.1, 0.3), Interval(0.1, 0.3));
const externality::ExternalityParams kExt(0.3, 0.4, 0.2, 0.45);

}  // namespace

TEST_CASE("cournot equilibrium matches the interval closed form") {
    const GameDefinition g = cournot::make_game(kCournot);
    const UncertaintyEquilibrium eq =
        solve_uncertainty_equilibrium(g, discrete_profile(true, true));
    REQUIRE(eq.converged);
    CHECK(eq.X1.lo == doctest::Approx(0.7 / 3.0).epsilon(1e-8));
    CHECK(eq.X1.hi == doctest::Approx(1.0 / 3.0).epsilon(1e-8));
    CHECK(eq.X2.lo == doctest::Approx(0.7 / 3.0).epsilon(1e-8));
    CHECK(eq.residual <= 1e-10);

    // all four discrete profiles against the closed form
    for (bool o1 : {true, false}) {
        for (bool o2 : {true, false}) {
            const auto profile = discrete_profile(o1, o2);
            const auto [C1, C2] = cournot::uncertainty_equilibrium_closed_form(kCournot, profile);
            const UncertaintyEquilibrium e = solve_uncertainty_equilibrium(g, profile);
            REQUIRE(e.converged);
            CHECK(e.X1.lo == doctest::Approx(C1.lo).epsilon(1e-7));
            CHECK(e.X1.hi == doctest::Approx(C1.hi).epsilon(1e-7));
            CHECK(e.X2.lo == doctest::Approx(C2.lo).epsilon(1e-7));
            CHECK(e.X2.hi == doctest::Approx(C2.hi).epsilon(1e-7));
        }
    }
}

TEST_CASE("singleton types reproduce the certainty equilibrium for any attitudes") {
    const cournot::CournotParams p(0.1, 0.2, Interval::singleton(0.1),
                                   Interval::singleton(0.2));
    const GameDefinition g = cournot::make_game(p);
    const auto nash = cournot::nash_equilibrium(p);
    CHECK(nash.x1 == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(nash.x2 == doctest::Approx(7.0 / 30.0).epsilon(1e-14));

    double spread = 0.0;
    for (double pi1 : {0.0, 0.25, 0.5, 1.0}) {
        for (double pi2 : {0.0, 0.75, 1.0}) {
            const UncertaintyEquilibrium eq =
                solve_uncertainty_equilibrium(g, AttitudeProfile(pi1, pi2));
            REQUIRE(eq.converged);
            CHECK(eq.X1.is_singleton(1e-9));
            CHECK(eq.X1.lo == doctest::Approx(nash.x1).epsilon(1e-8));
            CHECK(eq.X2.lo == doctest::Approx(nash.x2).epsilon(1e-8));
            spread = std::max(spread, std::fabs(eq.X1.lo - nash.x1));
        }
    }
    CHECK(spread <= 1e-8);
}

TEST_CASE("externality equilibria for the discrete profiles") {
    const GameDefinition g = externality::make_game(kExt);

    const UncertaintyEquilibrium oo =
        solve_uncertainty_equilibrium(g, discrete_profile(true, true));
    REQUIRE(oo.converged);
    CHECK(oo.X1.lo == doctest::Approx(0.1).epsilon(1e-8));
    CHECK(oo.X1.hi == doctest::Approx(0.35).epsilon(1e-8));
    CHECK(oo.damping_activated);  // endpoint map flips sign, averaging kicks in

    const UncertaintyEquilibrium op =
        solve_uncertainty_equilibrium(g, discrete_profile(true, false));
    REQUIRE(op.converged);
    CHECK(op.X1.lo == doctest::Approx(0.2).epsilon(1e-8));
    CHECK(op.X1.hi == doctest::Approx(0.45).epsilon(1e-8));
    CHECK(op.X2.lo == doctest::Approx(0.0).epsilon(1e-8));
    CHECK(op.X2.hi == doctest::Approx(0.0).epsilon(1e-8));

    const UncertaintyEquilibrium pp =
        solve_uncertainty_equilibrium(g, discrete_profile(false, false));
    REQUIRE(pp.converged);
    CHECK(pp.X1.lo == doctest::Approx(0.0).epsilon(1e-8));
    CHECK(pp.X1.hi == doctest::Approx(0.225).epsilon(1e-8));
}

TEST_CASE("oscillation is reported when damping is disabled") {
    const GameDefinition g = externality::make_game(kExt);
    SolverOptions opt;
    opt.auto_damping = false;
    opt.max_iter = 60;
    const UncertaintyEquilibrium eq =
        solve_uncertainty_equilibrium(g, discrete_profile(true, true), std::nullopt, opt);
    CHECK_FALSE(eq.converged);
    CHECK(eq.status == SolveStatus::oscillating);
}

TEST_CASE("consistent sets") {
    const GameDefinition ge = externality::make_game(kExt);
    const ConsistentSets ce = solve_consistent_sets(ge);
    REQUIRE(ce.converged);
    CHECK(ce.X1.lo == doctest::Approx(0.0).epsilon(1e-7));
    CHECK(ce.X1.hi == doctest::Approx(0.45).epsilon(1e-7));
    CHECK(ce.X2.lo == doctest::Approx(0.0).epsilon(1e-7));
    CHECK(ce.X2.hi == doctest::Approx(0.45).epsilon(1e-7));

    const cournot::CournotParams ps(0.1, 0.2, Interval::singleton(0.1),
                                    Interval::singleton(0.2));
    const ConsistentSets cs = solve_consistent_sets(cournot::make_game(ps));
    REQUIRE(cs.converged);
    const auto nash = cournot::nash_equilibrium(ps);
    CHECK(cs.X1.lo == doctest::Approx(nash.x1).epsilon(1e-7));
    CHECK(cs.X2.lo == doctest::Approx(nash.x2).epsilon(1e-7));

    const cournot::CournotParams pw(0.25, 0.25, Interval(0.0, 0.5), Interval(0.0, 0.5));
    const ConsistentSets cw = solve_consistent_sets(cournot::make_game(pw));
    REQUIRE(cw.converged);
    CHECK(cw.X1.lo == doctest::Approx(0.0).epsilon(1e-6));
    CHECK(cw.X1.hi == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("ex post outcomes") {
    const GameDefinition ge = externality::make_game(kExt);
    const UncertaintyEquilibrium oo =
        solve_uncertainty_equilibrium(ge, discrete_profile(true, true));
    const EquilibriumOutcome out =
        ex_post_outcome(ge, oo, 0.3, 0.4, discrete_profile(true, true));
    CHECK(out.x1 == doctest::Approx(0.2).epsilon(1e-8));
    CHECK(out.x2 == doctest::Approx(0.3).epsilon(1e-8));
    CHECK(out.U1 == doctest::Approx(0.3 - 0.1 - std::exp(0.4 - 0.2)).epsilon(1e-8));
    CHECK(out.U1 == doctest::Approx(-1.02140).epsilon(1e-5));

    // certainty-point rewards equal the squared strategies
    const cournot::CournotParams ps(0.15, 0.3, Interval::singleton(0.15),
                                    Interval::singleton(0.3));
    const GameDefinition gs = cournot::make_game(ps);
    const UncertaintyEquilibrium eqs =
        solve_uncertainty_equilibrium(gs, discrete_profile(false, true));
    const EquilibriumOutcome outs =
        ex_post_outcome(gs, eqs, 0.15, 0.3, discrete_profile(false, true));
    const auto nash = cournot::nash_equilibrium(ps);
    CHECK(outs.U1 == doctest::Approx(nash.x1 * nash.x1).epsilon(1e-7));
    CHECK(outs.U2 == doctest::Approx(nash.x2 * nash.x2).epsilon(1e-7));

    // symmetric attitude equilibrium puts both players at the interval center
    const GameDefinition gc = cournot::make_game(kCournot);
    const UncertaintyEquilibrium eqc =
        solve_uncertainty_equilibrium(gc, discrete_profile(true, true));
    const EquilibriumOutcome outc =
        ex_post_outcome(gc, eqc, 0.2, 0.2, discrete_profile(true, true));
    CHECK(outc.x1 == doctest::Approx(0.283333333).epsilon(1e-7));
    CHECK(outc.x2 == doctest::Approx(0.283333333).epsilon(1e-7));

    UncertaintyEquilibrium fake;
    fake.converged = false;
    CHECK_THROWS_AS(ex_post_outcome(gc, fake, 0.2, 0.2, discrete_profile(true, true)),
                    std::invalid_argument);
}

TEST_CASE("one more sweep keeps a converged equilibrium in place") {
    const GameDefinition g = cournot::make_game(kCournot);
    SolverOptions opt;
    for (bool o1 : {true, false}) {
        const UncertaintyEquilibrium eq =
            solve_uncertainty_equilibrium(g, discrete_profile(o1, !o1), std::nullopt, opt);
        REQUIRE(eq.converged);
        const Interval Y1 =
            response_set(g, 1, eq.X2, discrete_profile(o1, !o1).p1, opt.theta_grid);
        const Interval Y2 =
            response_set(g, 2, eq.X1, discrete_profile(o1, !o1).p2, opt.theta_grid);
        CHECK(std::fabs(Y1.lo - eq.X1.lo) <= 10.0 * opt.tolerance);
        CHECK(std::fabs(Y1.hi - eq.X1.hi) <= 10.0 * opt.tolerance);
        CHECK(std::fabs(Y2.lo - eq.X2.lo) <= 10.0 * opt.tolerance);
        CHECK(std::fabs(Y2.hi - eq.X2.hi) <= 10.0 * opt.tolerance);
    }
}

TEST_CASE("half-width equals a quarter of the cost spread at every profile") {
    const cournot::CournotParams p(0.2, 0.3, Interval(0.1, 0.35), Interval(0.15, 0.45));
    const GameDefinition g = cournot::make_game(p);
    for (double pi1 : {0.0, 0.5, 1.0}) {
        for (double pi2 : {0.0, 1.0}) {
            const UncertaintyEquilibrium eq =
                solve_uncertainty_equilibrium(g, AttitudeProfile(pi1, pi2));
            REQUIRE(eq.converged);
            CHECK(0.5 * eq.X1.width() == doctest::Approx(p.delta(1) / 4.0).epsilon(1e-8));
            CHECK(0.5 * eq.X2.width() == doctest::Approx(p.delta(2) / 4.0).epsilon(1e-8));
        }
    }
}

TEST_CASE("uniqueness probe") {
    const GameDefinition gc = cournot::make_game(kCournot);
    const UniquenessReport rc = uniqueness_probe(gc, discrete_profile(true, false), 20, 99);
    CHECK(rc.non_converged == 0);
    CHECK(rc.clusters.size() == 1);
    CHECK(rc.clusters.front().hits == 20);

    const GameDefinition ge = externality::make_game(kExt);
    const UniquenessReport re = uniqueness_probe(ge, discrete_profile(true, false), 20, 99);
    CHECK(re.non_converged == 0);
    REQUIRE(re.clusters.size() == 1);
    CHECK(re.clusters.front().representative.X1.lo == doctest::Approx(0.2).epsilon(1e-6));
    CHECK(re.clusters.front().representative.X1.hi == doctest::Approx(0.45).epsilon(1e-6));
    CHECK(re.clusters.front().representative.X2.hi == doctest::Approx(0.0).epsilon(1e-6));

    // singleton types: every restart lands on the certainty point
    const cournot::CournotParams ps(0.1, 0.2, Interval::singleton(0.1),
                                    Interval::singleton(0.2));
    const GameDefinition gp = cournot::make_game(ps);
    const UniquenessReport rp = uniqueness_probe(gp, discrete_profile(false, true), 20, 5);
    REQUIRE(rp.clusters.size() == 1);
    CHECK(rp.clusters.front().hits == 20);
    const auto nash = cournot::nash_equilibrium(ps);
    CHECK(rp.clusters.front().representative.X1.lo == doctest::Approx(nash.x1).epsilon(1e-7));
    CHECK(rp.clusters.front().representative.X2.lo == doctest::Approx(nash.x2).epsilon(1e-7));

    CHECK_THROWS_AS(uniqueness_probe(gc, discrete_profile(true, true), 0),
                    std::invalid_argument);
}
