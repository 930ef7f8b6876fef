#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "uneq/cli.hpp"
#include "uneq/cournot.hpp"

using namespace uneq;
using namespace uneq::cli;

namespace {

const char* kCournotText = R"(
# duopoly run
game = cournot
analysis = equilibrium

[types]
theta1 = 0.2
theta2 = 0.2
alpha1 = 0.1
beta1 = 0.3
alpha2 = 0.1
beta2 = 0.3

[attitudes]
pi1 = 1
pi2 = 1
)";

}  // namespace

TEST_CASE("config parsing") {
    const RunConfig cfg = parse_config_text(kCournotText);
    CHECK(cfg.game == RunConfig::Game::cournot);
    CHECK(cfg.analysis == "equilibrium");
    CHECK(cfg.theta1.fixed == 0.2);
    CHECK(cfg.beta2 == 0.3);
    CHECK(cfg.pi1.fixed == 1.0);
    CHECK(cfg.sweep_order.empty());
}

TEST_CASE("config rejections name the violated constraint") {
    CHECK_THROWS_WITH_AS(parse_config_text("analysis = equilibrium\n"),
                         "config: missing required key 'game'", ConfigError);

    const std::string bad_theta = std::string(kCournotText) + "\n";
    std::string text = bad_theta;
    text.replace(text.find("theta1 = 0.2"), 12, "theta1 = 0.4");
    try {
        parse_config_text(text);
        FAIL("expected rejection");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("alpha1 <= theta1 <= beta1") != std::string::npos);
    }

    std::string dup = std::string(kCournotText) + "theta1 = 0.1\n";
    CHECK_THROWS_AS(parse_config_text(dup), ConfigError);

    std::string junk = std::string(kCournotText) + "mystery = 1\n";
    CHECK_THROWS_AS(parse_config_text(junk), ConfigError);

    std::string bad_sweep = std::string(kCournotText);
    bad_sweep.replace(bad_sweep.find("pi1 = 1"), 7, "pi1 = sweep(0, 1, 1)");
    CHECK_THROWS_AS(parse_config_text(bad_sweep), ConfigError);

    std::string bad_game = std::string(kCournotText);
    bad_game.replace(bad_game.find("game = cournot"), 14, "game = chess  ");
    CHECK_THROWS_AS(parse_config_text(bad_game), ConfigError);
}

TEST_CASE("sweep expansion is lexicographic in declaration order") {
    std::string text = kCournotText;
    text.replace(text.find("pi1 = 1"), 7, "pi1 = sweep(0, 1, 3)");
    text.replace(text.find("pi2 = 1"), 7, "pi2 = sweep(0, 1, 2)");
    const RunConfig cfg = parse_config_text(text);
    REQUIRE(cfg.sweep_order == std::vector<std::string>{"pi1", "pi2"});

    const auto points = expand_sweeps(cfg);
    REQUIRE(points.size() == 6);
    CHECK(points[0].pi1 == 0.0);
    CHECK(points[0].pi2 == 0.0);
    CHECK(points[1].pi1 == 0.0);
    CHECK(points[1].pi2 == 1.0);
    CHECK(points[2].pi1 == 0.5);
    CHECK(points[5].pi1 == 1.0);
    CHECK(points[5].pi2 == 1.0);

    // declaring pi2 first flips the significance
    std::string flipped = kCournotText;
    flipped.replace(flipped.find("pi2 = 1"), 7, "pi2 = sweep(0, 1, 2)");
    flipped.replace(flipped.find("pi1 = 1"), 7, "pi1 = sweep(0, 1, 3)");
    // order of keys in the file stays pi1-then-pi2, so emulate by text order:
    std::string reordered =
        "game = cournot\nanalysis = equilibrium\n"
        "theta1 = 0.2\ntheta2 = 0.2\nalpha1 = 0.1\nbeta1 = 0.3\nalpha2 = 0.1\nbeta2 = 0.3\n"
        "pi2 = sweep(0, 1, 2)\npi1 = sweep(0, 1, 3)\n";
    const RunConfig cfg2 = parse_config_text(reordered);
    REQUIRE(cfg2.sweep_order == std::vector<std::string>{"pi2", "pi1"});
    const auto pts2 = expand_sweeps(cfg2);
    REQUIRE(pts2.size() == 6);
    CHECK(pts2[0].pi2 == 0.0);
    CHECK(pts2[1].pi1 == 0.5);
    CHECK(pts2[2].pi1 == 1.0);
    CHECK(pts2[3].pi2 == 1.0);
}

TEST_CASE("csv formatting is stable and 12-digit") {
    CHECK(format_real(0.1) == "0.1");
    CHECK(format_real(1.0 / 3.0) == "0.333333333333");
    CHECK(format_real(1e-10) == "1e-10");

    ResultRow r;
    r.game = "cournot";
    r.theta1 = 0.2;
    r.X1 = Interval(1.0 / 3.0, 0.4);
    r.converged = true;
    r.iterations = 42;
    const std::string row = csv_row(r);
    CHECK(row.find("cournot,0.2,") == 0);
    CHECK(row.find("0.333333333333") != std::string::npos);
    CHECK(row.find(",1,") != std::string::npos);
    CHECK(row.rfind(",42") == row.size() - 3);

    const std::string header(kCsvHeader);
    CHECK(header.find("game,theta1,theta2,alpha1,beta1,alpha2,beta2,pi1,pi2") == 0);
    CHECK(header.find("X1_lo,X1_hi,X2_lo,X2_hi,x1,x2,U1,U2,converged,residual,iterations") !=
          std::string::npos);
}

TEST_CASE("equilibrium analysis produces one row per sweep point") {
    std::string text = kCournotText;
    text.replace(text.find("pi1 = 1"), 7, "pi1 = sweep(0, 1, 11)");
    text.replace(text.find("pi2 = 1"), 7, "pi2 = sweep(0, 1, 11)");
    const RunConfig cfg = parse_config_text(text);
    const RunResult res = run_analysis(cfg);
    CHECK(res.exit_code == 0);
    REQUIRE(res.rows.size() == 121);

    // every row reproduces the closed forms of the same configuration
    const cournot::CournotParams p(0.2, 0.2, Interval(0.1, 0.3), Interval(0.1, 0.3));
    for (size_t k = 0; k < res.rows.size(); k += 13) {
        const auto& row = res.rows[k];
        const AttitudeProfile profile(row.pi1, row.pi2);
        const auto [C1, C2] = cournot::uncertainty_equilibrium_closed_form(p, profile);
        const auto [x1, x2] = cournot::interim_strategy(p, profile);
        CHECK(row.X1.lo == doctest::Approx(C1.lo).epsilon(1e-7));
        CHECK(row.X2.hi == doctest::Approx(C2.hi).epsilon(1e-7));
        CHECK(row.x1 == doctest::Approx(x1).epsilon(1e-7));
        CHECK(row.x2 == doctest::Approx(x2).epsilon(1e-7));
        CHECK(row.converged);
    }

    // byte-identical CSV on a repeated run
    const RunResult res2 = run_analysis(cfg);
    CHECK(csv_table(res.rows) == csv_table(res2.rows));
}

namespace {

std::string with_analysis(const char* analysis) {
    std::string text = kCournotText;
    const std::string needle = "analysis = equilibrium";
    text.replace(text.find(needle), needle.size(), std::string("analysis = ") + analysis);
    return text;
}

}  // namespace

TEST_CASE("matrix analysis emits the four profile rows") {
    const RunConfig cfg = parse_config_text(with_analysis("matrix"));
    const RunResult res = run_analysis(cfg);
    CHECK(res.exit_code == 0);
    CHECK(res.rows.size() == 4);
    CHECK(res.report.find("pure Nash attitude profiles: (O,O)") != std::string::npos);
    CHECK(res.report.find("prisoner's dilemma: yes") != std::string::npos);
}

TEST_CASE("point type intervals make all four profile rows identical") {
    const char* text = R"(
game = cournot
analysis = matrix
theta1 = 0.15
theta2 = 0.3
alpha1 = 0.15
beta1 = 0.15
alpha2 = 0.3
beta2 = 0.3
pi1 = 1
pi2 = 1
)";
    const RunResult res = run_analysis(parse_config_text(text));
    REQUIRE(res.rows.size() == 4);
    for (const auto& row : res.rows) {
        CHECK(row.U1 == doctest::Approx(res.rows[0].U1).epsilon(1e-9));
        CHECK(row.U2 == doctest::Approx(res.rows[0].U2).epsilon(1e-9));
        CHECK(row.x1 == doctest::Approx(res.rows[0].x1).epsilon(1e-9));
        CHECK(row.X1.lo == doctest::Approx(res.rows[0].X1.lo).epsilon(1e-9));
    }
}

TEST_CASE("report-only analyses") {
    for (const char* analysis : {"dominance", "robust", "consistent-sets"}) {
        RunConfig cfg = parse_config_text(with_analysis(analysis));
        cfg.robust_pi_grid = 11;  // keep the robust scan cheap here
        const RunResult res = run_analysis(cfg);
        CHECK(res.exit_code == 0);
        CHECK(res.rows.empty());
        CHECK_FALSE(res.report.empty());
    }
}
