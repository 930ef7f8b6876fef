#include "uneq/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "uneq/attitude_game.hpp"
#include "uneq/cournot.hpp"
#include "uneq/externality.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace uneq::cli {

namespace {

const char* game_name(RunConfig::Game g) {
    return g == RunConfig::Game::cournot ? "cournot" : "externality";
}

const char* status_suffix(SolveStatus s) {
    switch (s) {
        case SolveStatus::converged: return "";
        case SolveStatus::oscillating: return "  NOT CONVERGED (oscillating)";
        case SolveStatus::max_iterations: return "  NOT CONVERGED (iteration limit)";
    }
    return "";
}

GameDefinition build_game(const RunConfig& cfg, double theta1, double theta2) {
    if (cfg.game == RunConfig::Game::cournot)
        return cournot::make_game(cournot::CournotParams(
            theta1, theta2, Interval(cfg.alpha1, cfg.beta1), Interval(cfg.alpha2, cfg.beta2)));
    return externality::make_game(
        externality::ExternalityParams(theta1, theta2, cfg.alpha1, cfg.beta1));
}

ResultRow base_row(const RunConfig& cfg) {
    ResultRow r;
    r.game = game_name(cfg.game);
    r.alpha1 = cfg.alpha1;
    r.beta1 = cfg.beta1;
    r.alpha2 = cfg.alpha2;
    r.beta2 = cfg.beta2;
    return r;
}

void describe_inputs(std::ostringstream& os, const RunConfig& cfg) {
    os << "game: " << game_name(cfg.game) << "\n";
    os << "analysis: " << cfg.analysis << "\n";
    if (cfg.game == RunConfig::Game::cournot) {
        os << "cost intervals: [" << format_real(cfg.alpha1) << ", " << format_real(cfg.beta1)
           << "] x [" << format_real(cfg.alpha2) << ", " << format_real(cfg.beta2) << "]\n";
    } else {
        os << "type interval: [" << format_real(cfg.alpha1) << ", " << format_real(cfg.beta1)
           << "]\n";
    }
    auto describe = [&](const char* name, const ParamValue& p) {
        os << name << ": ";
        if (p.swept())
            os << "sweep [" << format_real(p.lo()) << ", " << format_real(p.hi()) << "] x "
               << p.values().size();
        else
            os << format_real(p.fixed);
        os << "\n";
    };
    describe("theta1", cfg.theta1);
    describe("theta2", cfg.theta2);
    describe("pi1", cfg.pi1);
    describe("pi2", cfg.pi2);
    os << "tolerance: " << format_real(cfg.solver.tolerance) << "\n";
}

std::string profile_label(bool o1, bool o2) {
    return std::string("(") + (o1 ? "O" : "P") + "," + (o2 ? "O" : "P") + ")";
}

RunResult run_equilibrium(const RunConfig& cfg) {
    RunResult res;
    const std::vector<SweepPoint> points = expand_sweeps(cfg);
    const GameDefinition game = build_game(cfg, cfg.theta1.lo(), cfg.theta2.lo());

    // solve each distinct attitude pair once; realised types only enter ex post
    std::map<std::pair<double, double>, UncertaintyEquilibrium> eq_cache;
    for (const auto& p : points) eq_cache.emplace(std::make_pair(p.pi1, p.pi2),
                                                  UncertaintyEquilibrium{});
    std::vector<std::pair<double, double>> keys;
    keys.reserve(eq_cache.size());
    for (const auto& [k, v] : eq_cache) keys.push_back(k);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (size_t k = 0; k < keys.size(); ++k) {
        const UncertaintyEquilibrium eq = solve_uncertainty_equilibrium(
            game, AttitudeProfile(keys[k].first, keys[k].second), std::nullopt, cfg.solver);
#ifdef _OPENMP
#pragma omp critical
#endif
        eq_cache[keys[k]] = eq;
    }

    bool all_converged = true;
    res.rows.reserve(points.size());
    for (const auto& p : points) {
        const UncertaintyEquilibrium& eq = eq_cache.at({p.pi1, p.pi2});
        ResultRow row = base_row(cfg);
        row.theta1 = p.theta1;
        row.theta2 = p.theta2;
        row.pi1 = p.pi1;
        row.pi2 = p.pi2;
        row.X1 = eq.X1;
        row.X2 = eq.X2;
        row.converged = eq.converged;
        row.residual = eq.residual;
        row.iterations = eq.iterations;
        if (eq.converged) {
            const EquilibriumOutcome out = ex_post_outcome(
                game, eq, p.theta1, p.theta2, AttitudeProfile(p.pi1, p.pi2), cfg.solver);
            row.x1 = out.x1;
            row.x2 = out.x2;
            row.U1 = out.U1;
            row.U2 = out.U2;
        } else {
            all_converged = false;
        }
        res.rows.push_back(row);
    }

    std::ostringstream os;
    describe_inputs(os, cfg);
    os << "\nsweep points: " << points.size() << "\n";
    if (res.rows.size() <= 8) {
        for (const auto& r : res.rows) {
            os << "pi=(" << format_real(r.pi1) << ", " << format_real(r.pi2) << ")  X1=["
               << format_real(r.X1.lo) << ", " << format_real(r.X1.hi) << "]  X2=["
               << format_real(r.X2.lo) << ", " << format_real(r.X2.hi) << "]  x=("
               << format_real(r.x1) << ", " << format_real(r.x2) << ")  U=("
               << format_real(r.U1) << ", " << format_real(r.U2) << ")"
               << status_suffix(eq_cache.at({r.pi1, r.pi2}).status) << "\n";
        }
    } else {
        os << "(rows written to CSV)\n";
    }

    if (points.size() == 1) {
        const UniquenessReport probe =
            uniqueness_probe(game, AttitudeProfile(points[0].pi1, points[0].pi2),
                             cfg.probe_restarts, cfg.seed, cfg.solver);
        os << "\nuniqueness probe: " << probe.clusters.size() << " fixed-point cluster(s) in "
           << cfg.probe_restarts << " restarts";
        if (probe.non_converged > 0) os << ", " << probe.non_converged << " non-converged";
        os << "\n";
        for (const auto& c : probe.clusters) {
            os << "  X1=[" << format_real(c.representative.X1.lo) << ", "
               << format_real(c.representative.X1.hi) << "]  X2=["
               << format_real(c.representative.X2.lo) << ", "
               << format_real(c.representative.X2.hi) << "]  hits=" << c.hits << "\n";
        }
    }

    res.report = os.str();
    if (!all_converged && !cfg.allow_nonconverged) res.exit_code = 2;
    return res;
}

RunResult run_matrix(const RunConfig& cfg) {
    RunResult res;
    const double t1 = cfg.theta1.fixed;
    const double t2 = cfg.theta2.fixed;
    const GameDefinition game = build_game(cfg, t1, t2);
    const auto eqs = attitude::solve_profile_equilibria(game, cfg.solver);
    const attitude::AttitudeMatrix m =
        attitude::build_attitude_matrix(game, t1, t2, eqs, cfg.solver);

    std::ostringstream os;
    describe_inputs(os, cfg);
    os << "\nattitude matrix at theta=(" << format_real(t1) << ", " << format_real(t2)
       << ")\n";
    for (bool o1 : {true, false}) {
        for (bool o2 : {true, false}) {
            const auto& e = m.at(o1, o2);
            const auto& eq = eqs[static_cast<size_t>(attitude::AttitudeMatrix::index(o1, o2))];
            os << "  " << profile_label(o1, o2) << "  U=(" << format_real(e.U1) << ", "
               << format_real(e.U2) << ")  x=(" << format_real(e.x1) << ", "
               << format_real(e.x2) << ")" << status_suffix(e.status) << "\n";

            ResultRow row = base_row(cfg);
            row.theta1 = t1;
            row.theta2 = t2;
            row.pi1 = o1 ? 1.0 : 0.0;
            row.pi2 = o2 ? 1.0 : 0.0;
            row.X1 = eq.X1;
            row.X2 = eq.X2;
            row.x1 = e.x1;
            row.x2 = e.x2;
            row.U1 = e.U1;
            row.U2 = e.U2;
            row.converged = e.ok;
            row.residual = eq.residual;
            row.iterations = eq.iterations;
            res.rows.push_back(row);
        }
    }

    if (!m.complete()) {
        res.report = os.str();
        if (!cfg.allow_nonconverged) res.exit_code = 2;
        return res;
    }

    const auto nash = attitude::pure_nash_profiles(m);
    const auto strict = attitude::strict_nash_profiles(m);
    os << "pure Nash attitude profiles:";
    for (const auto& [o1, o2] : nash) os << " " << profile_label(o1, o2);
    os << "\nstrict Nash attitude profiles:";
    for (const auto& [o1, o2] : strict) os << " " << profile_label(o1, o2);
    os << "\n";

    const auto pareto = attitude::pareto_analysis(m);
    static const std::array<std::pair<bool, bool>, 4> order = {
        std::pair<bool, bool>{true, true}, {true, false}, {false, true}, {false, false}};
    os << "Pareto-dominated profiles:";
    bool any = false;
    for (const auto& [o1, o2] : order) {
        if (pareto.dominated[static_cast<size_t>(attitude::AttitudeMatrix::index(o1, o2))]) {
            os << " " << profile_label(o1, o2);
            any = true;
        }
    }
    if (!any) os << " none";
    os << "\n";

    if (cfg.game == RunConfig::Game::cournot && cfg.alpha1 == cfg.alpha2 &&
        cfg.beta1 == cfg.beta2 && cfg.beta1 > cfg.alpha1) {
        const cournot::CournotParams p(t1, t2, Interval(cfg.alpha1, cfg.beta1),
                                       Interval(cfg.alpha2, cfg.beta2));
        const auto pd = attitude::classify_prisoners_dilemma(p, cfg.solver);
        os << "prisoner's dilemma: " << (pd.is_pd ? "yes" : "no") << " (beta "
           << format_real(cfg.beta1) << " vs bound " << format_real(pd.beta_bound) << ")\n";
        os << "  (P,P) not Nash: " << (pd.pp_not_nash ? "yes" : "no")
           << ", (P,P) Pareto-efficient: " << (pd.pp_pareto_efficient ? "yes" : "no")
           << ", (P,P) above (O,O): " << (pd.pp_superior_to_oo ? "yes" : "no")
           << ", (O,O) unique Nash: " << (pd.oo_unique_nash ? "yes" : "no") << "\n";
    }

    res.report = os.str();
    return res;
}

RunResult run_dominance(const RunConfig& cfg) {
    RunResult res;
    const double t1 = cfg.theta1.fixed;
    const double t2 = cfg.theta2.fixed;
    const GameDefinition game = build_game(cfg, t1, t2);

    std::ostringstream os;
    describe_inputs(os, cfg);
    os << "\n";
    for (int player = 1; player <= 2; ++player) {
        const double theta = player == 1 ? t1 : t2;
        const auto grid = attitude::dominance_analysis_grid(game, player, theta,
                                                            cfg.dominance_theta_grid,
                                                            cfg.solver);
        os << "player " << player << " grid dominance (" << cfg.dominance_theta_grid
           << " opponent types): " << attitude::to_string(grid.verdict)
           << (grid.strict ? " (strict)" : "") << ", min optimism margin "
           << format_real(grid.min_margin_optimism) << ", min pessimism margin "
           << format_real(grid.min_margin_pessimism) << "\n";
        if (cfg.game == RunConfig::Game::cournot) {
            const cournot::CournotParams p(t1, t2, Interval(cfg.alpha1, cfg.beta1),
                                           Interval(cfg.alpha2, cfg.beta2));
            const auto closed = attitude::dominance_analysis_closed_form(p, player);
            os << "player " << player
               << " threshold dominance: " << attitude::to_string(closed.verdict)
               << " (theta_lo=" << format_real(closed.thresholds->theta_lo)
               << ", theta_hi=" << format_real(closed.thresholds->theta_hi) << ")\n";
        }
    }
    res.report = os.str();
    return res;
}

RunResult run_robust(const RunConfig& cfg) {
    RunResult res;
    const double t1 = cfg.theta1.fixed;
    const double t2 = cfg.theta2.fixed;
    const GameDefinition game = build_game(cfg, t1, t2);

    std::ostringstream os;
    describe_inputs(os, cfg);
    os << "\n";
    attitude::RobustOptions ropt;
    ropt.pi_grid = cfg.robust_pi_grid;
    ropt.theta_j_grid = cfg.dominance_theta_grid;
    ropt.solver.tolerance = cfg.solver.tolerance;
    for (int player = 1; player <= 2; ++player) {
        const double theta = player == 1 ? t1 : t2;
        const auto r = attitude::robust_attitude(game, player, theta, ropt);
        os << "player " << player << " robust attitude (grid " << cfg.robust_pi_grid
           << "): " << format_real(r.pi_sharp) << ", guaranteed reward "
           << format_real(r.value) << "\n";
        if (cfg.game == RunConfig::Game::cournot) {
            const cournot::CournotParams p(t1, t2, Interval(cfg.alpha1, cfg.beta1),
                                           Interval(cfg.alpha2, cfg.beta2));
            if (p.delta(opponent_of(player)) > 0.0)
                os << "player " << player << " robust attitude (closed form): "
                   << format_real(std::clamp(
                          cournot::robust_attitude_closed_form(p, player), 0.0, 1.0))
                   << "\n";
            else
                os << "player " << player
                   << " robust attitude (closed form): undefined (opponent types are a "
                      "point)\n";
        }
    }
    res.report = os.str();
    return res;
}

RunResult run_consistent_sets(const RunConfig& cfg) {
    RunResult res;
    const GameDefinition game = build_game(cfg, cfg.theta1.fixed, cfg.theta2.fixed);
    const ConsistentSets cs = solve_consistent_sets(game, std::nullopt, cfg.solver);

    std::ostringstream os;
    describe_inputs(os, cfg);
    os << "\nconsistent sets: X1=[" << format_real(cs.X1.lo) << ", " << format_real(cs.X1.hi)
       << "]  X2=[" << format_real(cs.X2.lo) << ", " << format_real(cs.X2.hi) << "]  ("
       << cs.iterations << " iterations, residual " << format_real(cs.residual) << ")"
       << status_suffix(cs.status) << "\n";
    res.report = os.str();
    if (!cs.converged && !cfg.allow_nonconverged) res.exit_code = 2;
    return res;
}

RunResult run_verify(const RunConfig& cfg) {
    RunResult res;
    verify::VerifyOptions vopt;
    vopt.solver = cfg.solver;
    vopt.oracle = cfg.oracle;
    vopt.fault = cfg.fault;
    vopt.seed = cfg.seed;
    const verify::VerifyReport report = verify::verify_all(vopt);
    res.report = verify::render_report(report);
    if (!report.all_pass()) res.exit_code = 3;
    return res;
}

}  // namespace

RunResult run_analysis(const RunConfig& cfg) {
    if (cfg.analysis == "equilibrium") return run_equilibrium(cfg);
    if (cfg.analysis == "matrix") return run_matrix(cfg);
    if (cfg.analysis == "dominance") return run_dominance(cfg);
    if (cfg.analysis == "robust") return run_robust(cfg);
    if (cfg.analysis == "consistent-sets") return run_consistent_sets(cfg);
    if (cfg.analysis == "verify") return run_verify(cfg);
    throw ConfigError("unknown analysis: " + cfg.analysis);
}

int write_artifacts(const RunResult& result, const RunConfig& cfg,
                    const std::string& out_dir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) {
        std::fprintf(stderr, "cannot create output directory '%s': %s\n", out_dir.c_str(),
                     ec.message().c_str());
        return 1;
    }

    {
        std::ofstream rep(fs::path(out_dir) / cfg.report_name);
        if (!rep) {
            std::fprintf(stderr, "cannot write report\n");
            return 1;
        }
        rep << result.report;
    }
    if (!result.rows.empty()) {
        std::ofstream csv(fs::path(out_dir) / cfg.csv_name, std::ios::binary);
        if (!csv) {
            std::fprintf(stderr, "cannot write CSV\n");
            return 1;
        }
        csv << csv_table(result.rows);
    }
    return result.exit_code;
}

}  // namespace uneq::cli
