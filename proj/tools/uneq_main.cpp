#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "uneq/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"uneq: uncertainty equilibria and attitude analysis for two-player games"};

    std::string config_path;
    std::string out_dir = ".";
    std::string analysis;
    std::string fault;
    double tolerance = -1.0;
    int resolution = 0;
    long seed = -1;
    bool allow_nonconverged = false;

    app.add_option("--config", config_path, "path to the run configuration")->required();
    app.add_option("--out", out_dir, "output directory for report and CSV");
    app.add_option("--analysis", analysis,
                   "equilibrium|matrix|dominance|robust|consistent-sets|verify "
                   "(overrides the config)");
    app.add_option("--tolerance", tolerance, "solver endpoint tolerance (overrides)");
    app.add_option("--resolution", resolution,
                   "oracle strategy-grid resolution (overrides)");
    app.add_option("--seed", seed, "seed for randomised probes (overrides)");
    app.add_flag("--allow-nonconverged", allow_nonconverged,
                 "exit 0 even when a solve does not converge");
    app.add_option("--inject-fault", fault,
                   "perturb one closed form to exercise the verification harness")
        ->group("");  // hidden: negative-control hook for tests

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        uneq::cli::RunConfig cfg = uneq::cli::parse_config_file(config_path);
        if (!analysis.empty()) cfg.analysis = analysis;
        if (tolerance != -1.0) {
            if (tolerance <= 0.0)
                throw uneq::cli::ConfigError("--tolerance must be positive");
            cfg.solver.tolerance = tolerance;
        }
        if (resolution != 0) {
            if (resolution < 2)
                throw uneq::cli::ConfigError("--resolution must be at least 2");
            cfg.oracle.strategy_resolution = resolution;
        }
        if (seed >= 0) cfg.seed = static_cast<std::uint64_t>(seed);
        if (allow_nonconverged) cfg.allow_nonconverged = true;
        if (!fault.empty()) cfg.fault = uneq::verify::fault_from_name(fault);

        const uneq::cli::RunResult result = uneq::cli::run_analysis(cfg);
        std::fputs(result.report.c_str(), stdout);
        return uneq::cli::write_artifacts(result, cfg, out_dir);
    } catch (const uneq::cli::ConfigError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
