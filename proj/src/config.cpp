#include "uneq/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace uneq::cli {

std::vector<double> ParamValue::values() const {
    if (!swept()) return {fixed};
    const auto [lo_, hi_, n] = *sweep;
    std::vector<double> out;
    out.reserve(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k)
        out.push_back(k == n - 1 ? hi_ : lo_ + (hi_ - lo_) * k / (n - 1));
    return out;
}

namespace {

std::string trim(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

double parse_real(const std::string& key, const std::string& value) {
    try {
        size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config: key '" + key + "' expects a real number, got '" + value +
                          "'");
    }
}

long parse_int(const std::string& key, const std::string& value) {
    try {
        size_t pos = 0;
        const long v = std::stol(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config: key '" + key + "' expects an integer, got '" + value + "'");
    }
}

ParamValue parse_param(const std::string& key, const std::string& value) {
    ParamValue p;
    const std::string v = trim(value);
    if (v.rfind("sweep(", 0) == 0) {
        if (v.back() != ')')
            throw ConfigError("config: malformed sweep for '" + key + "': " + v);
        std::string inner = v.substr(6, v.size() - 7);
        std::replace(inner.begin(), inner.end(), ',', ' ');
        std::istringstream is(inner);
        double lo, hi;
        int n;
        if (!(is >> lo >> hi >> n))
            throw ConfigError("config: sweep for '" + key + "' expects sweep(lo, hi, count)");
        std::string rest;
        if (is >> rest)
            throw ConfigError("config: sweep for '" + key + "' has trailing input: " + rest);
        if (n < 2) throw ConfigError("config: sweep count for '" + key + "' must be >= 2");
        if (lo > hi) throw ConfigError("config: sweep for '" + key + "' has lo > hi");
        p.sweep = {lo, hi, n};
        return p;
    }
    p.fixed = parse_real(key, v);
    return p;
}

void check(bool ok, const std::string& constraint) {
    if (!ok) throw ConfigError("config: violated constraint: " + constraint);
}

void validate(const RunConfig& cfg) {
    auto in_range = [](const ParamValue& p, double lo, double hi) {
        return p.lo() >= lo && p.hi() <= hi;
    };

    check(in_range(cfg.pi1, 0.0, 1.0), "0 <= pi1 <= 1");
    check(in_range(cfg.pi2, 0.0, 1.0), "0 <= pi2 <= 1");
    check(cfg.solver.tolerance > 0.0, "tolerance > 0");
    check(cfg.solver.max_iter > 0, "max_iter > 0");
    check(cfg.solver.theta_grid >= 2, "theta_grid >= 2");
    check(cfg.oracle.strategy_resolution >= 2, "strategy_resolution >= 2");
    check(cfg.oracle.type_resolution >= 2, "type_resolution >= 2");
    check(cfg.oracle.attitude_resolution >= 2, "attitude_resolution >= 2");

    if (cfg.game == RunConfig::Game::cournot) {
        check(cfg.alpha1 >= 0.0 && cfg.beta1 <= 0.5, "0 <= alpha1 <= beta1 <= 0.5");
        check(cfg.alpha2 >= 0.0 && cfg.beta2 <= 0.5, "0 <= alpha2 <= beta2 <= 0.5");
        check(cfg.alpha1 <= cfg.beta1, "alpha1 <= beta1");
        check(cfg.alpha2 <= cfg.beta2, "alpha2 <= beta2");
        check(in_range(cfg.theta1, cfg.alpha1, cfg.beta1), "alpha1 <= theta1 <= beta1");
        check(in_range(cfg.theta2, cfg.alpha2, cfg.beta2), "alpha2 <= theta2 <= beta2");
    } else {
        check(cfg.alpha1 > 0.0, "alpha > 0");
        check(2.0 * cfg.alpha1 < cfg.beta1, "2 alpha < beta");
        check(cfg.beta1 < 1.0, "beta < 1");
        check(in_range(cfg.theta1, cfg.alpha1, cfg.beta1), "alpha <= theta1 <= beta");
        check(in_range(cfg.theta2, cfg.alpha1, cfg.beta1), "alpha <= theta2 <= beta");
    }

    static const std::vector<std::string> analyses = {
        "equilibrium", "matrix", "dominance", "robust", "consistent-sets", "verify"};
    check(std::find(analyses.begin(), analyses.end(), cfg.analysis) != analyses.end(),
          "analysis must be one of equilibrium|matrix|dominance|robust|consistent-sets|verify");
}

}  // namespace

RunConfig parse_config_text(const std::string& text) {
    RunConfig cfg;
    std::map<std::string, bool> seen;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    bool have_game = false;

    while (std::getline(is, line)) {
        ++lineno;
        const size_t cut = line.find_first_of("#;");
        if (cut != std::string::npos) line = line.substr(0, cut);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("config line " + std::to_string(lineno) +
                                  ": malformed section header");
            continue;  // sections organise the file; keys are globally named
        }
        const size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) +
                              ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (seen[key])
            throw ConfigError("config line " + std::to_string(lineno) + ": duplicate key '" +
                              key + "'");
        seen[key] = true;

        auto record_sweep = [&](const ParamValue& p, const std::string& name) {
            if (p.swept()) cfg.sweep_order.push_back(name);
        };

        if (key == "game") {
            if (value == "cournot")
                cfg.game = RunConfig::Game::cournot;
            else if (value == "externality")
                cfg.game = RunConfig::Game::externality;
            else
                throw ConfigError("config: game must be cournot or externality, got '" + value +
                                  "'");
            have_game = true;
        } else if (key == "analysis") {
            cfg.analysis = value;
        } else if (key == "theta1") {
            cfg.theta1 = parse_param(key, value);
            record_sweep(cfg.theta1, key);
        } else if (key == "theta2") {
            cfg.theta2 = parse_param(key, value);
            record_sweep(cfg.theta2, key);
        } else if (key == "pi1") {
            cfg.pi1 = parse_param(key, value);
            record_sweep(cfg.pi1, key);
        } else if (key == "pi2") {
            cfg.pi2 = parse_param(key, value);
            record_sweep(cfg.pi2, key);
        } else if (key == "alpha1" || key == "alpha") {
            cfg.alpha1 = parse_real(key, value);
            if (key == "alpha") cfg.alpha2 = cfg.alpha1;
        } else if (key == "beta1" || key == "beta") {
            cfg.beta1 = parse_real(key, value);
            if (key == "beta") cfg.beta2 = cfg.beta1;
        } else if (key == "alpha2") {
            cfg.alpha2 = parse_real(key, value);
        } else if (key == "beta2") {
            cfg.beta2 = parse_real(key, value);
        } else if (key == "tolerance") {
            cfg.solver.tolerance = parse_real(key, value);
        } else if (key == "max_iter") {
            cfg.solver.max_iter = static_cast<int>(parse_int(key, value));
        } else if (key == "theta_grid") {
            cfg.solver.theta_grid = static_cast<int>(parse_int(key, value));
        } else if (key == "strategy_resolution") {
            cfg.oracle.strategy_resolution = static_cast<int>(parse_int(key, value));
        } else if (key == "type_resolution") {
            cfg.oracle.type_resolution = static_cast<int>(parse_int(key, value));
        } else if (key == "attitude_resolution") {
            cfg.oracle.attitude_resolution = static_cast<int>(parse_int(key, value));
        } else if (key == "robust_pi_grid") {
            cfg.robust_pi_grid = static_cast<int>(parse_int(key, value));
        } else if (key == "dominance_theta_grid") {
            cfg.dominance_theta_grid = static_cast<int>(parse_int(key, value));
        } else if (key == "seed") {
            cfg.seed = static_cast<std::uint64_t>(parse_int(key, value));
        } else if (key == "probe_restarts") {
            cfg.probe_restarts = static_cast<int>(parse_int(key, value));
        } else if (key == "report") {
            cfg.report_name = value;
        } else if (key == "csv") {
            cfg.csv_name = value;
        } else {
            throw ConfigError("config line " + std::to_string(lineno) + ": unknown key '" +
                              key + "'");
        }
    }

    if (!have_game) throw ConfigError("config: missing required key 'game'");
    validate(cfg);
    return cfg;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot read '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str());
}

std::vector<SweepPoint> expand_sweeps(const RunConfig& cfg) {
    // ordered axes: declared sweeps first (slowest first), then the fixed ones
    struct Axis {
        std::string name;
        std::vector<double> values;
    };
    std::vector<Axis> axes;
    for (const auto& name : cfg.sweep_order) {
        if (name == "theta1") axes.push_back({name, cfg.theta1.values()});
        if (name == "theta2") axes.push_back({name, cfg.theta2.values()});
        if (name == "pi1") axes.push_back({name, cfg.pi1.values()});
        if (name == "pi2") axes.push_back({name, cfg.pi2.values()});
    }

    std::vector<SweepPoint> out;
    SweepPoint base{cfg.theta1.fixed, cfg.theta2.fixed, cfg.pi1.fixed, cfg.pi2.fixed};

    std::vector<size_t> idx(axes.size(), 0);
    while (true) {
        SweepPoint p = base;
        for (size_t a = 0; a < axes.size(); ++a) {
            const double v = axes[a].values[idx[a]];
            if (axes[a].name == "theta1") p.theta1 = v;
            if (axes[a].name == "theta2") p.theta2 = v;
            if (axes[a].name == "pi1") p.pi1 = v;
            if (axes[a].name == "pi2") p.pi2 = v;
        }
        out.push_back(p);
        // odometer increment, last axis fastest
        size_t a = axes.size();
        while (a > 0) {
            --a;
            if (++idx[a] < axes[a].values.size()) break;
            idx[a] = 0;
            if (a == 0) return out;
        }
        if (axes.empty()) return out;
    }
}

}  // namespace uneq::cli
