#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "uneq/interval.hpp"

namespace uneq {

struct SearchOptions {
    int grid_points = 257;   // coarse scan before refinement
    double xtol = 1e-5;      // golden-section bracket width before the parabolic step
    double tie_tol = 1e-12;  // relative value gap treated as a tie
};

struct ScalarMaxResult {
    double x = 0.0;
    double value = 0.0;
    bool tie = false;  // another non-adjacent grid cell matched the best value
};

// Vertex of the parabola through three samples; falls back to the best
// sample when the points are collinear. A bracket this small makes plain
// comparison-based refinement noise-bound, while the quadratic fit stays
// accurate to ~1e-12 on smooth objectives.
template <class F>
double parabolic_vertex(F&& f, double a, double b) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double num = (m - a) * (m - a) * (fm - fb) - (m - b) * (m - b) * (fm - fa);
    const double den = (m - a) * (fm - fb) - (m - b) * (fm - fa);
    double best = fm >= fa ? (fm >= fb ? m : b) : (fa >= fb ? a : b);
    if (std::fabs(den) < 1e-300) return best;
    double v = m - 0.5 * num / den;
    if (!(v >= a && v <= b)) return best;
    return f(v) >= std::max({fa, fm, fb}) ? v : best;
}

// Maximises f over a closed interval: uniform scan, golden-section
// refinement of the bracket around the best grid point, then one parabolic
// interpolation. Ties are broken toward the smaller argument and flagged.
template <class F>
ScalarMaxResult maximize_on(F&& f, const Interval& domain, const SearchOptions& opt = {}) {
    if (domain.is_singleton()) return {domain.lo, f(domain.lo), false};

    const int n = opt.grid_points < 2 ? 2 : opt.grid_points;
    const double step = domain.width() / (n - 1);

    int best = 0;
    double best_val = -std::numeric_limits<double>::infinity();
    std::vector<double> vals(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double x = (k == n - 1) ? domain.hi : domain.lo + k * step;
        const double v = f(x);
        vals[static_cast<size_t>(k)] = v;
        if (v > best_val) {
            best_val = v;
            best = k;
        }
    }

    bool tie = false;
    const double gap = opt.tie_tol * std::max(1.0, std::fabs(best_val));
    for (int k = 0; k < n; ++k) {
        if (std::abs(k - best) > 1 && vals[static_cast<size_t>(k)] >= best_val - gap) {
            tie = true;
            break;
        }
    }

    double a = domain.lo + std::max(0, best - 1) * step;
    double b = std::min(domain.hi, domain.lo + (best + 1) * step);

    // golden-section on [a, b]
    constexpr double invphi = 0.6180339887498949;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    while (b - a > opt.xtol) {
        if (f1 >= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
    }
    const double xv = parabolic_vertex(f, a, b);
    return {xv, f(xv), tie};
}

template <class F>
ScalarMaxResult minimize_on(F&& f, const Interval& domain, const SearchOptions& opt = {}) {
    auto neg = [&](double x) { return -f(x); };
    ScalarMaxResult r = maximize_on(neg, domain, opt);
    r.value = -r.value;
    return r;
}

}  // namespace uneq
