#pragma once

// Brute-force helpers for expected values. These deliberately use nothing
// from the library's search machinery: plain scans only, so test expectations
// stay independent of the code they check.

#include <cmath>
#include <utility>

#include "uneq/interval.hpp"

namespace test_support {

// min and max of f over an interval scanned at a fixed step
template <class F>
std::pair<double, double> scan_extremes(F&& f, const uneq::Interval& domain, double step) {
    double lo = f(domain.lo), hi = lo;
    for (double x = domain.lo + step; x < domain.hi; x += step) {
        const double v = f(x);
        if (v < lo) lo = v;
        if (v > hi) hi = v;
    }
    const double v = f(domain.hi);
    if (v < lo) lo = v;
    if (v > hi) hi = v;
    return {lo, hi};
}

// argmax of f over an interval scanned at a fixed step (first max wins)
template <class F>
double scan_argmax(F&& f, const uneq::Interval& domain, double step) {
    double best_x = domain.lo;
    double best_v = f(domain.lo);
    for (double x = domain.lo + step; x <= domain.hi + 1e-15; x += step) {
        const double xx = std::min(x, domain.hi);
        const double v = f(xx);
        if (v > best_v) {
            best_v = v;
            best_x = xx;
        }
    }
    return best_x;
}

inline double cournot_u(double x_own, double x_opp, double theta) {
    const double price = std::max(1.0 - x_own - x_opp, 0.0);
    return x_own * price - theta * x_own;
}

inline double externality_u(double x_own, double x_opp, double theta) {
    return x_own - std::exp(-theta + x_own + x_opp);
}

}  // namespace test_support
