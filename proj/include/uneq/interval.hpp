#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace uneq {

// Closed bounded real interval [lo, hi]. Strategy sets, type sets and
// equilibrium components are all represented this way; a singleton has
// lo == hi.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    Interval() = default;

    Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
        if (!std::isfinite(lo) || !std::isfinite(hi))
            throw std::invalid_argument("Interval: endpoints must be finite");
        if (lo > hi)
            throw std::invalid_argument("Interval: lo > hi (lo=" + std::to_string(lo_) +
                                        ", hi=" + std::to_string(hi_) + ")");
    }

    static Interval singleton(double x) { return Interval(x, x); }

    double width() const { return hi - lo; }
    double mid() const { return 0.5 * (lo + hi); }

    bool is_singleton(double tol = 0.0) const { return width() <= tol; }

    bool contains(double x, double tol = 0.0) const { return x >= lo - tol && x <= hi + tol; }

    bool contains(const Interval& other, double tol = 0.0) const {
        return other.lo >= lo - tol && other.hi <= hi + tol;
    }

    friend bool operator==(const Interval&, const Interval&) = default;
};

// [z] clamped to the interval, the generalisation of the [z]_0^1 operator.
inline double clip(double z, const Interval& to) {
    if (z < to.lo) return to.lo;
    if (z > to.hi) return to.hi;
    return z;
}

inline double clip01(double z) { return clip(z, Interval(0.0, 1.0)); }

}  // namespace uneq
