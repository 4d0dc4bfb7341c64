#pragma once

#include <cmath>
#include <limits>

#include "nuphase/errors.hpp"

namespace nuphase {

/// Closed interval [lo, hi] with outward rounding after every operation.
/// IEEE round-to-nearest keeps each primitive within 1 ulp of the true
/// value, so one nextafter step outward makes the enclosure rigorous.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    static Interval exact(double v) { return {v, v}; }
    static Interval of(long long v) { return exact(static_cast<double>(v)); } // |v| < 2^53

    double mid() const { return 0.5 * (lo + hi); }
    double width() const { return hi - lo; }

    /// The whole interval lies strictly below the other one.
    bool strictly_below(const Interval& o) const { return hi < o.lo; }

    friend Interval operator+(const Interval& a, const Interval& b) {
        return widen(a.lo + b.lo, a.hi + b.hi);
    }
    friend Interval operator-(const Interval& a, const Interval& b) {
        return widen(a.lo - b.hi, a.hi - b.lo);
    }
    friend Interval operator*(const Interval& a, const Interval& b) {
        const double c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
        double lo = c[0], hi = c[0];
        for (double v : c) {
            if (v < lo) lo = v;
            if (v > hi) hi = v;
        }
        return widen(lo, hi);
    }
    friend Interval operator/(const Interval& a, const Interval& b) {
        if (b.lo <= 0.0 && b.hi >= 0.0) throw error(errc::bad_format, "interval division by zero");
        const double c[4] = {a.lo / b.lo, a.lo / b.hi, a.hi / b.lo, a.hi / b.hi};
        double lo = c[0], hi = c[0];
        for (double v : c) {
            if (v < lo) lo = v;
            if (v > hi) hi = v;
        }
        return widen(lo, hi);
    }

private:
    static Interval widen(double lo, double hi) {
        return {std::nextafter(lo, -std::numeric_limits<double>::infinity()),
                std::nextafter(hi, std::numeric_limits<double>::infinity())};
    }

    friend Interval interval_sqrt(const Interval&);
};

inline Interval interval_sqrt(const Interval& a) {
    if (a.hi < 0.0) throw error(errc::radicand_negative, "sqrt of a negative interval");
    const double lo = a.lo > 0.0 ? std::sqrt(a.lo) : 0.0;
    const double hi = std::sqrt(a.hi);
    return Interval::widen(lo, hi);
}

} // namespace nuphase
