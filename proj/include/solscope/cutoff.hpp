#pragma once

#include <algorithm>
#include <cmath>

#include "solscope/errors.hpp"

namespace solscope {

// Smooth characteristic function F with F(k)=1 for k>=1, F(k)=0 for k<=1/2,
// realized as F(k) = phi(2k-1) with the standard C-infinity bump transition
// phi(s) = e^{-1/s} / (e^{-1/s} + e^{-1/(1-s)}) on (0,1).
inline double unit_profile(double k) {
    double s = 2.0 * k - 1.0;
    if (s <= 0.0) return 0.0;
    if (s >= 1.0) return 1.0;
    double e1 = std::exp(-1.0 / s);
    double e2 = std::exp(-1.0 / (1.0 - s));
    return e1 / (e1 + e2);
}

// F(k > b) := F(k/b)
inline double cutoff_above(double k, double b) { return unit_profile(k / b); }
// F(k <= b) := 1 - F(k > b)
inline double cutoff_below(double k, double b) { return 1.0 - unit_profile(k / b); }
// F(b < k <= c) := F(k > b) - F(k > c)
inline double cutoff_band(double k, double b, double c) {
    return unit_profile(k / b) - unit_profile(k / c);
}

struct CutoffSpec {
    enum class Kind { lower, upper, band };
    Kind kind = Kind::lower;
    double threshold = 1.0;   // for band: lower edge
    double threshold_hi = 2.0; // band only

    static CutoffSpec above(double b) { return {Kind::lower, b, 0.0}; }
    static CutoffSpec below(double b) { return {Kind::upper, b, 0.0}; }
    static CutoffSpec band(double b, double c) {
        if (!(0.0 < b && b < c)) throw invalid_parameter("cutoff band requires 0 < b < c");
        return {Kind::band, b, c};
    }

    double operator()(double k) const {
        switch (kind) {
            case Kind::lower: return cutoff_above(k, threshold);
            case Kind::upper: return cutoff_below(k, threshold);
            case Kind::band: return cutoff_band(k, threshold, threshold_hi);
        }
        return 0.0;
    }
};

inline double smooth_cutoff(const CutoffSpec& c, double k) { return c(k); }

} // namespace solscope
