#pragma once

#include <cmath>
#include <vector>

#include "solscope/errors.hpp"

namespace solscope {
namespace bessel {

// Reduced radial eigenfunction u_nu(z) proportional to z^{1/2} J_nu(z).
// Closed forms for half-integer nu cover odd spatial dimensions n = 3,5,7;
// other orders fall back to std::cyl_bessel_j.
inline double u_reduced(double nu, double z) {
    if (nu == 0.5) return std::sin(z);
    if (nu == 1.5) {
        if (z < 1e-2) {
            // z^2/3 - z^4/30 + z^6/840
            double z2 = z * z;
            return z2 * (1.0 / 3.0 + z2 * (-1.0 / 30.0 + z2 / 840.0));
        }
        return std::sin(z) / z - std::cos(z);
    }
    if (nu == 2.5) {
        if (z < 5e-2) {
            // z^3/15 - z^5/210 + z^7/7560
            double z2 = z * z;
            return z * z2 * (1.0 / 15.0 + z2 * (-1.0 / 210.0 + z2 / 7560.0));
        }
        return (3.0 / (z * z) - 1.0) * std::sin(z) - 3.0 / z * std::cos(z);
    }
    return std::sqrt(z) * std::cyl_bessel_j(nu, z);
}

// d/dz of u_reduced, same conventions.
inline double u_reduced_deriv(double nu, double z) {
    if (nu == 0.5) return std::cos(z);
    if (nu == 1.5) {
        if (z < 1e-2) {
            double z2 = z * z;
            return z * (2.0 / 3.0 + z2 * (-4.0 / 30.0 + z2 * 6.0 / 840.0));
        }
        return std::cos(z) / z - std::sin(z) / (z * z) + std::sin(z);
    }
    if (nu == 2.5) {
        if (z < 5e-2) {
            double z2 = z * z;
            return z2 * (3.0 / 15.0 + z2 * (-5.0 / 210.0 + z2 * 7.0 / 7560.0));
        }
        return -6.0 / (z * z * z) * std::sin(z) + (3.0 / (z * z) - 1.0) * std::cos(z)
             + 3.0 / (z * z) * std::cos(z) + 3.0 / z * std::sin(z);
    }
    // central difference is adequate for the generic fallback
    double h = 1e-6 * (1.0 + z);
    return (u_reduced(nu, z + h) - u_reduced(nu, z - h)) / (2.0 * h);
}

// First `count` positive zeros of J_nu, found on the reduced function
// (same zeros) by forward scan + bisection. Zeros are ~pi apart, so a
// pi/8 scan step cannot skip one.
inline std::vector<double> zeros(double nu, int count) {
    const double pi = 3.14159265358979323846;
    const double step = pi / 8.0;
    std::vector<double> out;
    out.reserve(count);
    double x = 0.5;
    double fx = u_reduced(nu, x);
    while (fx == 0.0) { x += 1e-6; fx = u_reduced(nu, x); }
    while ((int)out.size() < count) {
        double x2 = x + step;
        double f2 = u_reduced(nu, x2);
        if (fx * f2 <= 0.0) {
            double lo = x, hi = x2, flo = fx;
            for (int it = 0; it < 120; ++it) {
                double mid = 0.5 * (lo + hi);
                if (mid == lo || mid == hi) break;
                double fm = u_reduced(nu, mid);
                if (flo * fm <= 0.0) hi = mid;
                else { lo = mid; flo = fm; }
            }
            out.push_back(0.5 * (lo + hi));
        }
        x = x2;
        fx = f2;
        if (x > (count + nu + 10.0) * pi) throw not_converged("bessel zero scan ran past expected range");
    }
    return out;
}

} // namespace bessel
} // namespace solscope
