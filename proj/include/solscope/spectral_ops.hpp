#pragma once

#include <cmath>
#include <functional>
#include <limits>

#include "solscope/cutoff.hpp"
#include "solscope/grid.hpp"

namespace solscope {

// Pointwise spectral multiplier m(k) on the Fourier-Bessel coefficients.
template <class M>
inline RadialField apply_multiplier(const RadialField& f, M&& m) {
    SpectralField s = to_spectral(f);
    const Vec& k = f.grid->eigen_wavenumbers();
    for (int i = 0; i < s.coeffs.size(); ++i) s.coeffs[i] *= m(k[i]);
    return from_spectral(s);
}

// e^{-i t H0}: the free Schroedinger flow, diagonal in the eigenbasis.
inline RadialField free_propagate(const RadialField& f, double t) {
    SpectralField s = to_spectral(f);
    const Vec& k = f.grid->eigen_wavenumbers();
    for (int i = 0; i < s.coeffs.size(); ++i)
        s.coeffs[i] *= std::exp(cplx(0.0, -t * k[i] * k[i]));
    return from_spectral(s);
}

inline RadialField apply_h0(const RadialField& f) {
    SpectralField s = to_spectral(f);
    const Vec& k = f.grid->eigen_wavenumbers();
    for (int i = 0; i < s.coeffs.size(); ++i) s.coeffs[i] *= k[i] * k[i];
    return from_spectral(s);
}

// Dyadic Littlewood-Paley block F(2^j < |P| <= 2^{j+1}).
inline RadialField littlewood_paley_project(const RadialField& f, int j) {
    if (j < 0) throw invalid_parameter("littlewood_paley_project requires j >= 0");
    double b = std::pow(2.0, j), c = 2.0 * b;
    return apply_multiplier(f, [&](double k) { return cutoff_band(k, b, c); });
}

// || <x>^sigma f ||_{L^p} by grid quadrature; p = infinity takes the sup
// over nodes.
inline double weighted_norm(const RadialField& f, double sigma, double p) {
    const Vec& r = f.grid->nodes();
    const Vec& w = f.grid->weights();
    if (std::isinf(p)) {
        double m = 0.0;
        for (int i = 0; i < r.size(); ++i)
            m = std::max(m, std::pow(1.0 + r[i] * r[i], 0.5 * sigma) * std::abs(f.values[i]));
        return m;
    }
    if (p < 1.0) throw invalid_parameter("weighted_norm requires p >= 1");
    double s = 0.0;
    for (int i = 0; i < r.size(); ++i) {
        double v = std::pow(1.0 + r[i] * r[i], 0.5 * sigma) * std::abs(f.values[i]);
        s += w[i] * std::pow(v, p);
    }
    return std::pow(s, 1.0 / p);
}

// || <P>^a f ||_{L^2} via the spectral multiplier (1+k^2)^{a/2}.
inline double sobolev_norm(const RadialField& f, double a) {
    if (a < 0.0 || a > 2.0) throw invalid_parameter("sobolev_norm supports a in [0,2]");
    SpectralField s = to_spectral(f);
    const Vec& k = f.grid->eigen_wavenumbers();
    double acc = 0.0;
    for (int i = 0; i < s.coeffs.size(); ++i)
        acc += std::pow(1.0 + k[i] * k[i], a) * std::norm(s.coeffs[i]);
    return std::sqrt(acc);
}

// Pointwise multiplication by a cutoff profile in |x|.
inline RadialField spatial_cutoff_apply(const RadialField& f, const CutoffSpec& c) {
    RadialField out = f;
    const Vec& r = f.grid->nodes();
    for (int i = 0; i < r.size(); ++i) out.values[i] *= c(r[i]);
    return out;
}

template <class P>
inline RadialField apply_profile(const RadialField& f, P&& profile) {
    RadialField out = f;
    const Vec& r = f.grid->nodes();
    for (int i = 0; i < r.size(); ++i) out.values[i] *= profile(r[i]);
    return out;
}

// [H0, F(|x| ...)] f computed directly as H0(Ff) - F(H0 f).
inline RadialField h0_commutator(const RadialField& f, const CutoffSpec& c) {
    RadialField ff = spatial_cutoff_apply(f, c);
    RadialField h0f = apply_h0(f);
    RadialField out = apply_h0(ff);
    const Vec& r = f.grid->nodes();
    for (int i = 0; i < r.size(); ++i) out.values[i] -= c(r[i]) * h0f.values[i];
    return out;
}

// Radial derivative via the analytic derivative of the spectral basis.
inline RadialField radial_derivative(const RadialField& f) {
    SpectralField s = to_spectral(f);
    return RadialField(f.grid, f.grid->basis_deriv() * s.coeffs);
}

} // namespace solscope
