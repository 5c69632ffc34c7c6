#pragma once

#include <cmath>
#include <string>
#include <variant>
#include <vector>

#include "solscope/grid.hpp"

namespace solscope {

// Interaction catalog for i dpsi/dt = (H0 + N(|psi|,|x|,t)) psi. Every term
// is real-valued; the total multiplier is the sum of the terms.

struct MonomialTerm {
    int sign = -1;      // -1 focusing, +1 defocusing
    double lambda = 1.0;
    double p = 1.0;     // N += sign * lambda * |psi|^p
};

struct SaturatedTerm {
    double lambda = 1.0;
    double p = 3.0;     // N += -lambda |psi|^p / (1 + |psi|^p)
};

struct PotentialTerm {
    enum class Shape { gaussian, lorentzian };
    enum class Temporal { constant, sine, cosine };
    Shape shape = Shape::gaussian;
    double amp = 1.0;
    double width = 1.0;
    Temporal temporal = Temporal::constant;
    double omega = 0.0;

    double profile(double r) const {
        double u = r / width;
        switch (shape) {
            case Shape::gaussian: return amp * std::exp(-u * u);
            case Shape::lorentzian: return amp / std::pow(1.0 + u * u, 4.0);
        }
        return 0.0;
    }
    double temporal_factor(double t) const {
        switch (temporal) {
            case Temporal::constant: return 1.0;
            case Temporal::sine: return std::sin(omega * t);
            case Temporal::cosine: return std::cos(omega * t);
        }
        return 1.0;
    }
};

using NonlinearityTerm = std::variant<MonomialTerm, SaturatedTerm, PotentialTerm>;

struct NonlinearitySpec {
    std::vector<NonlinearityTerm> terms;

    bool empty() const { return terms.empty(); }

    void validate() const {
        for (const auto& t : terms) {
            if (const auto* m = std::get_if<MonomialTerm>(&t)) {
                if (m->sign != 1 && m->sign != -1) throw invalid_parameter("monomial sign must be +-1");
                if (!(m->lambda > 0.0)) throw invalid_parameter("monomial lambda must be positive");
                if (!(m->p > 0.0)) throw invalid_parameter("monomial power must be positive");
            } else if (const auto* s = std::get_if<SaturatedTerm>(&t)) {
                if (!(s->lambda > 0.0)) throw invalid_parameter("saturated lambda must be positive");
                if (!(s->p > 0.0)) throw invalid_parameter("saturated power must be positive");
            } else if (const auto* v = std::get_if<PotentialTerm>(&t)) {
                if (v->temporal != PotentialTerm::Temporal::constant && !(v->omega > 0.0))
                    throw invalid_parameter("oscillating potential needs omega > 0");
                if (!(v->width > 0.0)) throw invalid_parameter("potential width must be positive");
            }
        }
    }

    // Negative-time data can be generated by conjugation only when the
    // interaction is even in t.
    bool time_reversal_symmetric() const {
        for (const auto& t : terms)
            if (const auto* v = std::get_if<PotentialTerm>(&t))
                if (v->temporal == PotentialTerm::Temporal::sine) return false;
        return true;
    }

    bool energy_defined() const {
        for (const auto& t : terms) {
            if (std::holds_alternative<SaturatedTerm>(t)) return false;
            if (const auto* v = std::get_if<PotentialTerm>(&t))
                if (v->temporal != PotentialTerm::Temporal::constant) return false;
        }
        return true;
    }
};

// |psi|^p with 0^p := 0 (vacuum nodes stay regular for p < 1).
inline double amp_pow(double a, double p) { return a > 0.0 ? std::pow(a, p) : 0.0; }

// The real multiplier N(|psi|,|x|,t) sampled at the nodes.
inline Vec evaluate_nonlinearity_values(const NonlinearitySpec& spec, const RadialField& psi,
                                        double t) {
    const Vec& r = psi.grid->nodes();
    Vec out = Vec::Zero(r.size());
    for (const auto& term : spec.terms) {
        if (const auto* m = std::get_if<MonomialTerm>(&term)) {
            for (int i = 0; i < r.size(); ++i)
                out[i] += m->sign * m->lambda * amp_pow(std::abs(psi.values[i]), m->p);
        } else if (const auto* s = std::get_if<SaturatedTerm>(&term)) {
            for (int i = 0; i < r.size(); ++i) {
                double a = amp_pow(std::abs(psi.values[i]), s->p);
                out[i] += -s->lambda * a / (1.0 + a);
            }
        } else if (const auto* v = std::get_if<PotentialTerm>(&term)) {
            double tf = v->temporal_factor(t);
            for (int i = 0; i < r.size(); ++i) out[i] += tf * v->profile(r[i]);
        }
    }
    return out;
}

inline RadialField evaluate_nonlinearity(const NonlinearitySpec& spec, const RadialField& psi,
                                         double t) {
    Vec v = evaluate_nonlinearity_values(spec, psi, t);
    CVec c(v.size());
    for (int i = 0; i < v.size(); ++i) c[i] = v[i];
    return RadialField(psi.grid, std::move(c));
}

// Conserved energy for monomial terms and constant potentials:
//   <psi, H0 psi> + sum sign * (2 lambda/(p+2)) ||psi||_{p+2}^{p+2} + <psi, V psi>.
// NaN when the spec has no conserved energy.
inline double energy(const NonlinearitySpec& spec, const RadialField& psi) {
    if (!spec.energy_defined()) return std::numeric_limits<double>::quiet_NaN();
    SpectralField s = to_spectral(psi);
    const Vec& k = psi.grid->eigen_wavenumbers();
    double e = 0.0;
    for (int i = 0; i < s.coeffs.size(); ++i) e += k[i] * k[i] * std::norm(s.coeffs[i]);
    const Vec& r = psi.grid->nodes();
    const Vec& w = psi.grid->weights();
    for (const auto& term : spec.terms) {
        if (const auto* m = std::get_if<MonomialTerm>(&term)) {
            double acc = 0.0;
            for (int i = 0; i < r.size(); ++i)
                acc += w[i] * amp_pow(std::abs(psi.values[i]), m->p + 2.0);
            e += m->sign * 2.0 * m->lambda / (m->p + 2.0) * acc;
        } else if (const auto* v = std::get_if<PotentialTerm>(&term)) {
            double acc = 0.0;
            for (int i = 0; i < r.size(); ++i)
                acc += w[i] * v->profile(r[i]) * std::norm(psi.values[i]);
            e += acc;
        }
    }
    return e;
}

} // namespace solscope
