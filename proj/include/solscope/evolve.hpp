#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include "solscope/cutoff.hpp"
#include "solscope/nonlinearity.hpp"
#include "solscope/spectral_ops.hpp"

namespace solscope {

struct EvolutionConfig {
    GridPtr grid;
    NonlinearitySpec nonlinearity;
    RadialField initial;
    double dt = 1e-3;
    double t_end = 1.0;
    int snapshot_stride = 1;
    bool absorbing_mask = false;
    double h1_ceiling_factor = 10.0;

    void validate() const {
        if (!grid) throw invalid_parameter("evolution config needs a grid");
        nonlinearity.validate();
        if (!(dt > 0.0)) throw invalid_parameter("dt must be positive");
        if (!(t_end >= dt)) throw invalid_parameter("t_end must be >= dt");
        if (snapshot_stride < 1) throw invalid_parameter("snapshot stride must be >= 1");
        double kmax = grid->eigen_wavenumbers()[grid->num_points() - 1];
        if (!(dt * kmax * kmax < 3.14159265358979323846))
            throw invalid_parameter("dt violates the sampling bound dt*k_max^2 < pi");
        if (initial.grid.get() != grid.get()) throw grid_mismatch("initial data grid mismatch");
    }

    // Default step from the grid: half the sampling bound.
    static double default_dt(const Grid& g) {
        double kmax = g.eigen_wavenumbers()[g.num_points() - 1];
        return 0.5 * 3.14159265358979323846 / (kmax * kmax);
    }
};

struct MonitorRecord {
    double t = 0.0;
    double mass = 0.0;   // L2 norm
    double h1 = 0.0;     // <P>^1 Sobolev norm
    double energy = std::numeric_limits<double>::quiet_NaN();
};

struct Trajectory {
    GridPtr grid;
    double dt = 0.0;
    std::vector<double> times;
    std::vector<RadialField> states;
    std::vector<MonitorRecord> monitors;

    double t_end() const { return times.empty() ? 0.0 : times.back(); }

    // Nearest snapshot at or spanning time t.
    const RadialField& state_at(double t) const {
        if (times.empty()) throw coverage_gap("empty trajectory");
        if (t < times.front() - 0.5 * dt || t > times.back() + 0.5 * dt)
            throw coverage_gap("requested time outside trajectory");
        size_t best = 0;
        double d = std::abs(times[0] - t);
        for (size_t i = 1; i < times.size(); ++i) {
            double di = std::abs(times[i] - t);
            if (di < d) { d = di; best = i; }
        }
        return states[best];
    }
};

namespace detail {

inline void apply_nonlinear_phase(RadialField& psi, const NonlinearitySpec& spec, double t,
                                  double half_dt) {
    if (spec.empty()) return;
    Vec v = evaluate_nonlinearity_values(spec, psi, t);
    for (int i = 0; i < v.size(); ++i)
        psi.values[i] *= std::exp(cplx(0.0, -half_dt * v[i]));
}

inline double absorbing_profile(double r, double r_max) {
    // smooth ramp from 0 at 0.9 r_max to 1 at r_max
    double s = (r - 0.9 * r_max) / (0.1 * r_max);
    if (s <= 0.0) return 0.0;
    return unit_profile(0.5 + 0.5 * s);
}

} // namespace detail

// One Strang step: half nonlinear phase at t, exact kinetic flow, half
// nonlinear phase at t+dt re-evaluated on the updated field. Real
// multipliers keep the mass exactly.
inline RadialField strang_step(const RadialField& psi, double t, double dt,
                               const NonlinearitySpec& spec) {
    RadialField out = psi;
    detail::apply_nonlinear_phase(out, spec, t, 0.5 * dt);
    out = free_propagate(out, dt);
    detail::apply_nonlinear_phase(out, spec, t + dt, 0.5 * dt);
    if (!out.finite()) throw nan_detected("non-finite field after step at t=" + std::to_string(t + dt));
    return out;
}

inline Trajectory evolve(const EvolutionConfig& cfg) {
    cfg.validate();
    const Grid& g = *cfg.grid;
    const Vec& k = g.eigen_wavenumbers();
    const int N = g.num_points();
    const int nsteps = static_cast<int>(std::llround(cfg.t_end / cfg.dt));

    CVec kinetic_phase(N);
    for (int i = 0; i < N; ++i) kinetic_phase[i] = std::exp(cplx(0.0, -cfg.dt * k[i] * k[i]));
    Vec mask;
    if (cfg.absorbing_mask) {
        mask.resize(N);
        for (int i = 0; i < N; ++i)
            mask[i] = std::exp(-5.0 * cfg.dt * detail::absorbing_profile(g.nodes()[i], g.r_max()));
    }

    Trajectory traj;
    traj.grid = cfg.grid;
    traj.dt = cfg.dt;

    RadialField psi = cfg.initial;
    auto record = [&](double t) {
        MonitorRecord m;
        m.t = t;
        m.mass = l2_norm(psi);
        m.h1 = sobolev_norm(psi, 1.0);
        m.energy = energy(cfg.nonlinearity, psi);
        traj.monitors.push_back(m);
        traj.times.push_back(t);
        traj.states.push_back(psi);
        return m.h1;
    };
    double h1_0 = record(0.0);
    double ceiling = cfg.h1_ceiling_factor * h1_0;

    for (int s = 0; s < nsteps; ++s) {
        double t = s * cfg.dt;
        detail::apply_nonlinear_phase(psi, cfg.nonlinearity, t, 0.5 * cfg.dt);
        SpectralField sc = to_spectral(psi);
        sc.coeffs.array() *= kinetic_phase.array();
        // cheap H1 proxy from the mid-step coefficients
        double h1sq = 0.0;
        for (int i = 0; i < N; ++i) h1sq += (1.0 + k[i] * k[i]) * std::norm(sc.coeffs[i]);
        psi = from_spectral(sc);
        detail::apply_nonlinear_phase(psi, cfg.nonlinearity, t + cfg.dt, 0.5 * cfg.dt);
        if (cfg.absorbing_mask)
            for (int i = 0; i < N; ++i) psi.values[i] *= mask[i];
        if (!psi.finite()) throw nan_detected("non-finite field at t=" + std::to_string(t + cfg.dt));
        if (std::sqrt(h1sq) > ceiling)
            throw h1_ceiling_exceeded("H1 monitor exceeded ceiling (possible blow-up)", t);
        if ((s + 1) % cfg.snapshot_stride == 0 || s + 1 == nsteps) {
            double tn = (s + 1) * cfg.dt;
            if (!traj.times.empty() && std::abs(traj.times.back() - tn) < 0.25 * cfg.dt) continue;
            record(tn);
        }
    }
    return traj;
}

// psi(-t) for t in [0, t_end] via conjugation, valid when the interaction is
// even in time: conj(psi(-t)) solves the same equation from conj(psi0).
inline Trajectory negative_time_trajectory(const EvolutionConfig& cfg) {
    if (!cfg.nonlinearity.time_reversal_symmetric())
        throw invalid_parameter("negative-time data needs a time-reversal-symmetric interaction");
    EvolutionConfig back = cfg;
    RadialField conj0 = cfg.initial;
    conj0.values = conj0.values.conjugate();
    back.initial = conj0;
    Trajectory tr = evolve(back);
    for (auto& st : tr.states) st.values = st.values.conjugate();
    return tr; // states[j] == psi(-times[j])
}

} // namespace solscope
