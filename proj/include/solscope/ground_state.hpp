#pragma once

#include <cmath>
#include <vector>

#include "solscope/grid.hpp"
#include "solscope/spline.hpp"

namespace solscope {

// Ground state of  Q'' + (n-1)/r Q' - omega Q + lambda Q^{p+1} = 0:
// positive, radially decreasing, exponentially decaying. Found by bisection
// shooting on Q(0); the far tail is patched with the exact decaying solution
// of the linearized equation so the profile reaches r_max at machine-zero
// amplitude.

struct ShootResult {
    double q0 = 0.0;            // converged Q(0)
    double patch_r = 0.0;       // radius where the linear tail takes over
    std::vector<double> fine_r; // RK4 trajectory (diagnostics / residual checks)
    std::vector<double> fine_q;
    double tail_coef = 0.0;
    int dimension = 5;
    double omega = 1.0, lambda = 1.0, power = 1.0;

    // decaying solution of Q'' + (n-1)/r Q' = omega Q (exact for n=3,5,7,
    // leading-order asymptotic otherwise)
    double tail(double r) const {
        double k = std::sqrt(omega);
        double x = k * r;
        switch (dimension) {
            case 3: return std::exp(-x) / r;
            case 5: return std::exp(-x) * (1.0 + 1.0 / x) / (r * r);
            case 7: return std::exp(-x) * (1.0 + 3.0 / x + 3.0 / (x * x)) / (r * r * r);
            default: return std::exp(-x) * std::pow(r, -0.5 * (dimension - 1));
        }
    }

    double value(double r) const {
        if (r <= 0.0) return q0;
        if (r >= patch_r) return tail_coef * tail(r);
        return spline_(r);
    }

    CubicSpline spline_;
};

namespace detail {

struct OdeParams { int n; double om, lam, p; };

inline void ground_rhs(const OdeParams& o, double r, double q, double dq, double& f1, double& f2) {
    f1 = dq;
    double qp = q > 0.0 ? std::pow(q, o.p + 1.0) : -std::pow(-q, o.p + 1.0);
    f2 = -(o.n - 1) / r * dq + o.om * q - o.lam * qp;
}

// -1: crossed zero (amplitude too large); +1: turned up below the well
// center (too small).
inline int classify_shot(const OdeParams& o, double a, double r_stop, double h) {
    double q_eq = std::pow(o.om / o.lam, 1.0 / o.p);
    double r = 1e-4;
    double q = a + (o.om * a - o.lam * std::pow(a, o.p + 1.0)) * r * r / (2.0 * o.n);
    double dq = (o.om * a - o.lam * std::pow(a, o.p + 1.0)) * r / o.n;
    double k1, l1, k2, l2, k3, l3, k4, l4;
    while (r < r_stop) {
        ground_rhs(o, r, q, dq, k1, l1);
        ground_rhs(o, r + 0.5 * h, q + 0.5 * h * k1, dq + 0.5 * h * l1, k2, l2);
        ground_rhs(o, r + 0.5 * h, q + 0.5 * h * k2, dq + 0.5 * h * l2, k3, l3);
        ground_rhs(o, r + h, q + h * k3, dq + h * l3, k4, l4);
        q += h / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4);
        dq += h / 6.0 * (l1 + 2 * l2 + 2 * l3 + l4);
        r += h;
        if (q <= 0.0) return -1;
        if (dq > 0.0 && q < q_eq) return +1;
    }
    return +1;
}

} // namespace detail

inline ShootResult shoot_ground_state_detail(int n, double omega, double lambda, double p,
                                             double r_max) {
    if (!(omega > 0.0 && lambda > 0.0 && p > 0.0))
        throw invalid_parameter("ground state needs positive omega, lambda, p");
    detail::OdeParams o{n, omega, lambda, p};
    double scale = std::sqrt(omega);
    double h = 1e-3 / std::max(1.0, scale);
    double r_stop = std::min(r_max, 40.0 / scale);

    double q_eq = std::pow(omega / lambda, 1.0 / p);
    double lo = 1.05 * q_eq, hi = 4.0 * q_eq;
    int expand = 0;
    while (detail::classify_shot(o, hi, r_stop, h) != -1) {
        hi *= 1.5;
        if (++expand > 60) throw not_converged("ground state bracket: no sign change");
    }
    expand = 0;
    while (detail::classify_shot(o, lo, r_stop, h) != +1) {
        lo = q_eq + 0.5 * (lo - q_eq);
        if (++expand > 60) throw not_converged("ground state bracket: no undershoot");
    }
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        if (detail::classify_shot(o, mid, r_stop, h) == -1) hi = mid;
        else lo = mid;
    }
    double a = lo;

    ShootResult res;
    res.q0 = a;
    res.dimension = n;
    res.omega = omega;
    res.lambda = lambda;
    res.power = p;
    double r = 1e-4;
    double q = a + (omega * a - lambda * std::pow(a, p + 1.0)) * r * r / (2.0 * n);
    double dq = (omega * a - lambda * std::pow(a, p + 1.0)) * r / n;
    res.fine_r.push_back(r);
    res.fine_q.push_back(q);
    double k1, l1, k2, l2, k3, l3, k4, l4;
    const double patch_level = 1e-7 * a;
    while (r < r_stop) {
        detail::ground_rhs(o, r, q, dq, k1, l1);
        detail::ground_rhs(o, r + 0.5 * h, q + 0.5 * h * k1, dq + 0.5 * h * l1, k2, l2);
        detail::ground_rhs(o, r + 0.5 * h, q + 0.5 * h * k2, dq + 0.5 * h * l2, k3, l3);
        detail::ground_rhs(o, r + h, q + h * k3, dq + h * l3, k4, l4);
        q += h / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4);
        dq += h / 6.0 * (l1 + 2 * l2 + 2 * l3 + l4);
        r += h;
        if (q < patch_level || dq > 0.0) break;
        res.fine_r.push_back(r);
        res.fine_q.push_back(q);
    }
    res.patch_r = res.fine_r.back();
    res.tail_coef = res.fine_q.back() / res.tail(res.patch_r);
    if (res.tail_coef * res.tail(r_max) > 1e-8 * a)
        throw not_converged("ground state not decayed at r_max (domain too small)");
    Vec xs(res.fine_r.size() + 1), ys(res.fine_r.size() + 1);
    xs[0] = 0.0; ys[0] = a;
    for (size_t i = 0; i < res.fine_r.size(); ++i) { xs[i + 1] = res.fine_r[i]; ys[i + 1] = res.fine_q[i]; }
    res.spline_ = CubicSpline(xs, ys);
    return res;
}

inline RadialField sample_ground_state(const ShootResult& res, const GridPtr& g) {
    CVec v(g->num_points());
    for (int i = 0; i < g->num_points(); ++i) v[i] = res.value(g->nodes()[i]);
    return RadialField(g, std::move(v));
}

inline RadialField shoot_ground_state(int n, double omega, double lambda, double p,
                                      const GridPtr& grid) {
    if (grid->dimension() != n) throw grid_mismatch("grid dimension differs from requested n");
    return sample_ground_state(shoot_ground_state_detail(n, omega, lambda, p, grid->r_max()), grid);
}

} // namespace solscope
