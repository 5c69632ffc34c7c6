#pragma once

#include <cmath>
#include <memory>
#include <mutex>
#include <vector>

#include "solscope/bessel.hpp"
#include "solscope/errors.hpp"
#include "solscope/linalg.hpp"

namespace solscope {

// Radial grid on (0, r_max): uniform nodes r_i = (i - 1/2) dr offset from the
// coordinate singularity, midpoint quadrature weights w_i = r_i^{n-1} dr for
// integrals against r^{n-1} dr, and the spectral basis diagonalizing the
// radial Laplacian with a Dirichlet condition at r_max.
//
// The basis columns are the exact Dirichlet eigenfunctions
//   phi_m(r) = c_m r^{-(n-2)/2} J_nu(k_m r),  nu = (n-2)/2,  k_m = j_{nu,m}/r_max,
// sampled at the nodes and orthonormalized in the discrete weighted inner
// product by bottom-up (Cholesky) Gram-Schmidt, so low modes keep their
// continuum shape and the discrete transform is unitary to machine precision.
class Grid {
  public:
    Grid(int n, double r_max, int num_points)
        : n_(n), r_max_(r_max), N_(num_points) {
        if (n < 3) throw invalid_parameter("dimension must satisfy n >= 3");
        if (num_points < 16) throw invalid_parameter("num_points must be >= 16");
        if (!(r_max > 0.0)) throw invalid_parameter("r_max must be positive");
        dr_ = r_max_ / N_;
        nodes_.resize(N_);
        weights_.resize(N_);
        for (int i = 0; i < N_; ++i) {
            nodes_[i] = (i + 0.5) * dr_;
            weights_[i] = std::pow(nodes_[i], n_ - 1) * dr_;
        }
        double nu = 0.5 * (n_ - 2);
        auto z = bessel::zeros(nu, N_);
        eigen_k_.resize(N_);
        for (int i = 0; i < N_; ++i) eigen_k_[i] = z[i] / r_max_;
    }

    int dimension() const { return n_; }
    double r_max() const { return r_max_; }
    int num_points() const { return N_; }
    double dr() const { return dr_; }
    const Vec& nodes() const { return nodes_; }
    const Vec& weights() const { return weights_; }
    const Vec& eigen_wavenumbers() const { return eigen_k_; }

    // Orthonormalized basis sampled at nodes; column m is the m-th mode.
    const Mat& basis() const { ensure_basis(); return basis_; }
    // diag(weights) * basis, the analysis operator (forward transform matrix).
    const Mat& basis_w() const { ensure_basis(); return basis_w_; }
    // Linear combinations mapping raw normalized Bessel samples to the
    // orthonormal basis; needed to evaluate basis functions off-grid.
    const Mat& basis_combo() const { ensure_basis(); return combo_; }

    // d/dr of the basis columns at the nodes (same combinations applied to
    // the analytic derivative samples).
    const Mat& basis_deriv() const {
        ensure_basis();
        std::call_once(deriv_once_, [this] {
            double nu = 0.5 * (n_ - 2);
            double ex = 0.5 * (n_ - 1);
            Mat dphi(N_, N_);
            for (int m = 0; m < N_; ++m) {
                double k = eigen_k_[m];
                for (int i = 0; i < N_; ++i) {
                    double r = nodes_[i];
                    double z = k * r;
                    double u = bessel::u_reduced(nu, z);
                    double up = bessel::u_reduced_deriv(nu, z);
                    dphi(i, m) = raw_scale_[m]
                        * (std::pow(r, -ex) * k * up - ex * std::pow(r, -ex - 1.0) * u);
                }
            }
            deriv_ = dphi * combo_;
        });
        return deriv_;
    }

    // Raw normalized Bessel samples evaluated at arbitrary radii (rows), for
    // fine-grid quadrature; multiply by basis_combo() to get basis functions.
    Mat raw_samples(const Vec& radii) const {
        ensure_basis();
        double nu = 0.5 * (n_ - 2);
        double ex = 0.5 * (n_ - 1);
        Mat out(radii.size(), N_);
        for (int m = 0; m < N_; ++m) {
            double k = eigen_k_[m];
            for (int i = 0; i < radii.size(); ++i) {
                double r = radii[i];
                out(i, m) = raw_scale_[m] * std::pow(r, -ex) * bessel::u_reduced(nu, k * r);
            }
        }
        return out;
    }

    bool same_as(const Grid& o) const {
        return n_ == o.n_ && r_max_ == o.r_max_ && N_ == o.N_;
    }

  private:
    void ensure_basis() const {
        std::call_once(basis_once_, [this] {
            double nu = 0.5 * (n_ - 2);
            double ex = 0.5 * (n_ - 1);
            Mat phi(N_, N_);
            for (int m = 0; m < N_; ++m) {
                double k = eigen_k_[m];
                for (int i = 0; i < N_; ++i) {
                    double r = nodes_[i];
                    phi(i, m) = std::pow(r, -ex) * bessel::u_reduced(nu, k * r);
                }
            }
            raw_scale_.resize(N_);
            for (int m = 0; m < N_; ++m) {
                double s2 = 0.0;
                for (int i = 0; i < N_; ++i) s2 += weights_[i] * phi(i, m) * phi(i, m);
                raw_scale_[m] = 1.0 / std::sqrt(s2);
                phi.col(m) *= raw_scale_[m];
            }
            Mat combo = Mat::Identity(N_, N_);
            Mat b = phi;
            for (int pass = 0; pass < 4; ++pass) {
                Mat g = b.transpose() * (weights_.asDiagonal() * b);
                double err = (g - Mat::Identity(N_, N_)).cwiseAbs().maxCoeff();
                if (err < 1e-13) break;
                Eigen::LLT<Mat> llt(g);
                if (llt.info() != Eigen::Success)
                    throw not_converged("grid basis Gram not positive definite");
                Mat bt = b.transpose();
                llt.matrixL().solveInPlace(bt);
                b = bt.transpose();
                Mat ct = combo.transpose();
                llt.matrixL().solveInPlace(ct);
                combo = ct.transpose();
            }
            basis_ = std::move(b);
            combo_ = std::move(combo);
            basis_w_ = weights_.asDiagonal() * basis_;
        });
    }

    int n_;
    double r_max_;
    int N_;
    double dr_;
    Vec nodes_, weights_, eigen_k_;
    mutable std::once_flag basis_once_, deriv_once_;
    mutable Mat basis_, basis_w_, combo_, deriv_;
    mutable Vec raw_scale_;
};

using GridPtr = std::shared_ptr<const Grid>;

inline GridPtr build_grid(int n, double r_max, int num_points) {
    return std::make_shared<Grid>(n, r_max, num_points);
}

struct RadialField {
    GridPtr grid;
    CVec values;

    RadialField() = default;
    RadialField(GridPtr g, CVec v) : grid(std::move(g)), values(std::move(v)) {
        if (values.size() != grid->num_points())
            throw grid_mismatch("field size does not match grid");
    }
    static RadialField zero(const GridPtr& g) {
        return RadialField(g, CVec::Zero(g->num_points()));
    }
    template <class F>
    static RadialField sample(const GridPtr& g, F&& f) {
        CVec v(g->num_points());
        for (int i = 0; i < g->num_points(); ++i) v[i] = f(g->nodes()[i]);
        return RadialField(g, std::move(v));
    }
    bool finite() const {
        for (int i = 0; i < values.size(); ++i)
            if (!std::isfinite(values[i].real()) || !std::isfinite(values[i].imag())) return false;
        return true;
    }
};

struct SpectralField {
    GridPtr grid;
    CVec coeffs;

    SpectralField() = default;
    SpectralField(GridPtr g, CVec c) : grid(std::move(g)), coeffs(std::move(c)) {
        if (coeffs.size() != grid->num_points())
            throw grid_mismatch("coefficient size does not match grid");
    }
};

inline void require_same_grid(const GridPtr& a, const GridPtr& b) {
    if (a.get() != b.get() && !a->same_as(*b)) throw grid_mismatch("grids differ");
}

inline SpectralField to_spectral(const RadialField& f) {
    return SpectralField(f.grid, f.grid->basis_w().transpose() * f.values);
}

inline RadialField from_spectral(const SpectralField& s) {
    return RadialField(s.grid, s.grid->basis() * s.coeffs);
}

// Weighted L2 inner product and norm on the grid's quadrature.
inline cplx inner(const RadialField& a, const RadialField& b) {
    require_same_grid(a.grid, b.grid);
    cplx s = 0.0;
    const Vec& w = a.grid->weights();
    for (int i = 0; i < w.size(); ++i) s += w[i] * std::conj(a.values[i]) * b.values[i];
    return s;
}

inline double l2_norm(const RadialField& f) {
    double s = 0.0;
    const Vec& w = f.grid->weights();
    for (int i = 0; i < w.size(); ++i) s += w[i] * std::norm(f.values[i]);
    return std::sqrt(s);
}

inline double l2_norm(const SpectralField& s) { return s.coeffs.norm(); }

} // namespace solscope
