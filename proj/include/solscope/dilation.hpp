#pragma once

#include <cmath>
#include <memory>
#include <mutex>

#include "solscope/fft.hpp"
#include "solscope/grid.hpp"
#include "solscope/spline.hpp"

namespace solscope {

// Functional calculus of the dilation generator A = (x.P + P.x)/2 on radial
// fields. In y = log r the generator acts as -i d/dy on
// g(y) = e^{ny/2} f(e^y), so smoothed spectral projections of A are Fourier
// multipliers on a uniform log grid.

struct LogGridSpec {
    double y_min = -5.0;
    double y_max = 5.0;
    int num_points = 8192;
};

struct ProjectionParams {
    double M = 10.0;
    double R = 2.0;
    LogGridSpec log_grid;

    void validate() const {
        const double pi = 3.14159265358979323846;
        if (!(R > 2.0 / pi)) throw invalid_parameter("projection width must satisfy R > 2/pi");
        if (!(log_grid.y_min < log_grid.y_max)) throw invalid_parameter("log window empty");
        int p = log_grid.num_points;
        if (p < 256 || (p & (p - 1)) != 0)
            throw invalid_parameter("log grid size must be a power of two >= 256");
    }

    // R sized for the largest weight exponent in play, per the projection
    // weight bound hypothesis R > 2N/pi.
    static ProjectionParams for_grid(const Grid& g, double weight_exponent = 0.0,
                                     int num_points = 8192) {
        const double pi = 3.14159265358979323846;
        ProjectionParams p;
        p.M = 10.0;
        p.R = std::max(2.0, 1.1 * 2.0 * weight_exponent / pi);
        p.log_grid.y_min = std::log(0.5 * g.nodes()[0]);
        p.log_grid.y_max = std::log(g.r_max());
        p.log_grid.num_points = num_points;
        return p;
    }
};

struct LogField {
    ProjectionParams params;
    int dimension = 0;
    CVec samples;

    double dy() const {
        return (params.log_grid.y_max - params.log_grid.y_min) / params.log_grid.num_points;
    }
    double y(int j) const { return params.log_grid.y_min + j * dy(); }
};

inline void require_window(const Grid& g, const ProjectionParams& p) {
    double y_lo = std::log(g.nodes()[0]);
    double y_hi = std::log(g.nodes()[g.num_points() - 1]);
    if (p.log_grid.y_min > y_lo + 1e-12 || p.log_grid.y_max < y_hi - 1e-12)
        throw window_mismatch("log window does not cover the radial grid");
}

// Resample to log coordinates: g(y) = e^{ny/2} f(e^y), cubic splines on the
// real and imaginary parts, field treated as zero below r_1/2 and beyond
// r_max.
inline LogField to_log_coords(const RadialField& f, const ProjectionParams& p) {
    p.validate();
    const Grid& g = *f.grid;
    require_window(g, p);
    const int nr = g.num_points();
    const int P = p.log_grid.num_points;
    Vec xs(nr + 2);
    Vec yr(nr + 2), yi(nr + 2);
    xs[0] = 0.5 * g.nodes()[0];
    yr[0] = 0.0; yi[0] = 0.0;
    for (int i = 0; i < nr; ++i) {
        xs[i + 1] = g.nodes()[i];
        yr[i + 1] = f.values[i].real();
        yi[i + 1] = f.values[i].imag();
    }
    xs[nr + 1] = g.r_max();
    yr[nr + 1] = 0.0; yi[nr + 1] = 0.0;
    CubicSpline sr(xs, yr), si(xs, yi);
    LogField out;
    out.params = p;
    out.dimension = g.dimension();
    out.samples.resize(P);
    double half_n = 0.5 * g.dimension();
    for (int j = 0; j < P; ++j) {
        double y = out.y(j);
        double r = std::exp(y);
        out.samples[j] = std::exp(half_n * y) * cplx(sr(r), si(r));
    }
    return out;
}

inline RadialField from_log_coords(const LogField& lf, const GridPtr& grid) {
    const int P = lf.params.log_grid.num_points;
    Vec ys(P);
    Vec gr(P), gi(P);
    for (int j = 0; j < P; ++j) {
        ys[j] = lf.params.log_grid.y_min + j * lf.dy();
        gr[j] = lf.samples[j].real();
        gi[j] = lf.samples[j].imag();
    }
    CubicSpline sr(ys, gr), si(ys, gi);
    RadialField out = RadialField::zero(grid);
    double half_n = 0.5 * grid->dimension();
    for (int i = 0; i < grid->num_points(); ++i) {
        double y = std::log(grid->nodes()[i]);
        out.values[i] = std::exp(-half_n * y) * cplx(sr(y), si(y));
    }
    return out;
}

inline double halfspace_multiplier(double xi, double M, double R) {
    return 0.5 * (std::tanh((xi - M) / R) + 1.0);
}

// Fraction of spectral mass in the top octave of the log-grid frequencies;
// > 1e-4 indicates the log resolution is too coarse for the field.
struct HalfspaceDiagnostics {
    double top_octave_fraction = 0.0;
};

// P^+ = (tanh((A-M)/R)+1)/2 via FFT multiplier on the log grid;
// P^- := 1 - P^+ applied in the radial representation, so the partition
// P^+ + P^- = identity holds exactly.
inline RadialField apply_halfspace_projection(const RadialField& f, const ProjectionParams& p,
                                              int sign, HalfspaceDiagnostics* diag = nullptr) {
    if (sign != 1 && sign != -1) throw invalid_parameter("halfspace sign must be +1 or -1");
    LogField lf = to_log_coords(f, p);
    const int P = lf.params.log_grid.num_points;
    CVec& a = lf.samples;
    fft_radix2(a, false);
    if (diag) {
        double tot = 0.0, top = 0.0;
        double ximax = 0.0;
        double L = P * lf.dy();
        for (int j = 0; j < P; ++j) ximax = std::max(ximax, std::abs(fft_freq(j, P, L)));
        for (int j = 0; j < P; ++j) {
            double m = std::norm(a[j]);
            tot += m;
            if (std::abs(fft_freq(j, P, L)) > 0.5 * ximax) top += m;
        }
        diag->top_octave_fraction = tot > 0.0 ? top / tot : 0.0;
    }
    double L = P * lf.dy();
    for (int j = 0; j < P; ++j) a[j] *= halfspace_multiplier(fft_freq(j, P, L), p.M, p.R);
    fft_radix2(a, true);
    RadialField plus = from_log_coords(lf, f.grid);
    if (sign == 1) return plus;
    RadialField out = f;
    out.values -= plus.values;
    return out;
}

// A^k as the log-grid Fourier multiplier xi^k, k in {1,2}.
inline RadialField apply_dilation_power(const RadialField& f, const ProjectionParams& p, int k) {
    if (k != 1 && k != 2) throw invalid_parameter("dilation power supports k in {1,2}");
    LogField lf = to_log_coords(f, p);
    const int P = lf.params.log_grid.num_points;
    CVec& a = lf.samples;
    fft_radix2(a, false);
    double L = P * lf.dy();
    for (int j = 0; j < P; ++j) {
        double xi = fft_freq(j, P, L);
        a[j] *= (k == 1) ? xi : xi * xi;
    }
    fft_radix2(a, true);
    return from_log_coords(lf, f.grid);
}

// Exact Galerkin realization of A on the discrete eigenspace. The matrix of
// -iA in the Dirichlet sine basis of [0, r_max] has the closed form
//   X_ab = -(-1)^{a+b} 2ab/(a^2-b^2), X_aa = 0,
// independent of r_max and the dimension (A acts as -i(r d/dr + 1/2) on the
// reduced fields u = r^{(n-1)/2} f). Conjugating by the exact orthogonal
// node-sine / node-eigenbasis maps gives A on spectral coefficients.
// Used by the estimate bench, where adversarial probe accuracy rules out the
// resampled route.
class DilationOperator {
  public:
    explicit DilationOperator(GridPtr grid) : grid_(std::move(grid)) {
        const int N = grid_->num_points();
        const double pi = 3.14159265358979323846;
        Mat xs(N, N);
        for (int a = 1; a <= N; ++a) {
            xs(a - 1, a - 1) = 0.0;
            for (int b = 1; b < a; ++b) {
                double v = -(((a + b) % 2 == 0) ? 1.0 : -1.0) * 2.0 * double(a) * double(b)
                           / (double(a) * a - double(b) * b);
                xs(a - 1, b - 1) = v;
                xs(b - 1, a - 1) = -v;
            }
        }
        Mat S(N, N);
        for (int i = 0; i < N; ++i)
            for (int a = 1; a <= N; ++a)
                S(i, a - 1) = std::sqrt(2.0 / N) * std::sin(a * pi * (i + 0.5) / N);
        S.col(N - 1) /= std::sqrt(2.0);
        Mat uhat = grid_->weights().cwiseSqrt().asDiagonal() * grid_->basis();
        Mat q = S.transpose() * uhat;
        Mat xe = q.transpose() * xs * q;
        X_ = 0.5 * (xe - xe.transpose());
    }

    const GridPtr& grid() const { return grid_; }
    const Mat& x_matrix() const { return X_; }

    // A c (spectral coefficients), A = -i X
    CVec apply_a(const CVec& c) const { return cplx(0.0, -1.0) * (X_ * c); }
    // A^2 c = -X^2 c
    CVec apply_a2(const CVec& c) const { return -(X_ * (X_ * c).eval()); }

    // h(A) for h(xi) = (tanh((xi-M)/R)+1)/2 (sign=+1) or its complement,
    // via the even/odd split h(A) = E(A^2) + A O(A^2) so only the real
    // symmetric eigenproblem of -X^2 is needed.
    CVec apply_halfspace(const CVec& c, double M, double R, int sign) const {
        ensure_spectrum();
        const int N = static_cast<int>(c.size());
        Vec E(N), O(N);
        for (int i = 0; i < N; ++i) {
            double xi = xi_[i];
            double hp = halfspace_multiplier(xi, M, R);
            double hm = halfspace_multiplier(-xi, M, R);
            E[i] = 0.5 * (hp + hm);
            double ho = 0.5 * (hp - hm);
            O[i] = xi > 1e-12 ? ho / xi : 0.5 / (R * std::cosh(M / R) * std::cosh(M / R));
        }
        CVec y = W_.transpose() * c;
        CVec even = W_ * (E.asDiagonal() * y).eval();
        CVec odd = cplx(0.0, -1.0) * (X_ * (W_ * (O.asDiagonal() * y).eval()).eval());
        CVec out = even + odd;
        if (sign == -1) out = c - out;
        return out;
    }

  private:
    void ensure_spectrum() const {
        std::call_once(spec_once_, [this] {
            Mat a2 = -(X_ * X_);
            Vec s2;
            Mat w;
            sym_eig(a2, s2, w);
            xi_ = s2.cwiseMax(0.0).cwiseSqrt();
            W_ = std::move(w);
        });
    }

    GridPtr grid_;
    Mat X_;
    mutable std::once_flag spec_once_;
    mutable Vec xi_;
    mutable Mat W_;
};

} // namespace solscope
