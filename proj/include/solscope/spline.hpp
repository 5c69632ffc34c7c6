#pragma once

#include <vector>

#include "solscope/errors.hpp"
#include "solscope/linalg.hpp"

namespace solscope {

// Natural cubic spline through strictly increasing abscissae. Evaluation
// outside the data range returns zero (fields are compactly supported on
// the grid for our purposes).
class CubicSpline {
  public:
    CubicSpline() = default;
    CubicSpline(Vec x, Vec y) : x_(std::move(x)), y_(std::move(y)) {
        const int n = static_cast<int>(x_.size());
        if (n < 3 || y_.size() != n) throw invalid_parameter("spline needs >= 3 points");
        Vec h(n - 1);
        for (int i = 0; i + 1 < n; ++i) {
            h[i] = x_[i + 1] - x_[i];
            if (!(h[i] > 0.0)) throw invalid_parameter("spline abscissae must increase");
        }
        // tridiagonal solve for second derivatives, natural ends
        m_.setZero(n);
        Vec diag(n), rhs(n), sub(n);
        diag[0] = 1.0; rhs[0] = 0.0; sub[0] = 0.0;
        for (int i = 1; i + 1 < n; ++i) {
            diag[i] = 2.0 * (h[i - 1] + h[i]);
            rhs[i] = 6.0 * ((y_[i + 1] - y_[i]) / h[i] - (y_[i] - y_[i - 1]) / h[i - 1]);
        }
        diag[n - 1] = 1.0; rhs[n - 1] = 0.0;
        // forward elimination (first and last rows are identity)
        Vec cp(n), dp(n);
        cp[0] = 0.0; dp[0] = 0.0;
        for (int i = 1; i + 1 < n; ++i) {
            double lower = h[i - 1], upper = h[i];
            double m = diag[i] - lower * cp[i - 1];
            cp[i] = upper / m;
            dp[i] = (rhs[i] - lower * dp[i - 1]) / m;
        }
        m_[n - 1] = 0.0;
        for (int i = n - 2; i >= 1; --i) m_[i] = dp[i] - cp[i] * m_[i + 1];
        m_[0] = 0.0;
        h_ = std::move(h);
    }

    double operator()(double x) const {
        const int n = static_cast<int>(x_.size());
        if (x < x_[0] || x > x_[n - 1]) return 0.0;
        int lo = 0, hi = n - 1;
        while (hi - lo > 1) {
            int mid = (lo + hi) / 2;
            if (x_[mid] <= x) lo = mid;
            else hi = mid;
        }
        double h = h_[lo];
        double a = (x_[lo + 1] - x) / h, b = (x - x_[lo]) / h;
        return a * y_[lo] + b * y_[lo + 1]
             + ((a * a * a - a) * m_[lo] + (b * b * b - b) * m_[lo + 1]) * h * h / 6.0;
    }

  private:
    Vec x_, y_, m_, h_;
};

} // namespace solscope
