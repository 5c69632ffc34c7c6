#pragma once

#include <Eigen/Dense>

#ifdef SOLSCOPE_HAVE_LAPACKE
#include <lapacke.h>
#endif

#include "solscope/errors.hpp"

namespace solscope {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;
using cplx = std::complex<double>;

// Symmetric eigendecomposition, ascending eigenvalues.
// LAPACK dsyevd when available (much faster at N ~ 1000), Eigen otherwise.
inline void sym_eig(const Mat& a, Vec& evals, Mat& evecs) {
#ifdef SOLSCOPE_HAVE_LAPACKE
    const int n = static_cast<int>(a.rows());
    evecs = a;
    evals.resize(n);
    int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'L', n, evecs.data(), n, evals.data());
    if (info != 0) throw not_converged("dsyevd failed, info=" + std::to_string(info));
#else
    Eigen::SelfAdjointEigenSolver<Mat> es(a);
    if (es.info() != Eigen::Success) throw not_converged("eigensolver failed");
    evals = es.eigenvalues();
    evecs = es.eigenvectors();
#endif
}

} // namespace solscope
