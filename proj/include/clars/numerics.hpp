#pragma once

#include "clars/types.hpp"

namespace clars {

// Relative rank threshold for the QR-based least-squares solve. Scaled by
// the largest column norm of the factored matrix.
inline constexpr double kRankTolerance = 1e-10;

struct LsFit {
    CVector coeffs;    // minimizer of ||y - X_A c||_2
    CVector residual;  // y - X_A * coeffs
};

// Least-squares fit of y on the columns of X_A via column-pivoted
// Householder QR. X_A may have zero columns (null model: coeffs empty,
// residual = y). Throws RankDeficientError when the numerical rank of X_A
// is below its column count.
LsFit ls_fit(const CMatrix& X_A, const CVector& y);

// Proximal operator of t*|z|: shrinks the modulus by t, preserving phase.
// Returns exactly 0 when |z| <= t.
Complex soft_threshold(Complex z, double t);

// Entry j is x_j^H r. Plain sequential summation per column so that
// results are reproducible bit-for-bit by a direct scan.
CVector correlations(const CMatrix& X, const CVector& r);

namespace detail {

// Sequential-order complex dot product sum_i conj(x[i]) * y[i].
inline Complex cdot(const Complex* x, const Complex* y, Eigen::Index n) {
    Complex acc(0.0, 0.0);
    for (Eigen::Index i = 0; i < n; ++i) {
        acc += std::conj(x[i]) * y[i];
    }
    return acc;
}

}  // namespace detail

}  // namespace clars
