#include "clars/numerics.hpp"

namespace clars {

LsFit ls_fit(const CMatrix& X_A, const CVector& y) {
    const Eigen::Index k = X_A.cols();
    if (k == 0) {
        return {CVector(0), y};
    }
    if (X_A.rows() != y.size()) {
        throw InvalidDimensionError("ls_fit: row count of X_A must match y");
    }
    Eigen::ColPivHouseholderQR<CMatrix> qr(X_A);
    qr.setThreshold(kRankTolerance);
    if (qr.rank() < k) {
        throw RankDeficientError("ls_fit: active columns are numerically collinear");
    }
    LsFit fit;
    fit.coeffs = qr.solve(y);
    fit.residual = y - X_A * fit.coeffs;
    return fit;
}

Complex soft_threshold(Complex z, double t) {
    const double m = std::abs(z);
    if (m <= t) {
        return Complex(0.0, 0.0);
    }
    return z * ((m - t) / m);
}

CVector correlations(const CMatrix& X, const CVector& r) {
    if (X.rows() != r.size()) {
        throw InvalidDimensionError("correlations: r must have one entry per row of X");
    }
    const Eigen::Index p = X.cols();
    CVector c(p);
    for (Eigen::Index j = 0; j < p; ++j) {
        c(j) = detail::cdot(X.col(j).data(), r.data(), X.rows());
    }
    return c;
}

}  // namespace clars
