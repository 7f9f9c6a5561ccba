#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace clars {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

// Ordered set of active column indices (0-based).
using IndexSet = std::vector<int>;

struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Numerical rank of an active submatrix (or its Gram matrix) fell below its
// column count; the dictionary columns in the active set are collinear.
struct RankDeficientError : SolverError {
    using SolverError::SolverError;
};

// y = 0: lambda_0 = 0 and the regularization path is degenerate.
struct ZeroSignalError : SolverError {
    using SolverError::SolverError;
};

struct NoConvergenceError : SolverError {
    using SolverError::SolverError;
};

struct InvalidDimensionError : SolverError {
    using SolverError::SolverError;
};

// Active-set size reached the sample count; the unbiased scale estimate
// has no degrees of freedom left.
struct DegreesExhaustedError : SolverError {
    using SolverError::SolverError;
};

// Residual variance is exactly zero; the caller treats the score as -inf.
struct PerfectFitError : SolverError {
    using SolverError::SolverError;
};

struct OffGridDoAError : SolverError {
    using SolverError::SolverError;
};

inline bool contains(const IndexSet& set, int j) {
    for (int i : set) {
        if (i == j) return true;
    }
    return false;
}

}  // namespace clars
