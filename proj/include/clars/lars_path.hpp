#pragma once

#include "clars/types.hpp"

namespace clars {

// One breakpoint of the Lasso regularization path.
struct Knot {
    int k = 0;            // knot index, 0-based
    double lambda = 0.0;  // penalty value at the breakpoint
    IndexSet active_set;  // support of the solution just above lambda
    CVector beta;         // coefficients at lambda (length p)
};

struct LassoPath {
    std::vector<Knot> knots;  // knots[0] = (lambda_0, {}, 0)
    int k_requested = 0;

    int k_actual() const { return static_cast<int>(knots.size()) - 1; }
    // True when the path ended before k_requested moves (no admissible
    // step, Gram rank loss, or the lambda floor).
    bool stalled() const { return k_actual() < k_requested; }
};

// Smallest penalty nulling every coefficient: max_j |<x_j, y>|. Also
// reports the attaining column through argmax_index when non-null.
// Requires unit-norm columns; throws ZeroSignalError when y = 0.
double lambda_zero(const CMatrix& X, const CVector& y, int* argmax_index = nullptr);

// Complex-valued LARS-Lasso knot recursion with unit weights.
//
// Starting from (lambda_0, empty set), each move advances the active
// coefficients along delta = (X_A^H X_A)^{-1} s_A, where s_A holds the
// unit phasors of the active correlations, until the first of
//   - an inactive column's correlation modulus catching up with the
//     shrinking active level (entry), or
//   - an active coefficient trajectory passing through zero (drop).
// For real-valued data the recursion reduces to the classic LARS-Lasso
// path. For complex data the coefficient path is only piecewise linear
// under a per-knot phase linearization, so knots beyond the exactly-known
// lambda_0 are approximations.
//
// The path ends early (no exception) when no candidate step lies in
// (0, lambda_k], when the active Gram matrix loses numerical rank, or
// when lambda falls below 1e-12 * lambda_0.
LassoPath compute_path(const CMatrix& X, const CVector& y, int K);

}  // namespace clars
