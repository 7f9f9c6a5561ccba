#pragma once

#include "clars/model_select.hpp"
#include "clars/types.hpp"

namespace clars {

inline constexpr int kDefaultGridSize = 100;
inline constexpr double kDefaultGridEpsilon = 1e-3;
inline constexpr double kCdTolerance = 1e-8;
inline constexpr int kCdMaxSweeps = 10000;

struct LambdaGrid {
    std::vector<double> values;  // L+1 values, geometric from lambda0 down
    double epsilon = 0.0;        // values.back() / values.front()
    int L = 0;
};

// lambda_l = epsilon^(l/L) * lambda0 for l = 0..L.
LambdaGrid lambda_grid(double lambda0, int L, double epsilon);

struct CdDiagnostics {
    int sweeps = 0;
    std::vector<double> objective_trace;  // penalized RSS after each sweep
};

// Cyclic coordinate descent for the complex Lasso at a single penalty.
// Unit-norm columns make every coordinate update one soft-threshold, so
// inactive coefficients are exact zeros. Stops when the largest
// coefficient change in a sweep is <= 1e-8 * max(1, max_j |beta_j|);
// throws NoConvergenceError at the sweep cap.
CVector cd_solve(const CMatrix& X, const CVector& y, double lambda,
                 const CVector& init, CdDiagnostics* diag = nullptr,
                 int max_sweeps = kCdMaxSweeps);

struct GridSolution {
    LambdaGrid grid;
    std::vector<CVector> betas;      // Lasso estimate per grid value
    std::vector<int> sparsity;       // ||beta||_0 per grid value
    std::vector<double> sigma2_u;    // +inf when sparsity >= n
};

// Pathwise solve over the grid, warm-starting each penalty from the
// previous solution. The grid loop is sequential by construction.
GridSolution solve_grid(const CMatrix& X, const CVector& y, const LambdaGrid& grid);

// Grid selection for one variant: argmin over grid points of
// n ln sigma2_u(lambda_l) + ||beta(lambda_l)||_0 * c. The returned
// beta_hat is the raw Lasso estimate at the winning penalty (no refit).
Selection select_from_grid(const GridSolution& sol, const CMatrix& X,
                           const CVector& y, GicVariant variant);

Selection grid_gic_select(const CMatrix& X, const CVector& y, GicVariant variant,
                          int L = kDefaultGridSize, double epsilon = kDefaultGridEpsilon);

}  // namespace clars
