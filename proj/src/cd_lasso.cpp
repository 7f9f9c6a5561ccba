#include "clars/cd_lasso.hpp"

#include <cmath>
#include <limits>

#include "clars/lars_path.hpp"
#include "clars/numerics.hpp"

namespace clars {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double penalized_objective(const CMatrix& X, const CVector& y, const CVector& beta,
                           double lambda) {
    double l1 = 0.0;
    for (Eigen::Index j = 0; j < beta.size(); ++j) l1 += std::abs(beta(j));
    return 0.5 * (y - X * beta).squaredNorm() + lambda * l1;
}

}  // namespace

LambdaGrid lambda_grid(double lambda0, int L, double epsilon) {
    if (!(lambda0 > 0.0) || L < 1 || !(epsilon > 0.0 && epsilon < 1.0)) {
        throw InvalidDimensionError("lambda_grid: need lambda0 > 0, L >= 1, epsilon in (0,1)");
    }
    LambdaGrid grid;
    grid.L = L;
    grid.epsilon = epsilon;
    grid.values.resize(L + 1);
    for (int l = 0; l <= L; ++l) {
        grid.values[l] = std::pow(epsilon, static_cast<double>(l) / L) * lambda0;
    }
    return grid;
}

CVector cd_solve(const CMatrix& X, const CVector& y, double lambda,
                 const CVector& init, CdDiagnostics* diag, int max_sweeps) {
    const Eigen::Index n = X.rows();
    const Eigen::Index p = X.cols();
    if (init.size() != p) {
        throw InvalidDimensionError("cd_solve: init must have one entry per column");
    }
    CVector beta = init;
    CVector r = y - X * beta;

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double max_change = 0.0;
        double max_abs = 0.0;
        for (Eigen::Index j = 0; j < p; ++j) {
            const Complex bj = beta(j);
            const Complex z = bj + detail::cdot(X.col(j).data(), r.data(), n);
            const Complex nb = soft_threshold(z, lambda);
            const Complex d = nb - bj;
            if (d != Complex(0.0, 0.0)) {
                r -= X.col(j) * d;
                beta(j) = nb;
            }
            max_change = std::max(max_change, std::abs(d));
            max_abs = std::max(max_abs, std::abs(nb));
        }
        if (diag) {
            diag->sweeps = sweep + 1;
            diag->objective_trace.push_back(penalized_objective(X, y, beta, lambda));
        }
        if (max_change <= kCdTolerance * std::max(1.0, max_abs)) {
            return beta;
        }
    }
    throw NoConvergenceError("cd_solve: sweep cap reached before the stopping rule fired");
}

GridSolution solve_grid(const CMatrix& X, const CVector& y, const LambdaGrid& grid) {
    const int n = static_cast<int>(X.rows());
    const Eigen::Index p = X.cols();
    GridSolution sol;
    sol.grid = grid;
    sol.betas.reserve(grid.values.size());
    sol.sparsity.reserve(grid.values.size());
    sol.sigma2_u.reserve(grid.values.size());

    CVector beta = CVector::Zero(p);  // warm start carried down the grid
    for (double lambda : grid.values) {
        beta = cd_solve(X, y, lambda, beta);
        int nnz = 0;
        for (Eigen::Index j = 0; j < p; ++j) {
            if (beta(j) != Complex(0.0, 0.0)) ++nnz;
        }
        double sigma2 = kInf;
        if (nnz < n) {
            sigma2 = (y - X * beta).squaredNorm() / (n - nnz);
        }
        sol.betas.push_back(beta);
        sol.sparsity.push_back(nnz);
        sol.sigma2_u.push_back(sigma2);
    }
    return sol;
}

Selection select_from_grid(const GridSolution& sol, const CMatrix& X,
                           const CVector& y, GicVariant variant) {
    const int n = static_cast<int>(X.rows());
    const int p = static_cast<int>(X.cols());
    const double c = penalty_sequence(n, p, variant);

    std::vector<ScoreEntry> scores(sol.betas.size());
    int best = -1;
    for (std::size_t l = 0; l < sol.betas.size(); ++l) {
        ScoreEntry& e = scores[l];
        e.knot = static_cast<int>(l);
        e.cardinality = sol.sparsity[l];
        e.sigma2_u = sol.sigma2_u[l];
        if (std::isinf(e.sigma2_u)) {
            e.score = kInf;
        } else if (e.sigma2_u == 0.0) {
            e.score = -kInf;
        } else {
            e.score = gic_score(n, e.sigma2_u, e.cardinality, c);
        }
        if (best < 0 || e.score < scores[best].score) {
            best = static_cast<int>(l);
        }
    }

    Selection sel;
    sel.variant = variant;
    sel.scores = std::move(scores);
    sel.knot_hat = best;
    sel.beta_hat = sol.betas[best];  // raw Lasso estimate, no refit
    for (int j = 0; j < p; ++j) {
        if (sel.beta_hat(j) != Complex(0.0, 0.0)) sel.active_set_hat.push_back(j);
    }
    sel.k_hat = static_cast<int>(sel.active_set_hat.size());
    return sel;
}

Selection grid_gic_select(const CMatrix& X, const CVector& y, GicVariant variant,
                          int L, double epsilon) {
    const double lambda0 = lambda_zero(X, y);
    const GridSolution sol = solve_grid(X, y, lambda_grid(lambda0, L, epsilon));
    return select_from_grid(sol, X, y, variant);
}

}  // namespace clars
