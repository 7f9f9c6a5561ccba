#pragma once

#include "clars/lars_path.hpp"
#include "clars/types.hpp"

namespace clars {

enum class GicVariant : int {
    Gic0 = 0,  // BIC: c_n = ln n
    Gic1 = 1,  // c_n = ln n * ln(ln p)
    Gic2 = 2,  // c_n = ln p * ln(ln n)
};

// Penalty coefficient c_{n,gamma}. Requires n >= 3 and p >= 3 so the
// iterated logarithms stay positive; throws InvalidDimensionError.
double penalty_sequence(int n, int p, GicVariant variant);

// ||y - X_A X_A^+ y||^2 / (n - k), the bias-corrected residual variance
// of the least-squares fit on X_A; ||y||^2 / n for the null model.
// Throws DegreesExhaustedError when k >= n.
double unbiased_noise_variance(const CVector& y, const CMatrix& X_A);

// n * ln(sigma2_u) + k * c. Throws PerfectFitError when sigma2_u == 0;
// callers treat that hypothesis as score -inf.
double gic_score(int n, double sigma2_u, int k, double c);

struct ScoreEntry {
    int knot = 0;          // knot index within the path
    int cardinality = 0;   // |A_k|
    double sigma2_u = 0.0;
    double score = 0.0;    // -inf encodes a perfect fit
};

struct Selection {
    int k_hat = 0;             // |active_set_hat|
    int knot_hat = 0;          // knot (or grid) index attaining the minimum
    IndexSet active_set_hat;
    CVector beta_hat;          // length p; LS refit on the selected set
    std::vector<ScoreEntry> scores;
    GicVariant variant = GicVariant::Gic0;
};

// Residual variance of every knot hypothesis, shared by all GIC variants.
// Entries with |A_k| >= n keep sigma2_u = +inf and are never selectable.
std::vector<ScoreEntry> score_path(const LassoPath& path, const CMatrix& X,
                                   const CVector& y);

// Argmin of the scored hypotheses for one variant, plus the debiased LS
// refit on the winning active set. Ties and perfect fits resolve to the
// smallest knot index.
Selection select_from_scores(std::vector<ScoreEntry> scores, const LassoPath& path,
                             const CMatrix& X, const CVector& y, GicVariant variant);

Selection select_model(const LassoPath& path, const CMatrix& X, const CVector& y,
                       GicVariant variant);

}  // namespace clars
