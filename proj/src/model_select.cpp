#include "clars/model_select.hpp"

#include <cmath>
#include <limits>

#include "clars/numerics.hpp"

namespace clars {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

CMatrix active_columns(const CMatrix& X, const IndexSet& set) {
    CMatrix sub(X.rows(), static_cast<Eigen::Index>(set.size()));
    for (std::size_t i = 0; i < set.size(); ++i) {
        sub.col(static_cast<Eigen::Index>(i)) = X.col(set[i]);
    }
    return sub;
}

}  // namespace

double penalty_sequence(int n, int p, GicVariant variant) {
    if (n < 3 || p < 3) {
        throw InvalidDimensionError("penalty_sequence: need n >= 3 and p >= 3");
    }
    switch (variant) {
        case GicVariant::Gic0:
            return std::log(static_cast<double>(n));
        case GicVariant::Gic1:
            return std::log(static_cast<double>(n)) * std::log(std::log(static_cast<double>(p)));
        case GicVariant::Gic2:
            return std::log(static_cast<double>(p)) * std::log(std::log(static_cast<double>(n)));
    }
    throw InvalidDimensionError("penalty_sequence: unknown variant");
}

double unbiased_noise_variance(const CVector& y, const CMatrix& X_A) {
    const int n = static_cast<int>(y.size());
    const int k = static_cast<int>(X_A.cols());
    if (k >= n) {
        throw DegreesExhaustedError("unbiased_noise_variance: need |A| < n");
    }
    if (k == 0) {
        return y.squaredNorm() / n;
    }
    const LsFit fit = ls_fit(X_A, y);
    return fit.residual.squaredNorm() / (n - k);
}

double gic_score(int n, double sigma2_u, int k, double c) {
    if (sigma2_u < 0.0) {
        throw InvalidDimensionError("gic_score: negative variance");
    }
    if (sigma2_u == 0.0) {
        throw PerfectFitError("gic_score: zero residual variance");
    }
    return n * std::log(sigma2_u) + k * c;
}

std::vector<ScoreEntry> score_path(const LassoPath& path, const CMatrix& X,
                                   const CVector& y) {
    const int n = static_cast<int>(X.rows());
    std::vector<ScoreEntry> scores;
    scores.reserve(path.knots.size());
    for (const Knot& knot : path.knots) {
        ScoreEntry entry;
        entry.knot = knot.k;
        entry.cardinality = static_cast<int>(knot.active_set.size());
        if (entry.cardinality >= n) {
            entry.sigma2_u = kInf;  // Eq.-style estimate undefined; never selectable
        } else if (entry.cardinality == 0) {
            entry.sigma2_u = y.squaredNorm() / n;
        } else {
            entry.sigma2_u = unbiased_noise_variance(y, active_columns(X, knot.active_set));
        }
        scores.push_back(entry);
    }
    return scores;
}

Selection select_from_scores(std::vector<ScoreEntry> scores, const LassoPath& path,
                             const CMatrix& X, const CVector& y, GicVariant variant) {
    const int n = static_cast<int>(X.rows());
    const int p = static_cast<int>(X.cols());
    const double c = penalty_sequence(n, p, variant);

    int best = -1;
    for (std::size_t i = 0; i < scores.size(); ++i) {
        ScoreEntry& e = scores[i];
        if (std::isinf(e.sigma2_u)) {
            e.score = kInf;
        } else if (e.sigma2_u == 0.0) {
            e.score = -kInf;  // perfect fit wins unless a smaller knot also fits
        } else {
            e.score = gic_score(n, e.sigma2_u, e.cardinality, c);
        }
        if (best < 0 || e.score < scores[best].score) {
            best = static_cast<int>(i);
        }
    }

    Selection sel;
    sel.variant = variant;
    sel.scores = std::move(scores);
    sel.knot_hat = path.knots[best].k;
    sel.active_set_hat = path.knots[best].active_set;
    sel.k_hat = static_cast<int>(sel.active_set_hat.size());
    sel.beta_hat = CVector::Zero(p);
    if (sel.k_hat > 0) {
        const LsFit fit = ls_fit(active_columns(X, sel.active_set_hat), y);
        for (int i = 0; i < sel.k_hat; ++i) {
            sel.beta_hat(sel.active_set_hat[i]) = fit.coeffs(i);
        }
    }
    return sel;
}

Selection select_model(const LassoPath& path, const CMatrix& X, const CVector& y,
                       GicVariant variant) {
    return select_from_scores(score_path(path, X, y), path, X, y, variant);
}

}  // namespace clars
