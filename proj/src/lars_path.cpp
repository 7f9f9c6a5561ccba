#include "clars/lars_path.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "clars/numerics.hpp"

namespace clars {

namespace {

constexpr double kLambdaFloorRel = 1e-12;  // stop when lambda < 1e-12 * lambda_0
constexpr double kDropTolerance = 1e-8;    // trajectory-through-zero tolerance
constexpr double kQuadDegenerate = 1e-14;  // |b|^2 - 1 below this is linear

struct Candidate {
    double gamma = 0.0;
    bool entry = true;
    int index = -1;
};

// Smallest root of q2*g^2 + q1*g + q0 = 0 inside (0, hi]; NaN when none.
double smallest_root_in(double q2, double q1, double q0, double hi) {
    double roots[2];
    int count = 0;
    if (std::abs(q2) <= kQuadDegenerate) {
        if (q1 != 0.0) roots[count++] = -q0 / q1;
    } else {
        const double disc = q1 * q1 - 4.0 * q2 * q0;
        if (disc >= 0.0) {
            const double sq = std::sqrt(disc);
            const double q = -0.5 * (q1 + std::copysign(sq, q1));
            if (q != 0.0) {
                roots[count++] = q / q2;
                roots[count++] = q0 / q;
            } else {
                roots[count++] = 0.0;  // double root at zero
            }
        }
    }
    double best = std::numeric_limits<double>::quiet_NaN();
    for (int i = 0; i < count; ++i) {
        const double g = roots[i];
        if (g > 0.0 && g <= hi && (!(best == best) || g < best)) {
            best = g;
        }
    }
    return best;
}

void check_unit_columns(const CMatrix& X) {
    for (Eigen::Index j = 0; j < X.cols(); ++j) {
        if (std::abs(X.col(j).squaredNorm() - 1.0) > 1e-6) {
            throw InvalidDimensionError("compute_path: dictionary columns must be unit-norm");
        }
    }
}

}  // namespace

double lambda_zero(const CMatrix& X, const CVector& y, int* argmax_index) {
    bool all_zero = true;
    for (Eigen::Index i = 0; i < y.size(); ++i) {
        if (y(i) != Complex(0.0, 0.0)) {
            all_zero = false;
            break;
        }
    }
    if (all_zero) {
        throw ZeroSignalError("lambda_zero: y is identically zero");
    }
    const CVector c = correlations(X, y);
    double best = -1.0;
    int best_j = -1;
    for (Eigen::Index j = 0; j < c.size(); ++j) {
        const double m = std::abs(c(j));
        if (m > best) {
            best = m;
            best_j = static_cast<int>(j);
        }
    }
    if (best <= 0.0) {
        throw ZeroSignalError("lambda_zero: y is orthogonal to every column");
    }
    if (argmax_index) *argmax_index = best_j;
    return best;
}

LassoPath compute_path(const CMatrix& X, const CVector& y, int K) {
    const int n = static_cast<int>(X.rows());
    const int p = static_cast<int>(X.cols());
    const int k_max = std::min(n - 1, p);
    if (K < 0 || K > k_max) {
        throw InvalidDimensionError("compute_path: K must lie in [0, min(n-1, p)]");
    }
    check_unit_columns(X);

    LassoPath path;
    path.k_requested = K;

    int first_index = -1;
    const double lambda0 = lambda_zero(X, y, &first_index);
    path.knots.push_back(Knot{0, lambda0, {}, CVector::Zero(p)});

    IndexSet active;              // insertion-ordered working set
    CVector beta = CVector::Zero(p);
    double lambda = lambda0;
    bool pending_entry = true;
    int pending_index = first_index;

    for (int k = 1; k <= K; ++k) {
        if (pending_entry) {
            active.push_back(pending_index);
        } else {
            active.erase(std::find(active.begin(), active.end(), pending_index));
        }
        const int just_dropped = pending_entry ? -1 : pending_index;
        const int kw = static_cast<int>(active.size());
        if (kw == 0) break;

        CMatrix X_W(n, kw);
        for (int i = 0; i < kw; ++i) X_W.col(i) = X.col(active[i]);
        CVector beta_w(kw);
        for (int i = 0; i < kw; ++i) beta_w(i) = beta(active[i]);

        const CVector r = y - X_W * beta_w;
        const CVector c_w = correlations(X_W, r);
        CVector phasor(kw);
        bool degenerate = false;
        for (int i = 0; i < kw; ++i) {
            const double m = std::abs(c_w(i));
            if (m == 0.0) {
                degenerate = true;
                break;
            }
            phasor(i) = c_w(i) / m;
        }
        if (degenerate) break;

        const CMatrix gram = X_W.adjoint() * X_W;
        Eigen::ColPivHouseholderQR<CMatrix> qr(gram);
        qr.setThreshold(kRankTolerance);
        if (qr.rank() < kw) break;  // active columns collinear: terminate
        const CVector delta = qr.solve(phasor);
        const CVector x_delta = X_W * delta;

        Candidate best;
        bool have = false;
        for (int j = 0; j < p; ++j) {
            if (j == just_dropped || contains(active, j)) continue;
            const Complex a = detail::cdot(X.col(j).data(), r.data(), n);
            const Complex b = detail::cdot(X.col(j).data(), x_delta.data(), n);
            const double q2 = std::norm(b) - 1.0;
            const double q1 = 2.0 * (lambda - std::real(std::conj(a) * b));
            const double q0 = std::norm(a) - lambda * lambda;
            const double g = smallest_root_in(q2, q1, q0, lambda);
            if (g == g && (!have || g < best.gamma)) {
                best = Candidate{g, true, j};
                have = true;
            }
        }
        for (int i = 0; i < kw; ++i) {
            const Complex dj = delta(i);
            if (dj == Complex(0.0, 0.0)) continue;
            const Complex bj = beta(active[i]);
            const double g = -std::real(std::conj(bj) * dj) / std::norm(dj);
            if (g <= 0.0 || g > lambda) continue;
            if (std::abs(bj + g * dj) > kDropTolerance * (1.0 + std::abs(bj))) continue;
            if (!have || g < best.gamma) {
                best = Candidate{g, false, active[i]};
                have = true;
            }
        }
        if (!have) break;  // path stalled: no admissible step

        for (int i = 0; i < kw; ++i) {
            beta(active[i]) += best.gamma * delta(i);
        }
        if (!best.entry) beta(best.index) = Complex(0.0, 0.0);
        lambda -= best.gamma;

        path.knots.push_back(Knot{k, lambda, active, beta});
        pending_entry = best.entry;
        pending_index = best.index;

        if (lambda < kLambdaFloorRel * lambda0) break;
    }
    return path;
}

}  // namespace clars
