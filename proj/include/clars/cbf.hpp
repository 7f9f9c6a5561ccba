#pragma once

#include <cstdint>
#include <random>

#include "clars/model_select.hpp"
#include "clars/types.hpp"

namespace clars {

// Uniform angular grid over [-90, 90) degrees.
struct AngularGrid {
    double spacing_deg = 2.0;
    std::vector<double> angles_deg;

    static AngularGrid uniform(double spacing_deg);
    int size() const { return static_cast<int>(angles_deg.size()); }
    // Grid position of a configured DoA; throws OffGridDoAError.
    int index_of(double doa_deg) const;
};

struct Scenario {
    int n_sensors = 0;
    AngularGrid grid;
    std::vector<double> true_doas_deg;
    std::vector<double> powers;  // source magnitudes |s_k| in (0, 1]
    double snr_db = 0.0;
    GicVariant gamma = GicVariant::Gic0;

    int k_star() const { return static_cast<int>(true_doas_deg.size()); }
    void validate() const;  // throws on inconsistent fields
};

struct Snapshot {
    CVector y;            // length n
    CVector beta_true;    // length p, source waveforms on the true support
    IndexSet support_true;
    double sigma2 = 0.0;
};

// ULA response for half-wavelength element spacing:
// element m = (1/sqrt(n)) * exp(i pi m sin(theta)). Unit norm.
CVector steering_vector(double theta_rad, int n);

// n x p dictionary whose column j is the steering vector of grid angle j.
CMatrix build_dictionary(const AngularGrid& grid, int n);

// sigma^2 = mean(|s_k|^2) / 10^(snr_db / 10).
double noise_variance_for_snr(const std::vector<double>& powers, double snr_db);

// Deterministic seedable stream with cheap derived substreams, so Monte
// Carlo trials can be generated independently of worker scheduling.
// Output is platform-independent: mt19937_64 bits mapped through fixed
// arithmetic (no library distribution objects).
class RngStream {
public:
    explicit RngStream(std::uint64_t seed);

    // Stream derived from (this stream's seed, index); independent of any
    // draws already made here.
    RngStream substream(std::uint64_t index) const;

    std::uint64_t next_u64() { return engine_(); }
    double uniform();                 // [0, 1), 53-bit
    double normal(double stddev);     // Box-Muller, mean 0
    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
    double spare_normal_ = 0.0;
    bool has_spare_ = false;
};

// y = A(theta) s + eps with Arg(s_k) ~ Unif[0, 2pi) and eps circular
// complex Gaussian: Re and Im parts independent N(0, sigma^2 / 2).
Snapshot generate_snapshot(const Scenario& scenario, RngStream& rng);

}  // namespace clars
