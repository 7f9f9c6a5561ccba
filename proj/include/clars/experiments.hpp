#pragma once

#include <cstdint>
#include <optional>

#include "clars/cbf.hpp"
#include "clars/cd_lasso.hpp"

namespace clars {

enum class MethodKind { ClarsGic, GridGic };

struct MethodSpec {
    MethodKind kind = MethodKind::ClarsGic;
    GicVariant gamma = GicVariant::Gic0;

    bool operator==(const MethodSpec&) const = default;
};

std::string method_label(const MethodSpec& m);

struct TrialRecord {
    int trial_id = 0;
    MethodSpec method;
    int k_hat = 0;
    IndexSet active_set_hat;
    std::vector<Complex> beta_hat_on_support;  // estimate restricted to active_set_hat
    double squared_error = 0.0;                // ||beta_true - beta_hat||^2 over C^p
    bool failed = false;
    std::string error;
};

struct MethodMetrics {
    MethodSpec method;
    double pd = 0.0;   // fraction of trials with k_hat == k*
    double per = 0.0;  // fraction of trials with exact support recovery
    double mse = 0.0;  // mean squared error over full-length vectors
    int failures = 0;
};

struct McReport {
    Scenario scenario;
    int trials = 0;
    std::uint64_t master_seed = 0;
    std::vector<MethodMetrics> metrics;
    std::vector<TrialRecord> records;  // ordered by (trial_id, method)
    int failure_count = 0;
    // Sweep annotations.
    std::string axis_name;
    double axis_value = 0.0;
};

// Failed trials count as misses in PD/PER; their squared error is frozen
// at ||beta_true||^2 (the null estimate) when recorded.
double metric_pd(const std::vector<TrialRecord>& records, int k_star);
double metric_per(const std::vector<TrialRecord>& records, const IndexSet& support_true);
double metric_mse(const std::vector<TrialRecord>& records);

struct McOptions {
    int workers = 1;
    bool keep_records = true;
    int grid_L = kDefaultGridSize;
    double grid_epsilon = kDefaultGridEpsilon;
};

// Runs M independent trials: per trial, generate a snapshot from the
// (master_seed, trial_id) substream and apply every requested method.
// Output is a pure function of (scenario, M, methods, master_seed) and in
// particular does not depend on the worker count.
McReport run_monte_carlo(const Scenario& scenario, int M,
                         const std::vector<MethodSpec>& methods,
                         std::uint64_t master_seed, const McOptions& options = {});

enum class SweepAxis { NSensors, KSources, SnrDb };

std::string axis_label(SweepAxis axis);

// One report per axis value. For the KSources axis the base scenario's
// DoA/power lists act as master lists and each value k uses their first k
// entries.
std::vector<McReport> sweep(const Scenario& base, SweepAxis axis,
                            const std::vector<double>& values, int M,
                            const std::vector<MethodSpec>& methods,
                            std::uint64_t master_seed, const McOptions& options = {});

}  // namespace clars
