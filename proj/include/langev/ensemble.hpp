#pragma once
// Ensemble runner: N independent histories of any model, convergence
// verdicts, and aggregated trajectories/histograms. History h always draws
// from stream (master_seed, h) and aggregation runs in ascending history
// order, so the result is bit-identical for any worker count. The OpenMP
// kernel in run_ensemble and the serial reference in run_ensemble_serial must
// agree exactly; tests and the benchmark hold them to that.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "langev/model.hpp"

namespace langev {

inline constexpr std::size_t kHistogramBins = 12;
inline constexpr std::size_t kSamplePathRetention = 10;

struct EnsembleConfig {
    std::uint64_t n_histories = 0;
    std::uint64_t n_utterances = 0;
    std::uint64_t master_seed = 0;
    std::vector<std::uint64_t> checkpoints;  // empty: default log-spaced grid
    double convergence_epsilon = 0.01;       // in (0, 0.5)
    unsigned worker_count = 1;
    // When set, per-history hearer posteriors and their mean trajectory are
    // aggregated (models with message-level counts only).
    std::vector<double> hearer_priors;

    void validate() const;
};

struct Verdict {
    bool converged = false;
    int winner = -1;       // cell index within the full probability vector
    double p_max = 0.0;    // largest probability in the primary group
};

// Single-winner rule on one group: converged to i iff p_i >= 1 - eps and all
// other entries <= eps.
Verdict detect_convergence(std::span<const double> probabilities, double epsilon);

struct HistorySummary {
    Verdict verdict;
    std::vector<double> final_probabilities;
    std::vector<double> final_counts;
    std::vector<double> final_hearer_posterior;  // empty unless priors given
};

struct SamplePath {
    std::uint64_t history_id = 0;
    std::vector<TrajectorySample> samples;
};

struct EnsembleResult {
    std::vector<std::uint64_t> checkpoints;
    std::vector<std::string> probability_labels;
    std::vector<std::string> count_labels;

    // Kahan-accumulated means, [checkpoint][cell].
    std::vector<std::vector<double>> mean_trajectory;

    // 12 equal bins on [0, 1], last bin right-closed, at decade checkpoints.
    std::vector<std::uint64_t> histogram_checkpoints;
    std::vector<std::vector<std::array<std::uint32_t, kHistogramBins>>> histograms;

    std::vector<SamplePath> sample_paths;  // first histories by index
    std::vector<HistorySummary> histories;

    std::vector<double> hearer_priors;
    std::vector<std::vector<double>> mean_hearer_trajectory;  // [checkpoint][message]

    std::uint64_t converged_count() const;
    // Fraction of histories whose verdict winner equals `cell`.
    double converged_share(int cell) const;
};

// OpenMP-parallel when built with OpenMP and worker_count > 1.
EnsembleResult run_ensemble(const History& prototype, const EnsembleConfig& config);

// Plain-loop reference implementation; must match run_ensemble bit for bit.
EnsembleResult run_ensemble_serial(const History& prototype, const EnsembleConfig& config);

// Mean trajectories and histograms over per-history samples; all histories
// must share the same checkpoint grid.
void aggregate(const std::vector<std::vector<TrajectorySample>>& histories,
               EnsembleResult& result);

std::size_t histogram_bin(double p);

}  // namespace langev
