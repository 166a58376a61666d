#include "langev/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "langev/errors.hpp"
#include "langev/hearer.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace langev {

namespace {

// Compensated accumulator; keeps cross-platform drift below 1e-12 per
// checkpoint even for long ensembles.
struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double value) {
        const double y = value - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

bool is_decade(std::uint64_t k) {
    while (k >= 10 && k % 10 == 0) {
        k /= 10;
    }
    return k == 1;
}

Verdict history_verdict(std::span<const double> probabilities,
                        std::span<const CellGroup> groups, double epsilon) {
    // A history converges when every rule family has a single winner; the
    // reported winner is the first family's.
    Verdict overall;
    overall.converged = true;
    for (std::size_t g = 0; g < groups.size(); ++g) {
        const auto [begin, end] = groups[g];
        const Verdict v = detect_convergence(probabilities.subspan(begin, end - begin), epsilon);
        if (g == 0) {
            overall.p_max = v.p_max;
            overall.winner = v.converged ? static_cast<int>(begin) + v.winner : -1;
        }
        overall.converged = overall.converged && v.converged;
    }
    if (!overall.converged) {
        overall.winner = -1;
    }
    return overall;
}

EnsembleResult run_impl(const History& prototype, const EnsembleConfig& config,
                        bool parallel) {
    config.validate();

    EnsembleResult result;
    result.checkpoints = config.checkpoints.empty() ? default_checkpoints(config.n_utterances)
                                                    : config.checkpoints;
    result.probability_labels = prototype.probability_labels();
    result.count_labels = prototype.count_labels();
    result.hearer_priors = config.hearer_priors;

    const bool hearer = !config.hearer_priors.empty();
    if (hearer && !prototype.supports_hearer()) {
        throw ConfigError("hearer_priors: model does not expose message-level counts");
    }
    if (hearer && config.hearer_priors.size() != prototype.counts().size()) {
        throw ConfigError("hearer_priors: expected one prior per message");
    }

    const auto n = static_cast<std::size_t>(config.n_histories);
    std::vector<std::vector<TrajectorySample>> trajectories(n);
    result.histories.resize(n);

    auto run_one = [&](std::size_t h) {
        auto history = prototype.clone();
        RandomSource source = derive_stream(config.master_seed, h);
        trajectories[h] =
            run_history(*history, source, config.n_utterances, result.checkpoints).samples;

        HistorySummary& summary = result.histories[h];
        summary.final_probabilities = history->probabilities();
        summary.final_counts = history->counts();
        summary.verdict = history_verdict(summary.final_probabilities, history->cell_groups(),
                                          config.convergence_epsilon);
        if (hearer) {
            summary.final_hearer_posterior =
                posterior(summary.final_counts, config.hearer_priors);
        }
    };

#ifdef _OPENMP
    if (parallel && config.worker_count > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(static_cast<int>(config.worker_count))
        for (long long h = 0; h < static_cast<long long>(n); ++h) {
            run_one(static_cast<std::size_t>(h));
        }
    } else {
        for (std::size_t h = 0; h < n; ++h) {
            run_one(h);
        }
    }
#else
    (void)parallel;
    for (std::size_t h = 0; h < n; ++h) {
        run_one(h);
    }
#endif

    // Ordered reduction: everything below walks histories in ascending index.
    aggregate(trajectories, result);

    if (hearer) {
        const std::size_t messages = config.hearer_priors.size();
        std::vector<std::vector<KahanSum>> sums(result.checkpoints.size(),
                                                std::vector<KahanSum>(messages));
        for (std::size_t h = 0; h < n; ++h) {
            for (std::size_t c = 0; c < trajectories[h].size(); ++c) {
                const auto post = posterior(trajectories[h][c].counts, config.hearer_priors);
                for (std::size_t i = 0; i < messages; ++i) {
                    sums[c][i].add(post[i]);
                }
            }
        }
        result.mean_hearer_trajectory.assign(result.checkpoints.size(),
                                             std::vector<double>(messages));
        for (std::size_t c = 0; c < sums.size(); ++c) {
            for (std::size_t i = 0; i < messages; ++i) {
                result.mean_hearer_trajectory[c][i] = sums[c][i].sum / static_cast<double>(n);
            }
        }
    }

    const std::size_t retained = std::min<std::size_t>(kSamplePathRetention, n);
    result.sample_paths.reserve(retained);
    for (std::size_t h = 0; h < retained; ++h) {
        result.sample_paths.push_back(SamplePath{h, std::move(trajectories[h])});
    }
    return result;
}

}  // namespace

void EnsembleConfig::validate() const {
    if (n_histories < 1) {
        throw ConfigError("histories: must be >= 1");
    }
    if (n_utterances < 1) {
        throw ConfigError("utterances: must be >= 1");
    }
    if (!(convergence_epsilon > 0.0) || !(convergence_epsilon < 0.5)) {
        throw ConfigError("epsilon: must lie in (0, 0.5)");
    }
    if (worker_count < 1) {
        throw ConfigError("workers: must be >= 1");
    }
    for (std::size_t i = 0; i < checkpoints.size(); ++i) {
        const bool increasing = i == 0 || checkpoints[i] > checkpoints[i - 1];
        if (!increasing || checkpoints[i] < 1 || checkpoints[i] > n_utterances) {
            throw ConfigError("checkpoints: must be strictly increasing and within [1, utterances]");
        }
    }
    if (!hearer_priors.empty()) {
        validate_distribution(hearer_priors, "hearer_priors");
    }
}

Verdict detect_convergence(std::span<const double> probabilities, double epsilon) {
    if (probabilities.empty()) {
        throw std::invalid_argument("detect_convergence: empty trajectory");
    }
    if (!(epsilon > 0.0) || !(epsilon < 0.5)) {
        throw ConfigError("epsilon: must lie in (0, 0.5)");
    }
    Verdict verdict;
    int winner = -1;
    double p_max = 0.0;
    bool others_small = true;
    for (std::size_t i = 0; i < probabilities.size(); ++i) {
        const double p = probabilities[i];
        p_max = std::max(p_max, p);
        if (p >= 1.0 - epsilon && winner < 0) {
            winner = static_cast<int>(i);
        } else if (p > epsilon) {
            others_small = false;
        }
    }
    verdict.p_max = p_max;
    if (winner >= 0 && others_small) {
        verdict.converged = true;
        verdict.winner = winner;
    }
    return verdict;
}

std::size_t histogram_bin(double p) {
    if (p <= 0.0) {
        return 0;
    }
    if (p >= 1.0) {
        return kHistogramBins - 1;
    }
    return std::min<std::size_t>(kHistogramBins - 1,
                                 static_cast<std::size_t>(p * kHistogramBins));
}

void aggregate(const std::vector<std::vector<TrajectorySample>>& histories,
               EnsembleResult& result) {
    if (histories.empty()) {
        throw std::invalid_argument("aggregate: no histories");
    }
    const auto& checkpoints = result.checkpoints;
    const std::size_t cells = histories.front().empty()
                                  ? result.probability_labels.size()
                                  : histories.front().front().probabilities.size();
    for (const auto& h : histories) {
        if (h.size() != checkpoints.size()) {
            throw std::invalid_argument("aggregate: histories disagree on checkpoints");
        }
        for (std::size_t c = 0; c < h.size(); ++c) {
            if (h[c].k != checkpoints[c]) {
                throw std::invalid_argument("aggregate: histories disagree on checkpoints");
            }
        }
    }

    result.histogram_checkpoints.clear();
    std::vector<std::size_t> histogram_slots;
    for (std::size_t c = 0; c < checkpoints.size(); ++c) {
        if (is_decade(checkpoints[c]) || c + 1 == checkpoints.size()) {
            result.histogram_checkpoints.push_back(checkpoints[c]);
            histogram_slots.push_back(c);
        }
    }
    result.histograms.assign(
        histogram_slots.size(),
        std::vector<std::array<std::uint32_t, kHistogramBins>>(
            cells, std::array<std::uint32_t, kHistogramBins>{}));

    std::vector<std::vector<KahanSum>> sums(checkpoints.size(), std::vector<KahanSum>(cells));
    for (const auto& history : histories) {
        for (std::size_t c = 0; c < checkpoints.size(); ++c) {
            for (std::size_t i = 0; i < cells; ++i) {
                sums[c][i].add(history[c].probabilities[i]);
            }
        }
        for (std::size_t s = 0; s < histogram_slots.size(); ++s) {
            const auto& sample = history[histogram_slots[s]];
            for (std::size_t i = 0; i < cells; ++i) {
                ++result.histograms[s][i][histogram_bin(sample.probabilities[i])];
            }
        }
    }
    result.mean_trajectory.assign(checkpoints.size(), std::vector<double>(cells));
    for (std::size_t c = 0; c < checkpoints.size(); ++c) {
        for (std::size_t i = 0; i < cells; ++i) {
            result.mean_trajectory[c][i] =
                sums[c][i].sum / static_cast<double>(histories.size());
        }
    }
}

std::uint64_t EnsembleResult::converged_count() const {
    std::uint64_t count = 0;
    for (const auto& h : histories) {
        count += h.verdict.converged ? 1 : 0;
    }
    return count;
}

double EnsembleResult::converged_share(int cell) const {
    if (histories.empty()) {
        return 0.0;
    }
    std::uint64_t count = 0;
    for (const auto& h : histories) {
        count += (h.verdict.converged && h.verdict.winner == cell) ? 1 : 0;
    }
    return static_cast<double>(count) / static_cast<double>(histories.size());
}

EnsembleResult run_ensemble(const History& prototype, const EnsembleConfig& config) {
    return run_impl(prototype, config, true);
}

EnsembleResult run_ensemble_serial(const History& prototype, const EnsembleConfig& config) {
    return run_impl(prototype, config, false);
}

}  // namespace langev
