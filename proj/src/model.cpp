#include "langev/model.hpp"

#include <cmath>
#include <stdexcept>

namespace langev {

RunResult run_history(History& history, UniformSource& source, std::uint64_t n,
                      std::span<const std::uint64_t> checkpoints, bool record_utterances) {
    if (n < 1) {
        throw std::invalid_argument("run_history: n must be >= 1");
    }
    for (std::size_t i = 0; i < checkpoints.size(); ++i) {
        const bool increasing = i == 0 || checkpoints[i] > checkpoints[i - 1];
        if (!increasing || checkpoints[i] < 1 || checkpoints[i] > n) {
            throw std::invalid_argument(
                "run_history: checkpoints must be strictly increasing and in [1, n]");
        }
    }

    RunResult result;
    result.samples.reserve(checkpoints.size());
    if (record_utterances) {
        result.utterances.reserve(static_cast<std::size_t>(n));
    }

    std::size_t next_checkpoint = 0;
    for (std::uint64_t k = 1; k <= n; ++k) {
        Utterance utterance = history.step(source);
        if (record_utterances) {
            result.utterances.push_back(utterance);
        }
        if (next_checkpoint < checkpoints.size() && checkpoints[next_checkpoint] == k) {
            result.samples.push_back(
                TrajectorySample{k, history.probabilities(), history.counts()});
            ++next_checkpoint;
        }
    }
    return result;
}

std::vector<std::uint64_t> default_checkpoints(std::uint64_t n) {
    std::vector<std::uint64_t> points;
    if (n < 10) {
        points.push_back(n);
        return points;
    }
    for (std::uint64_t j = 50;; ++j) {
        const double value = std::pow(10.0, static_cast<double>(j) / 50.0);
        const auto k = static_cast<std::uint64_t>(std::llround(value));
        if (k > n) {
            break;
        }
        if (points.empty() || k > points.back()) {
            points.push_back(k);
        }
    }
    if (points.empty() || points.back() != n) {
        points.push_back(n);
    }
    return points;
}

}  // namespace langev
