#include "langev/hearer.hpp"

#include <stdexcept>

namespace langev {

std::vector<double> posterior(std::span<const double> counts, std::span<const double> priors) {
    if (counts.size() != priors.size() || counts.empty()) {
        throw std::invalid_argument("posterior: counts and priors must match and be non-empty");
    }
    std::vector<double> weighted(counts.size());
    double total = 0.0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] < 0.0) {
            throw std::invalid_argument("posterior: counts must be >= 0");
        }
        weighted[i] = counts[i] * priors[i];
        total += weighted[i];
    }
    if (total <= 0.0) {
        throw std::domain_error("posterior: zero weighted mass, posterior undefined");
    }
    for (double& w : weighted) {
        w /= total;
    }
    return weighted;
}

std::vector<std::vector<double>> interpretation_trajectory(
    std::span<const TrajectorySample> samples, std::span<const double> priors) {
    std::vector<std::vector<double>> result;
    result.reserve(samples.size());
    for (const auto& sample : samples) {
        result.push_back(posterior(sample.counts, priors));
    }
    return result;
}

}  // namespace langev
