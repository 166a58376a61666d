#include "langev/learning.hpp"

#include <cmath>
#include <stdexcept>

#include "langev/errors.hpp"

namespace langev {

LearningState LearningState::make(std::vector<double> start_counts, double alpha) {
    if (start_counts.empty()) {
        throw ConfigError("start_counts: must not be empty");
    }
    for (double c : start_counts) {
        if (!(c > 0.0)) {
            throw ConfigError("start_counts: every start count must be > 0");
        }
    }
    if (!(alpha >= 0.0)) {
        throw ConfigError("alpha: must be >= 0");
    }
    LearningState state;
    state.counts = start_counts;
    state.start_counts = std::move(start_counts);
    state.alpha = alpha;
    return state;
}

double hre_probability(const LearningState& state, std::size_t message_id) {
    if (message_id >= state.counts.size()) {
        throw std::invalid_argument("hre_probability: message_id out of range");
    }
    double total = state.alpha;
    for (double c : state.counts) {
        total += c;
    }
    if (total <= 0.0) {
        return 0.0;
    }
    return state.counts[message_id] / total;
}

void apply_success(LearningState& state, std::size_t message_id,
                   const ForgettingPolicy& policy, double payoff) {
    if (message_id >= state.counts.size()) {
        throw std::invalid_argument("apply_success: message_id out of range");
    }
    if (!(payoff > 0.0)) {
        throw std::invalid_argument("apply_success: payoff must be positive");
    }
    for (double& c : state.counts) {
        c *= policy.nu;
    }
    if (policy.decay_alpha) {
        state.alpha *= policy.nu;
    }
    state.counts[message_id] += payoff;
}

void apply_failure(LearningState& state, const ForgettingPolicy& policy) {
    if (!policy.decay_on_failure) {
        return;
    }
    for (double& c : state.counts) {
        c *= policy.nu;
    }
    if (policy.decay_alpha) {
        state.alpha *= policy.nu;
    }
}

void validate_distribution(std::span<const double> p, const std::string& field) {
    if (p.empty()) {
        throw ConfigError(field + ": must not be empty");
    }
    double total = 0.0;
    for (double v : p) {
        if (!(v >= 0.0) || v > 1.0) {
            throw ConfigError(field + ": entries must lie in [0, 1]");
        }
        total += v;
    }
    if (std::abs(total - 1.0) > 1e-12) {
        throw ConfigError(field + ": probabilities sum to " + std::to_string(total) +
                          ", expected 1 within 1e-12");
    }
}

void validate_forgetting(const ForgettingPolicy& policy, const std::string& field) {
    if (!(policy.nu > 0.0) || policy.nu > 1.0) {
        throw ConfigError(field + ".nu: must lie in (0, 1]");
    }
}

}  // namespace langev
