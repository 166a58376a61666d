#pragma once
// Propensity-count learning rule shared by every production model: the
// probability of producing a target sign for message i is the cumulative
// payoff count c_i divided by the total of all counts plus a reluctance
// parameter alpha.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace langev {

struct ForgettingPolicy {
    // Per-update down-weighting of past counts, in (0, 1]. 1 reproduces the
    // no-forgetting update exactly (bit for bit).
    double nu = 1.0;
    // alpha is down-weighted along with the counts.
    bool decay_alpha = true;
    // Failed utterances leave the state untouched unless set.
    bool decay_on_failure = false;
};

// State of learning for one rule family: one propensity per message.
// Counts stay non-negative; start counts must be strictly positive, otherwise
// the rule would start and stay at zero.
struct LearningState {
    std::vector<double> counts;
    std::vector<double> start_counts;
    double alpha = 0.0;

    static LearningState make(std::vector<double> start_counts, double alpha);
};

// counts[i] / (sum of counts + alpha). Zero only when counts[i] is zero.
double hre_probability(const LearningState& state, std::size_t message_id);

// Decay every count by nu (and alpha, when the policy says so), then add the
// payoff to the successful message. payoff is 1 except under speaker/scene
// weighting, and must be positive.
void apply_success(LearningState& state, std::size_t message_id,
                   const ForgettingPolicy& policy, double payoff = 1.0);

// No-op unless decay_on_failure is set, in which case everything decays by nu.
void apply_failure(LearningState& state, const ForgettingPolicy& policy);

// Throw ConfigError naming `field` unless p is a probability vector summing to
// 1 within 1e-12.
void validate_distribution(std::span<const double> p, const std::string& field);

// Throw ConfigError naming `field` unless nu lies in (0, 1].
void validate_forgetting(const ForgettingPolicy& policy, const std::string& field);

}  // namespace langev
