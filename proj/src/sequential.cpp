#include "langev/sequential.hpp"

#include "langev/errors.hpp"

namespace langev {

void SequentialScenario::validate() const {
    validate_distribution(message_probabilities, "message_probabilities");
    if (relations.empty()) {
        throw ConfigError("relations: at least one grammatical relation is required");
    }
    for (std::size_t g = 0; g < relations.size(); ++g) {
        const std::string field = "relations[" + std::to_string(g) + "]";
        if (relations[g].start_counts.size() != message_count()) {
            throw ConfigError(field + ".start_counts: expected one entry per message");
        }
        LearningState::make(relations[g].start_counts, relations[g].alpha);
        validate_forgetting(relations[g].policy, field + ".forgetting");
    }
}

SequentialHistory::SequentialHistory(SequentialScenario scenario)
    : scenario_(std::move(scenario)) {
    scenario_.validate();
    const std::size_t messages = scenario_.message_count();
    for (std::size_t g = 0; g < scenario_.relations.size(); ++g) {
        const auto& relation = scenario_.relations[g];
        states_.push_back(LearningState::make(relation.start_counts, relation.alpha));
        for (std::size_t i = 0; i < messages; ++i) {
            const std::string message = i < scenario_.message_labels.size()
                                            ? scenario_.message_labels[i]
                                            : "m" + std::to_string(i + 1);
            labels_.push_back(relation.name + "|" + message);
        }
        groups_.emplace_back(g * messages, (g + 1) * messages);
    }
}

std::unique_ptr<History> SequentialHistory::clone() const {
    return std::make_unique<SequentialHistory>(*this);
}

Utterance SequentialHistory::step(UniformSource& source) {
    Utterance utterance;
    utterance.k = ++k_;
    const std::size_t message = draw_categorical(source, scenario_.message_probabilities);
    utterance.message_id = static_cast<int>(message);

    for (std::size_t g = 0; g < states_.size(); ++g) {
        if (draw_bernoulli(source, hre_probability(states_[g], message))) {
            apply_success(states_[g], message, scenario_.relations[g].policy);
            utterance.outcome = Outcome::Success;
            utterance.payoff = 1.0;
            utterance.gr_id = static_cast<int>(g);
            return utterance;
        }
    }
    // Ran out of relations: record a failure, leave every state untouched.
    utterance.exhausted = true;
    for (std::size_t g = 0; g < states_.size(); ++g) {
        apply_failure(states_[g], scenario_.relations[g].policy);
    }
    return utterance;
}

std::vector<double> SequentialHistory::probabilities() const {
    const std::size_t messages = scenario_.message_count();
    std::vector<double> grid(states_.size() * messages);
    for (std::size_t g = 0; g < states_.size(); ++g) {
        for (std::size_t i = 0; i < messages; ++i) {
            grid[g * messages + i] = hre_probability(states_[g], i);
        }
    }
    return grid;
}

std::vector<double> SequentialHistory::counts() const {
    const std::size_t messages = scenario_.message_count();
    std::vector<double> grid(states_.size() * messages);
    for (std::size_t g = 0; g < states_.size(); ++g) {
        for (std::size_t i = 0; i < messages; ++i) {
            grid[g * messages + i] = states_[g].counts[i];
        }
    }
    return grid;
}

}  // namespace langev
