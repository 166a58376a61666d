#include "langev/fundamental.hpp"

#include <stdexcept>

#include "langev/errors.hpp"

namespace langev {

namespace {

std::vector<std::string> make_labels(const FundamentalScenario& s) {
    std::vector<std::string> labels;
    labels.reserve(s.message_count());
    for (std::size_t i = 0; i < s.message_count(); ++i) {
        labels.push_back(i < s.message_labels.size() ? s.message_labels[i]
                                                     : "m" + std::to_string(i + 1));
    }
    return labels;
}

}  // namespace

void FundamentalScenario::validate() const {
    const std::size_t messages = start_counts.size();
    LearningState::make(start_counts, alpha);
    validate_forgetting(policy, "forgetting");
    if (!is_general()) {
        if (message_probabilities.size() != messages) {
            throw ConfigError("message_probabilities: expected one entry per message");
        }
        validate_distribution(message_probabilities, "message_probabilities");
        return;
    }

    if (scene_weights.empty() || speakers.empty()) {
        throw ConfigError("speakers/scenes: the diversity variant needs both");
    }
    validate_distribution(scene_weights, "scene_weights");
    double speaker_total = 0.0;
    for (std::size_t r = 0; r < speakers.size(); ++r) {
        const auto& speaker = speakers[r];
        const std::string field = "speakers[" + std::to_string(r) + "]";
        if (!(speaker.weight >= 0.0)) {
            throw ConfigError(field + ".weight: must be >= 0");
        }
        speaker_total += speaker.weight;
        if (speaker.message_probabilities.size() != scene_weights.size()) {
            throw ConfigError(field + ".message_probabilities: expected one row per scene");
        }
        for (std::size_t s = 0; s < scene_weights.size(); ++s) {
            if (speaker.message_probabilities[s].size() != messages) {
                throw ConfigError(field + ".message_probabilities[" + std::to_string(s) +
                                  "]: expected one entry per message");
            }
            validate_distribution(speaker.message_probabilities[s],
                                  field + ".message_probabilities[" + std::to_string(s) + "]");
        }
    }
    if (std::abs(speaker_total - 1.0) > 1e-12) {
        throw ConfigError("speakers: weights sum to " + std::to_string(speaker_total) +
                          ", expected 1 within 1e-12");
    }
    if (!payoffs.empty()) {
        if (payoffs.size() != speakers.size()) {
            throw ConfigError("payoffs: expected one table per speaker");
        }
        for (std::size_t r = 0; r < payoffs.size(); ++r) {
            if (payoffs[r].size() != scene_weights.size()) {
                throw ConfigError("payoffs[" + std::to_string(r) +
                                  "]: expected one row per scene");
            }
            for (std::size_t s = 0; s < payoffs[r].size(); ++s) {
                if (payoffs[r][s].size() != messages) {
                    throw ConfigError("payoffs[" + std::to_string(r) + "][" +
                                      std::to_string(s) + "]: expected one entry per message");
                }
                for (double value : payoffs[r][s]) {
                    if (!(value > 0.0)) {
                        throw ConfigError("payoffs: entries must be > 0");
                    }
                }
            }
        }
    }
}

double expected_payoff(const FundamentalScenario& scenario, std::size_t message_id) {
    if (message_id >= scenario.message_count()) {
        throw std::invalid_argument("expected_payoff: message_id out of range");
    }
    if (!scenario.is_general()) {
        return scenario.message_probabilities[message_id];
    }
    double value = 0.0;
    for (std::size_t r = 0; r < scenario.speakers.size(); ++r) {
        for (std::size_t s = 0; s < scenario.scene_weights.size(); ++s) {
            const double pi =
                scenario.payoffs.empty() ? 1.0 : scenario.payoffs[r][s][message_id];
            value += scenario.speakers[r].weight * scenario.scene_weights[s] *
                     scenario.speakers[r].message_probabilities[s][message_id] * pi;
        }
    }
    return value;
}

FundamentalHistory::FundamentalHistory(FundamentalScenario scenario)
    : scenario_(std::move(scenario)),
      state_(LearningState::make(scenario_.start_counts, scenario_.alpha)),
      labels_(make_labels(scenario_)),
      groups_{{0, scenario_.message_count()}} {
    scenario_.validate();
    for (const auto& speaker : scenario_.speakers) {
        speaker_weights_.push_back(speaker.weight);
    }
}

std::unique_ptr<History> FundamentalHistory::clone() const {
    return std::make_unique<FundamentalHistory>(*this);
}

Utterance FundamentalHistory::step(UniformSource& source) {
    Utterance utterance;
    utterance.k = ++k_;

    std::size_t scene = 0;
    std::size_t speaker = 0;
    const double* message_probabilities = scenario_.message_probabilities.data();
    if (scenario_.is_general()) {
        scene = draw_categorical(source, scenario_.scene_weights);
        speaker = draw_categorical(source, speaker_weights_);
        message_probabilities = scenario_.speakers[speaker].message_probabilities[scene].data();
        utterance.scene_id = static_cast<int>(scene);
        utterance.speaker_id = static_cast<int>(speaker);
    }

    const std::size_t message = draw_categorical(
        source, std::span<const double>(message_probabilities, scenario_.message_count()));
    utterance.message_id = static_cast<int>(message);

    const double success_probability = hre_probability(state_, message);
    if (draw_bernoulli(source, success_probability)) {
        const double payoff =
            scenario_.payoffs.empty() ? 1.0 : scenario_.payoffs[speaker][scene][message];
        apply_success(state_, message, scenario_.policy, payoff);
        utterance.outcome = Outcome::Success;
        utterance.payoff = payoff;
    } else {
        apply_failure(state_, scenario_.policy);
    }
    return utterance;
}

std::vector<double> FundamentalHistory::probabilities() const {
    std::vector<double> p(scenario_.message_count());
    for (std::size_t i = 0; i < p.size(); ++i) {
        p[i] = hre_probability(state_, i);
    }
    return p;
}

std::vector<double> FundamentalHistory::hearer_priors() const {
    if (!scenario_.is_general()) {
        return scenario_.message_probabilities;
    }
    std::vector<double> priors(scenario_.message_count(), 0.0);
    for (const auto& speaker : scenario_.speakers) {
        for (std::size_t s = 0; s < scenario_.scene_weights.size(); ++s) {
            for (std::size_t i = 0; i < priors.size(); ++i) {
                priors[i] +=
                    speaker.weight * scenario_.scene_weights[s] * speaker.message_probabilities[s][i];
            }
        }
    }
    return priors;
}

}  // namespace langev
