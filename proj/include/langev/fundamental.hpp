#pragma once
// The base production model plus its speaker/scene-diversity variant.
// Per utterance: select a message, attempt a phrasal sign with the learned
// rule probability, reinforce the count on success.

#include <string>
#include <vector>

#include "langev/learning.hpp"
#include "langev/model.hpp"

namespace langev {

struct SpeakerSpec {
    std::string label;
    double weight = 1.0;
    // One message distribution per scene.
    std::vector<std::vector<double>> message_probabilities;
};

struct FundamentalScenario {
    std::vector<std::string> message_labels;
    // Used directly when no speaker diversity is configured.
    std::vector<double> message_probabilities;
    std::vector<double> start_counts;
    double alpha = 0.0;
    ForgettingPolicy policy;

    // Diversity variant; all three empty in the base model. Payoffs are
    // indexed [speaker][scene][message] and default to 1 when absent.
    std::vector<double> scene_weights;
    std::vector<SpeakerSpec> speakers;
    std::vector<std::vector<std::vector<double>>> payoffs;

    bool is_general() const { return !speakers.empty() || !scene_weights.empty(); }
    std::size_t message_count() const { return start_counts.size(); }
    void validate() const;
};

// Weighted average payoff of expressing message i, over scenes and speakers:
// sum of w(s) w(r) p(m_i|s,r) pi_i(s,r). Ranks messages for convergence
// prediction; never used inside the production loop.
double expected_payoff(const FundamentalScenario& scenario, std::size_t message_id);

class FundamentalHistory final : public History {
public:
    explicit FundamentalHistory(FundamentalScenario scenario);

    std::unique_ptr<History> clone() const override;
    Utterance step(UniformSource& source) override;

    std::vector<double> probabilities() const override;
    std::vector<double> counts() const override { return state_.counts; }
    const std::vector<std::string>& probability_labels() const override { return labels_; }
    const std::vector<std::string>& count_labels() const override { return labels_; }
    const std::vector<CellGroup>& cell_groups() const override { return groups_; }

    bool supports_hearer() const override { return true; }
    // Speaker-averaged message distribution; hearers may override it.
    std::vector<double> hearer_priors() const override;

    const LearningState& state() const { return state_; }
    const FundamentalScenario& scenario() const { return scenario_; }

private:
    FundamentalScenario scenario_;
    LearningState state_;
    std::vector<std::string> labels_;
    std::vector<CellGroup> groups_;
    std::vector<double> speaker_weights_;
};

}  // namespace langev
