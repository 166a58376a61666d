#pragma once
// Ordered grammatical relations. The speaker tries each relation in priority
// order with a fresh draw; the first acceptance fixes (message, relation) and
// reinforces only that relation's count. If every relation declines, the
// utterance fails and no state changes.

#include <string>
#include <vector>

#include "langev/learning.hpp"
#include "langev/model.hpp"

namespace langev {

struct RelationSpec {
    std::string name;
    std::vector<double> start_counts;  // one per message
    double alpha = 0.0;
    ForgettingPolicy policy;  // off by default
};

struct SequentialScenario {
    std::vector<std::string> message_labels;
    std::vector<double> message_probabilities;
    std::vector<RelationSpec> relations;

    std::size_t message_count() const { return message_probabilities.size(); }
    void validate() const;
};

class SequentialHistory final : public History {
public:
    explicit SequentialHistory(SequentialScenario scenario);

    std::unique_ptr<History> clone() const override;
    Utterance step(UniformSource& source) override;

    // Grid of p(relation g expresses message i), relation-major.
    std::vector<double> probabilities() const override;
    std::vector<double> counts() const override;
    const std::vector<std::string>& probability_labels() const override { return labels_; }
    const std::vector<std::string>& count_labels() const override { return labels_; }
    const std::vector<CellGroup>& cell_groups() const override { return groups_; }

    const LearningState& relation_state(std::size_t g) const { return states_[g]; }

private:
    SequentialScenario scenario_;
    std::vector<LearningState> states_;
    std::vector<std::string> labels_;
    std::vector<CellGroup> groups_;
};

}  // namespace langev
