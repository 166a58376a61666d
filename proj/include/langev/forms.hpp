#pragma once
// Word-order form selection. Form biases p(f|m) are fixed exogenous
// probabilities and are never updated; learning happens on the per-(message,
// form) counts, which share one denominator across all pairs. Under the
// single-draw protocol a forms history is trace-identical to a base-model
// history over the product of messages and forms.

#include <string>
#include <vector>

#include "langev/fundamental.hpp"
#include "langev/learning.hpp"
#include "langev/model.hpp"

namespace langev {

struct FormInventory {
    std::vector<std::string> message_labels;
    std::vector<std::string> form_labels;
    std::vector<double> message_probabilities;
    std::vector<std::vector<double>> form_probabilities;  // [message][form]
    std::vector<std::vector<double>> start_counts;        // [message][form]
    double alpha = 0.0;
    ForgettingPolicy policy;

    std::size_t message_count() const { return message_probabilities.size(); }
    std::size_t form_count() const { return form_labels.size(); }
    void validate() const;
};

// The equivalent base-model scenario over message-major (message, form)
// pseudo-messages with probabilities p(f|m) p(m) and the same counts/alpha.
FundamentalScenario build_product_model(const FormInventory& inventory);

class FormsHistory final : public History {
public:
    explicit FormsHistory(FormInventory inventory);

    std::unique_ptr<History> clone() const override;
    Utterance step(UniformSource& source) override;

    // Propensity share per (message, form) pair, message-major.
    std::vector<double> probabilities() const override;
    std::vector<double> counts() const override { return state_.counts; }
    const std::vector<std::string>& probability_labels() const override { return labels_; }
    const std::vector<std::string>& count_labels() const override { return labels_; }
    const std::vector<CellGroup>& cell_groups() const override { return groups_; }

    bool supports_hearer() const override { return true; }
    std::vector<double> hearer_priors() const override { return joint_; }

private:
    FormInventory inventory_;
    LearningState state_;
    std::vector<double> joint_;  // p(f_j|m_i) p(m_i), pair order
    std::vector<std::string> labels_;
    std::vector<CellGroup> groups_;
};

}  // namespace langev
