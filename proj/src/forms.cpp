#include "langev/forms.hpp"

#include "langev/errors.hpp"

namespace langev {

void FormInventory::validate() const {
    validate_distribution(message_probabilities, "message_probabilities");
    if (form_labels.empty()) {
        throw ConfigError("forms: at least one form is required");
    }
    if (form_probabilities.size() != message_count()) {
        throw ConfigError("form_probabilities: expected one row per message");
    }
    if (start_counts.size() != message_count()) {
        throw ConfigError("start_counts: expected one row per message");
    }
    for (std::size_t i = 0; i < message_count(); ++i) {
        if (form_probabilities[i].size() != form_count()) {
            throw ConfigError("form_probabilities[" + std::to_string(i) +
                              "]: expected one entry per form");
        }
        validate_distribution(form_probabilities[i],
                              "form_probabilities[" + std::to_string(i) + "]");
        if (start_counts[i].size() != form_count()) {
            throw ConfigError("start_counts[" + std::to_string(i) +
                              "]: expected one entry per form");
        }
    }
    if (!(alpha >= 0.0)) {
        throw ConfigError("alpha: must be >= 0");
    }
    validate_forgetting(policy, "forgetting");
}

namespace {

std::string pair_label(const FormInventory& inventory, std::size_t message, std::size_t form) {
    const std::string m = message < inventory.message_labels.size()
                              ? inventory.message_labels[message]
                              : "m" + std::to_string(message + 1);
    return m + "|" + inventory.form_labels[form];
}

}  // namespace

FundamentalScenario build_product_model(const FormInventory& inventory) {
    inventory.validate();
    FundamentalScenario product;
    product.alpha = inventory.alpha;
    product.policy = inventory.policy;
    for (std::size_t i = 0; i < inventory.message_count(); ++i) {
        for (std::size_t j = 0; j < inventory.form_count(); ++j) {
            product.message_labels.push_back(pair_label(inventory, i, j));
            product.message_probabilities.push_back(inventory.message_probabilities[i] *
                                                    inventory.form_probabilities[i][j]);
            product.start_counts.push_back(inventory.start_counts[i][j]);
        }
    }
    return product;
}

FormsHistory::FormsHistory(FormInventory inventory) : inventory_(std::move(inventory)) {
    inventory_.validate();
    std::vector<double> start;
    for (std::size_t i = 0; i < inventory_.message_count(); ++i) {
        for (std::size_t j = 0; j < inventory_.form_count(); ++j) {
            start.push_back(inventory_.start_counts[i][j]);
            joint_.push_back(inventory_.message_probabilities[i] *
                             inventory_.form_probabilities[i][j]);
            labels_.push_back(pair_label(inventory_, i, j));
        }
    }
    state_ = LearningState::make(std::move(start), inventory_.alpha);
    groups_.emplace_back(0, labels_.size());
}

std::unique_ptr<History> FormsHistory::clone() const {
    return std::make_unique<FormsHistory>(*this);
}

Utterance FormsHistory::step(UniformSource& source) {
    Utterance utterance;
    utterance.k = ++k_;

    // One draw over the joint (message, form) distribution keeps the trace
    // aligned with the product model.
    const std::size_t pair = draw_categorical(source, joint_);
    const std::size_t forms = inventory_.form_count();
    utterance.message_id = static_cast<int>(pair / forms);
    utterance.form_id = static_cast<int>(pair % forms);

    if (draw_bernoulli(source, hre_probability(state_, pair))) {
        apply_success(state_, pair, inventory_.policy);
        utterance.outcome = Outcome::Success;
        utterance.payoff = 1.0;
    } else {
        apply_failure(state_, inventory_.policy);
    }
    return utterance;
}

std::vector<double> FormsHistory::probabilities() const {
    std::vector<double> values(state_.counts.size());
    for (std::size_t n = 0; n < values.size(); ++n) {
        values[n] = hre_probability(state_, n);
    }
    return values;
}

}  // namespace langev
