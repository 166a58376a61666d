#include "langev/form_competition.hpp"

#include <stdexcept>

#include "langev/errors.hpp"
#include "langev/hearer.hpp"

namespace langev {

namespace {

const std::vector<std::string> kProbabilityLabels = {
    "speaker:unmarked|obj",
    "speaker:marked|obj",
    "hearer:subj|unmarked",
    "hearer:obj|unmarked",
};

const std::vector<std::string> kCountLabels = {
    "unmarked|subj",
    "unmarked|obj",
    "marked|obj",
};

const std::vector<CellGroup> kGroups = {{0, 2}};

}  // namespace

void CompetitionScenario::validate() const {
    if (!(p_subj > 0.0) || !(p_subj < 1.0)) {
        throw ConfigError("p_subj: must lie in (0, 1)");
    }
    if (!(c0_u_subj > 0.0) || !(c0_u_obj > 0.0)) {
        throw ConfigError("start_counts: unmarked-form start counts must be > 0");
    }
    if (!(c0_a_obj >= 0.0)) {
        throw ConfigError("start_counts: marked-form start count must be >= 0");
    }
}

LimitPrediction limit_prediction(double p_subj) {
    if (!(p_subj > 0.0) || !(p_subj < 1.0)) {
        throw std::domain_error("limit_prediction: p_subj must lie in (0, 1)");
    }
    if (p_subj == 0.5) {
        throw std::domain_error("limit_prediction: p_subj = 1/2 is a boundary case");
    }
    if (p_subj > 0.5) {
        return {0.0, 1.0, 0.0};
    }
    const double variation = (1.0 - 2.0 * p_subj) / (1.0 - p_subj);
    return {variation, p_subj / (1.0 - p_subj), variation};
}

FormCompetitionHistory::FormCompetitionHistory(CompetitionScenario scenario)
    : scenario_(scenario),
      c_u_subj_(scenario.c0_u_subj),
      c_u_obj_(scenario.c0_u_obj),
      c_a_obj_(scenario.c0_a_obj) {
    scenario_.validate();
}

std::unique_ptr<History> FormCompetitionHistory::clone() const {
    return std::make_unique<FormCompetitionHistory>(*this);
}

Utterance FormCompetitionHistory::step(UniformSource& source) {
    Utterance utterance;
    utterance.k = ++k_;
    utterance.outcome = Outcome::Success;  // this model has no failure branch
    utterance.payoff = 1.0;

    if (draw_bernoulli(source, scenario_.p_subj)) {
        // Subject meaning: the unmarked form is the only option, no draw.
        utterance.message_id = 0;
        utterance.form_id = 0;
        c_u_subj_ += 1.0;
        return utterance;
    }
    utterance.message_id = 1;
    if (draw_bernoulli(source, unmarked_given_obj())) {
        utterance.form_id = 0;
        c_u_obj_ += 1.0;
    } else {
        utterance.form_id = 1;
        c_a_obj_ += 1.0;
    }
    return utterance;
}

std::vector<double> FormCompetitionHistory::probabilities() const {
    const double unmarked = unmarked_given_obj();
    // The hearer sees the unmarked form and weighs the form-choice
    // probabilities (1 for subj, the learned share for obj) by the message
    // priors.
    const double likelihood[2] = {1.0, unmarked};
    const double priors[2] = {scenario_.p_subj, 1.0 - scenario_.p_subj};
    const auto post = posterior(likelihood, priors);
    return {unmarked, 1.0 - unmarked, post[0], post[1]};
}

std::vector<double> FormCompetitionHistory::counts() const {
    return {c_u_subj_, c_u_obj_, c_a_obj_};
}

const std::vector<std::string>& FormCompetitionHistory::probability_labels() const {
    return kProbabilityLabels;
}

const std::vector<std::string>& FormCompetitionHistory::count_labels() const {
    return kCountLabels;
}

const std::vector<CellGroup>& FormCompetitionHistory::cell_groups() const {
    return kGroups;
}

double window_unmarked_share(const TrajectorySample& early, const TrajectorySample& late) {
    if (early.counts.size() != 3 || late.counts.size() != 3 || early.k >= late.k) {
        throw std::invalid_argument("window_unmarked_share: need two ordered samples");
    }
    const double unmarked = late.counts[1] - early.counts[1];
    const double marked = late.counts[2] - early.counts[2];
    const double total = unmarked + marked;
    if (total <= 0.0) {
        throw std::invalid_argument("window_unmarked_share: no object utterances in window");
    }
    return unmarked / total;
}

}  // namespace langev
