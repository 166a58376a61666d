#pragma once
// Competition between an unmarked form and a marked form for the object
// meaning. The subject meaning always takes the unmarked form; for the object
// the unmarked form is chosen with the share of past unmarked tokens that
// expressed the object. Every utterance succeeds, and there is no alpha: this
// is a choice between expressions inside a mature grammar, not the emergence
// of one. For p(subj) > 1/2 the marked form becomes obligatory for objects;
// for p(subj) < 1/2 the unmarked share stabilizes at (1-2p)/(1-p).

#include <vector>

#include "langev/model.hpp"

namespace langev {

struct CompetitionScenario {
    double p_subj = 0.5;        // in (0, 1)
    double c0_u_subj = 1.0;     // > 0
    double c0_u_obj = 1.0;      // > 0
    double c0_a_obj = 0.0;      // >= 0; tallied but never read by the rule

    void validate() const;
};

struct LimitPrediction {
    double speaker_fu_given_obj = 0.0;
    double hearer_subj_given_fu = 0.0;
    double hearer_obj_given_fu = 0.0;
};

// Closed-form limits: (0, 1, 0) when p > 1/2, and
// ((1-2p)/(1-p), p/(1-p), (1-2p)/(1-p)) when p < 1/2.
// p = 1/2 is a boundary covered by neither regime and raises std::domain_error.
LimitPrediction limit_prediction(double p_subj);

class FormCompetitionHistory final : public History {
public:
    explicit FormCompetitionHistory(CompetitionScenario scenario);

    std::unique_ptr<History> clone() const override;
    Utterance step(UniformSource& source) override;

    // Cells: speaker p(unmarked|obj), p(marked|obj); hearer P(subj|unmarked),
    // P(obj|unmarked). Only the speaker pair forms a convergence group.
    std::vector<double> probabilities() const override;
    // Cells: unmarked-subj, unmarked-obj, marked-obj tallies.
    std::vector<double> counts() const override;
    const std::vector<std::string>& probability_labels() const override;
    const std::vector<std::string>& count_labels() const override;
    const std::vector<CellGroup>& cell_groups() const override;

    double unmarked_given_obj() const { return c_u_obj_ / (c_u_subj_ + c_u_obj_); }

private:
    CompetitionScenario scenario_;
    double c_u_subj_ = 1.0;
    double c_u_obj_ = 1.0;
    double c_a_obj_ = 0.0;
};

// Share of object utterances in (early, late] that took the unmarked form,
// recovered from the cumulative tallies at two checkpoints.
double window_unmarked_share(const TrajectorySample& early, const TrajectorySample& late);

}  // namespace langev
