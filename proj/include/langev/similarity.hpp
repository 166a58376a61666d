#pragma once
// Multi-verb lexicon where the rule probability for one verb's role pools
// counts from other verbs, weighted by a similarity coefficient and aligned
// through each verb's most-similar role. Stored counts stay pure per-verb
// tallies; the pooling happens at read time only. The similarity coefficients
// shrink by a decay factor once per utterance, ending cross-verb influence
// after the grammar settles.

#include <string>
#include <vector>

#include "langev/learning.hpp"
#include "langev/model.hpp"

namespace langev {

struct VerbSpec {
    std::string name;
    double frequency = 0.0;           // relative utterance frequency p(v)
    std::vector<std::string> roles;   // role labels, e.g. agt/pat/loc
    std::vector<double> role_probabilities;
};

struct SimilarityGr {
    std::string name;
    double alpha = 0.0;
};

struct SimilarityScenario {
    std::vector<VerbSpec> verbs;
    std::vector<SimilarityGr> relations;
    // gamma[target][source] in [0, 1]; the diagonal is ignored (own counts
    // always carry weight 1).
    std::vector<std::vector<double>> gamma;
    // alignment[target][source][target_role] = source role index; resolved
    // from role names when align_by_role_name is set.
    std::vector<std::vector<std::vector<std::size_t>>> alignment;
    bool align_by_role_name = true;
    double decay = 1.0;  // (0, 1]
    ForgettingPolicy policy;
    // start_counts[gr][verb][role]; empty means 1 everywhere.
    std::vector<std::vector<std::vector<double>>> start_counts;

    void validate() const;
    std::vector<std::vector<std::vector<std::size_t>>> resolved_alignment() const;
};

// Mutable similarity state: per-relation count tables (flattened verb x role),
// plus the current (decayed) coefficients.
struct SimilarityTables {
    std::vector<std::size_t> roles_per_verb;
    std::vector<LearningState> gr_states;  // counts indexed verb-major
    std::vector<std::vector<double>> gamma;
    std::vector<std::vector<std::vector<std::size_t>>> alignment;
    double decay = 1.0;

    std::size_t cell(std::size_t verb, std::size_t role) const;
};

// Own count plus the gamma-weighted aligned counts of every other verb, for
// one grammatical relation.
double effective_count(const SimilarityTables& tables, std::size_t verb, std::size_t role,
                       std::size_t gr);

// effective_count over the verb's roles, normalized with the relation's alpha.
double similarity_hre(const SimilarityTables& tables, std::size_t verb, std::size_t role,
                      std::size_t gr);

// Multiply every off-diagonal coefficient by the decay factor.
void decay_similarity(SimilarityTables& tables);

class SimilarityHistory final : public History {
public:
    explicit SimilarityHistory(SimilarityScenario scenario);

    std::unique_ptr<History> clone() const override;
    Utterance step(UniformSource& source) override;

    // p(relation g expresses role r of verb v), relation-major then verb.
    std::vector<double> probabilities() const override;
    std::vector<double> counts() const override;
    const std::vector<std::string>& probability_labels() const override { return labels_; }
    const std::vector<std::string>& count_labels() const override { return labels_; }
    const std::vector<CellGroup>& cell_groups() const override { return groups_; }

    const SimilarityTables& tables() const { return tables_; }

private:
    SimilarityScenario scenario_;
    SimilarityTables tables_;
    std::vector<double> verb_frequencies_;
    std::vector<std::string> labels_;
    std::vector<CellGroup> groups_;
};

}  // namespace langev
