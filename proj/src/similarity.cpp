#include "langev/similarity.hpp"

#include <stdexcept>

#include "langev/errors.hpp"

namespace langev {

void SimilarityScenario::validate() const {
    if (verbs.empty()) {
        throw ConfigError("verbs: at least one verb is required");
    }
    if (relations.empty()) {
        throw ConfigError("relations: at least one grammatical relation is required");
    }
    std::vector<double> frequencies;
    for (std::size_t v = 0; v < verbs.size(); ++v) {
        const std::string field = "verbs[" + std::to_string(v) + "]";
        frequencies.push_back(verbs[v].frequency);
        if (verbs[v].roles.empty()) {
            throw ConfigError(field + ".roles: must not be empty");
        }
        if (verbs[v].role_probabilities.size() != verbs[v].roles.size()) {
            throw ConfigError(field + ".role_probabilities: expected one entry per role");
        }
        validate_distribution(verbs[v].role_probabilities, field + ".role_probabilities");
    }
    validate_distribution(frequencies, "verbs[].frequency");
    if (gamma.size() != verbs.size()) {
        throw ConfigError("similarity.gamma: expected one row per verb");
    }
    for (std::size_t t = 0; t < gamma.size(); ++t) {
        if (gamma[t].size() != verbs.size()) {
            throw ConfigError("similarity.gamma[" + std::to_string(t) +
                              "]: expected one entry per verb");
        }
        for (double g : gamma[t]) {
            if (!(g >= 0.0) || g > 1.0) {
                throw ConfigError("similarity.gamma: coefficients must lie in [0, 1]");
            }
        }
    }
    if (!(decay > 0.0) || decay > 1.0) {
        throw ConfigError("similarity.decay: must lie in (0, 1]");
    }
    validate_forgetting(policy, "forgetting");
    for (std::size_t g = 0; g < relations.size(); ++g) {
        if (!(relations[g].alpha >= 0.0)) {
            throw ConfigError("relations[" + std::to_string(g) + "].alpha: must be >= 0");
        }
    }
    if (!start_counts.empty()) {
        if (start_counts.size() != relations.size()) {
            throw ConfigError("start_counts: expected one table per relation");
        }
        for (std::size_t g = 0; g < start_counts.size(); ++g) {
            if (start_counts[g].size() != verbs.size()) {
                throw ConfigError("start_counts[" + std::to_string(g) +
                                  "]: expected one row per verb");
            }
            for (std::size_t v = 0; v < verbs.size(); ++v) {
                if (start_counts[g][v].size() != verbs[v].roles.size()) {
                    throw ConfigError("start_counts[" + std::to_string(g) + "][" +
                                      std::to_string(v) + "]: expected one entry per role");
                }
                for (double c : start_counts[g][v]) {
                    if (!(c > 0.0)) {
                        throw ConfigError("start_counts: every start count must be > 0");
                    }
                }
            }
        }
    }
    resolved_alignment();
}

std::vector<std::vector<std::vector<std::size_t>>> SimilarityScenario::resolved_alignment()
    const {
    if (!align_by_role_name) {
        if (alignment.size() != verbs.size()) {
            throw ConfigError("similarity.alignment: expected one table per target verb");
        }
        for (std::size_t t = 0; t < verbs.size(); ++t) {
            if (alignment[t].size() != verbs.size()) {
                throw ConfigError("similarity.alignment[" + std::to_string(t) +
                                  "]: expected one row per source verb");
            }
            for (std::size_t s = 0; s < verbs.size(); ++s) {
                if (s == t) {
                    continue;
                }
                if (gamma[t][s] == 0.0 && alignment[t][s].empty()) {
                    continue;  // unused pair may stay undeclared
                }
                if (alignment[t][s].size() != verbs[t].roles.size()) {
                    throw ConfigError("similarity.alignment[" + std::to_string(t) + "][" +
                                      std::to_string(s) +
                                      "]: expected one source role per target role");
                }
                for (std::size_t role : alignment[t][s]) {
                    if (role >= verbs[s].roles.size()) {
                        throw ConfigError("similarity.alignment: source role out of range");
                    }
                }
            }
        }
        return alignment;
    }

    std::vector<std::vector<std::vector<std::size_t>>> resolved(
        verbs.size(), std::vector<std::vector<std::size_t>>(verbs.size()));
    for (std::size_t t = 0; t < verbs.size(); ++t) {
        for (std::size_t s = 0; s < verbs.size(); ++s) {
            if (s == t) {
                continue;
            }
            if (gamma[t][s] == 0.0) {
                continue;
            }
            auto& map = resolved[t][s];
            map.resize(verbs[t].roles.size());
            for (std::size_t role = 0; role < verbs[t].roles.size(); ++role) {
                bool found = false;
                for (std::size_t other = 0; other < verbs[s].roles.size(); ++other) {
                    if (verbs[s].roles[other] == verbs[t].roles[role]) {
                        map[role] = other;
                        found = true;
                        break;
                    }
                }
                if (!found) {
                    throw ConfigError("similarity.alignment: verb '" + verbs[s].name +
                                      "' has no role named '" + verbs[t].roles[role] +
                                      "' to align with verb '" + verbs[t].name + "'");
                }
            }
        }
    }
    return resolved;
}

std::size_t SimilarityTables::cell(std::size_t verb, std::size_t role) const {
    std::size_t offset = 0;
    for (std::size_t v = 0; v < verb; ++v) {
        offset += roles_per_verb[v];
    }
    return offset + role;
}

double effective_count(const SimilarityTables& tables, std::size_t verb, std::size_t role,
                       std::size_t gr) {
    if (gr >= tables.gr_states.size() || verb >= tables.roles_per_verb.size() ||
        role >= tables.roles_per_verb[verb]) {
        throw std::invalid_argument("effective_count: index out of range");
    }
    const auto& counts = tables.gr_states[gr].counts;
    double value = counts[tables.cell(verb, role)];
    for (std::size_t source = 0; source < tables.roles_per_verb.size(); ++source) {
        if (source == verb) {
            continue;
        }
        const double g = tables.gamma[verb][source];
        if (g == 0.0) {
            continue;
        }
        const auto& map = tables.alignment[verb][source];
        if (map.empty()) {
            throw ConfigError("similarity.alignment: missing map for a nonzero coefficient");
        }
        value += g * counts[tables.cell(source, map[role])];
    }
    return value;
}

double similarity_hre(const SimilarityTables& tables, std::size_t verb, std::size_t role,
                      std::size_t gr) {
    double total = tables.gr_states[gr].alpha;
    for (std::size_t r = 0; r < tables.roles_per_verb[verb]; ++r) {
        total += effective_count(tables, verb, r, gr);
    }
    if (total <= 0.0) {
        return 0.0;
    }
    return effective_count(tables, verb, role, gr) / total;
}

void decay_similarity(SimilarityTables& tables) {
    for (std::size_t t = 0; t < tables.gamma.size(); ++t) {
        for (std::size_t s = 0; s < tables.gamma[t].size(); ++s) {
            if (s != t) {
                tables.gamma[t][s] *= tables.decay;
            }
        }
    }
}

SimilarityHistory::SimilarityHistory(SimilarityScenario scenario)
    : scenario_(std::move(scenario)) {
    scenario_.validate();

    tables_.decay = scenario_.decay;
    tables_.gamma = scenario_.gamma;
    tables_.alignment = scenario_.resolved_alignment();
    std::size_t total_cells = 0;
    for (const auto& verb : scenario_.verbs) {
        tables_.roles_per_verb.push_back(verb.roles.size());
        total_cells += verb.roles.size();
        verb_frequencies_.push_back(verb.frequency);
    }
    for (std::size_t g = 0; g < scenario_.relations.size(); ++g) {
        std::vector<double> start(total_cells, 1.0);
        if (!scenario_.start_counts.empty()) {
            std::size_t cell = 0;
            for (std::size_t v = 0; v < scenario_.verbs.size(); ++v) {
                for (double c : scenario_.start_counts[g][v]) {
                    start[cell++] = c;
                }
            }
        }
        tables_.gr_states.push_back(
            LearningState::make(std::move(start), scenario_.relations[g].alpha));
        for (const auto& verb : scenario_.verbs) {
            const std::size_t begin = labels_.size();
            for (const auto& role : verb.roles) {
                labels_.push_back(scenario_.relations[g].name + "|" + verb.name + "|" + role);
            }
            groups_.emplace_back(begin, labels_.size());
        }
    }
}

std::unique_ptr<History> SimilarityHistory::clone() const {
    return std::make_unique<SimilarityHistory>(*this);
}

Utterance SimilarityHistory::step(UniformSource& source) {
    Utterance utterance;
    utterance.k = ++k_;

    const std::size_t verb = draw_categorical(source, verb_frequencies_);
    const std::size_t role =
        draw_categorical(source, scenario_.verbs[verb].role_probabilities);
    utterance.verb_id = static_cast<int>(verb);
    utterance.message_id = static_cast<int>(role);

    bool produced = false;
    for (std::size_t g = 0; g < tables_.gr_states.size() && !produced; ++g) {
        if (draw_bernoulli(source, similarity_hre(tables_, verb, role, g))) {
            // Only the verb's own cell is reinforced; pooled counts are a
            // read-time view.
            apply_success(tables_.gr_states[g], tables_.cell(verb, role), scenario_.policy);
            utterance.outcome = Outcome::Success;
            utterance.payoff = 1.0;
            utterance.gr_id = static_cast<int>(g);
            produced = true;
        }
    }
    if (!produced) {
        utterance.exhausted = true;
        for (auto& state : tables_.gr_states) {
            apply_failure(state, scenario_.policy);
        }
    }
    decay_similarity(tables_);
    return utterance;
}

std::vector<double> SimilarityHistory::probabilities() const {
    std::vector<double> values;
    values.reserve(labels_.size());
    for (std::size_t g = 0; g < tables_.gr_states.size(); ++g) {
        for (std::size_t v = 0; v < tables_.roles_per_verb.size(); ++v) {
            for (std::size_t r = 0; r < tables_.roles_per_verb[v]; ++r) {
                values.push_back(similarity_hre(tables_, v, r, g));
            }
        }
    }
    return values;
}

std::vector<double> SimilarityHistory::counts() const {
    std::vector<double> values;
    values.reserve(labels_.size());
    for (const auto& state : tables_.gr_states) {
        values.insert(values.end(), state.counts.begin(), state.counts.end());
    }
    return values;
}

}  // namespace langev
