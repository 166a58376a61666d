#include "langev/recursion.hpp"

#include <algorithm>
#include <stdexcept>

#include "langev/ensemble.hpp"
#include "langev/errors.hpp"

namespace langev {

void SignRegistry::add_word(const std::string& word) {
    signs_.emplace(word, KnownSign{word, {}, "word", ""});
}

bool SignRegistry::contains(const std::string& id) const {
    return signs_.count(id) > 0;
}

const KnownSign* SignRegistry::find(const std::string& id) const {
    auto it = signs_.find(id);
    return it == signs_.end() ? nullptr : &it->second;
}

SignRegistry register_converged(SignRegistry registry, const KnownSign& sign,
                                bool phase_converged) {
    if (!phase_converged) {
        throw std::invalid_argument("register_converged: phase '" + sign.converged_from +
                                    "' did not converge");
    }
    if (registry.contains(sign.id)) {
        return registry;  // idempotent
    }
    for (const auto& constituent : sign.constituents) {
        if (!registry.contains(constituent)) {
            throw std::invalid_argument("register_converged: unknown constituent '" +
                                        constituent + "'");
        }
    }
    registry.signs_.emplace(sign.id, sign);
    return registry;
}

void PhasedScenario::validate() const {
    if (lexicon.empty()) {
        throw ConfigError("lexicon: at least one word is required");
    }
    if (phases.empty()) {
        throw ConfigError("phases: at least one phase is required");
    }
    if (!(epsilon > 0.0) || !(epsilon < 0.5)) {
        throw ConfigError("epsilon: must lie in (0, 0.5)");
    }
    SignRegistry available;
    for (const auto& word : lexicon) {
        available.add_word(word);
    }
    for (std::size_t t = 0; t < phases.size(); ++t) {
        const auto& phase = phases[t];
        const std::string field = "phases[" + std::to_string(t) + "]";
        if (phase.n_utterances < 1) {
            throw ConfigError(field + ".utterances: must be >= 1");
        }
        if (phase.sign_id.empty()) {
            throw ConfigError(field + ".sign: must not be empty");
        }
        if (phase.meanings.size() != phase.meaning_probabilities.size() ||
            phase.meanings.size() < 2) {
            throw ConfigError(field + ".meanings: need at least two candidate meanings");
        }
        validate_distribution(phase.meaning_probabilities, field + ".meaning_probabilities");
        if (phase.start_counts.size() != phase.meanings.size()) {
            throw ConfigError(field + ".start_counts: expected one entry per meaning");
        }
        LearningState::make(phase.start_counts, phase.alpha);
        validate_forgetting(phase.policy, field + ".forgetting");
        for (const auto& constituent : phase.constituents) {
            if (!available.contains(constituent)) {
                throw ConfigError(field + ".constituents: '" + constituent +
                                  "' is not a known sign at phase start (forward reference)");
            }
        }
        // Later phases may build on this phase's sign.
        available = register_converged(std::move(available),
                                       KnownSign{phase.sign_id, phase.constituents, "", phase.id},
                                       true);
    }
}

namespace {

std::uint64_t sign_depth(const SignRegistry& registry, const std::string& id) {
    const KnownSign* sign = registry.find(id);
    if (sign == nullptr || sign->constituents.empty()) {
        return 0;
    }
    std::uint64_t deepest = 0;
    for (const auto& constituent : sign->constituents) {
        deepest = std::max(deepest, sign_depth(registry, constituent));
    }
    return deepest + 1;
}

}  // namespace

PhasedResult run_phased_scenario(const PhasedScenario& scenario, std::uint64_t master_seed) {
    scenario.validate();
    PhasedResult result;
    for (const auto& word : scenario.lexicon) {
        result.registry.add_word(word);
    }

    for (std::size_t t = 0; t < scenario.phases.size(); ++t) {
        const auto& phase = scenario.phases[t];
        PhaseResult phase_result;
        phase_result.phase_id = phase.id;
        phase_result.sign_id = phase.sign_id;

        const bool constituents_known =
            std::all_of(phase.constituents.begin(), phase.constituents.end(),
                        [&](const std::string& c) { return result.registry.contains(c); });
        if (!constituents_known) {
            phase_result.blocked = true;
            result.phases.push_back(std::move(phase_result));
            continue;
        }

        FundamentalScenario fundamental;
        fundamental.message_labels = phase.meanings;
        fundamental.message_probabilities = phase.meaning_probabilities;
        fundamental.start_counts = phase.start_counts;
        fundamental.alpha = phase.alpha;
        fundamental.policy = phase.policy;
        FundamentalHistory history(fundamental);

        RandomSource source = derive_stream(master_seed, t);
        const std::uint64_t checkpoint[] = {phase.n_utterances};
        run_history(history, source, phase.n_utterances, checkpoint);

        phase_result.final_probabilities = history.probabilities();
        const Verdict verdict =
            detect_convergence(phase_result.final_probabilities, scenario.epsilon);
        phase_result.converged = verdict.converged;
        if (verdict.converged) {
            const auto winner = static_cast<std::size_t>(verdict.winner);
            phase_result.meaning = phase.meanings[winner];
            result.registry = register_converged(
                std::move(result.registry),
                KnownSign{phase.sign_id, phase.constituents, phase.meanings[winner], phase.id},
                true);
            phase_result.nesting_depth = sign_depth(result.registry, phase.sign_id);
        }
        result.phases.push_back(std::move(phase_result));
    }
    return result;
}

}  // namespace langev
