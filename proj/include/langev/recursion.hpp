#pragma once
// Phased scenarios: a converged phrasal sign becomes a known sign, reusable
// as a constituent of later phases. Words are the base known signs; a phrase
// enters the registry only after its phase converged. Phases run in order and
// a non-converged phase blocks the phases that build on its sign.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "langev/fundamental.hpp"

namespace langev {

struct KnownSign {
    std::string id;
    std::vector<std::string> constituents;  // empty for words
    std::string meaning;                    // interpretation label
    std::string converged_from;             // phase id; empty for words
};

class SignRegistry {
public:
    void add_word(const std::string& word);
    bool contains(const std::string& id) const;
    const KnownSign* find(const std::string& id) const;
    std::size_t size() const { return signs_.size(); }
    const std::map<std::string, KnownSign>& signs() const { return signs_; }

private:
    friend SignRegistry register_converged(SignRegistry registry, const KnownSign& sign,
                                           bool phase_converged);
    std::map<std::string, KnownSign> signs_;
};

// Add the phase's sign to the registry. Throws std::invalid_argument when the
// phase did not converge; registering an already-known sign is a no-op.
SignRegistry register_converged(SignRegistry registry, const KnownSign& sign,
                                bool phase_converged);

struct PhaseSpec {
    std::string id;
    std::uint64_t n_utterances = 0;
    std::string sign_id;
    std::vector<std::string> constituents;
    // Candidate meanings of the sign, with their probabilities.
    std::vector<std::string> meanings;
    std::vector<double> meaning_probabilities;
    std::vector<double> start_counts;
    double alpha = 0.0;
    ForgettingPolicy policy;
};

struct PhasedScenario {
    std::vector<std::string> lexicon;  // base words
    std::vector<PhaseSpec> phases;
    double epsilon = 0.01;  // convergence gate at each phase's final checkpoint

    void validate() const;
};

struct PhaseResult {
    std::string phase_id;
    std::string sign_id;
    bool converged = false;
    bool blocked = false;  // skipped because a needed constituent never converged
    std::string meaning;   // winning meaning when converged
    std::vector<double> final_probabilities;
    std::uint64_t nesting_depth = 0;  // constituent tree depth of the new sign
};

struct PhasedResult {
    std::vector<PhaseResult> phases;
    SignRegistry registry;
};

// Phase t runs as one seeded history on stream t; its convergence gates the
// vocabulary of phase t+1.
PhasedResult run_phased_scenario(const PhasedScenario& scenario, std::uint64_t master_seed);

}  // namespace langev
