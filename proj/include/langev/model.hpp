#pragma once
// Production-model interface. A History owns the mutable state of one
// language history and advances it one utterance at a time. A history runs
// single-threaded; distinct histories share nothing mutable.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "langev/random.hpp"

namespace langev {

enum class Outcome : std::uint8_t { Success, Failure };

// One produced utterance. Ids that a model has no notion of stay -1.
struct Utterance {
    std::uint64_t k = 0;
    int message_id = -1;
    Outcome outcome = Outcome::Failure;
    double payoff = 0.0;     // 0 exactly for failures
    bool exhausted = false;  // every relation in the sequence declined
    int gr_id = -1;
    int form_id = -1;
    int verb_id = -1;
    int speaker_id = -1;
    int scene_id = -1;

    bool success() const { return outcome == Outcome::Success; }
};

// Rule probabilities and raw propensity counts captured at utterance k.
struct TrajectorySample {
    std::uint64_t k = 0;
    std::vector<double> probabilities;
    std::vector<double> counts;
};

// Half-open cell range of one rule family; the probabilities inside a group
// compete for the same denominator.
using CellGroup = std::pair<std::size_t, std::size_t>;

class History {
public:
    virtual ~History() = default;

    virtual std::unique_ptr<History> clone() const = 0;

    // Produce the next utterance and update the state of learning.
    virtual Utterance step(UniformSource& source) = 0;

    virtual std::vector<double> probabilities() const = 0;
    virtual std::vector<double> counts() const = 0;
    virtual const std::vector<std::string>& probability_labels() const = 0;
    virtual const std::vector<std::string>& count_labels() const = 0;
    virtual const std::vector<CellGroup>& cell_groups() const = 0;

    // Message-level counts and priors for hearer interpretation, where the
    // notion applies (count cells indexed by message).
    virtual bool supports_hearer() const { return false; }
    virtual std::vector<double> hearer_priors() const { return {}; }

    std::uint64_t utterances_produced() const { return k_; }

protected:
    std::uint64_t k_ = 0;
};

struct RunResult {
    std::vector<TrajectorySample> samples;
    std::vector<Utterance> utterances;  // filled only when requested
};

// Advance the history n utterances, sampling at the given checkpoints
// (strictly increasing, each >= 1 and <= n).
RunResult run_history(History& history, UniformSource& source, std::uint64_t n,
                      std::span<const std::uint64_t> checkpoints,
                      bool record_utterances = false);

// 50 log10-spaced checkpoints per decade from 10 up to n, n always included.
std::vector<std::uint64_t> default_checkpoints(std::uint64_t n);

}  // namespace langev
