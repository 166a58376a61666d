#pragma once
// Deterministic random streams for simulation histories.
//
// Every history h of an ensemble draws from derive_stream(master_seed, h).
// The stream depends only on (master_seed, h), never on thread count or
// schedule, so ensemble output is reproducible bit for bit.

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace langev {

// Source of uniform variates. Virtual so tests can script exact draw
// sequences through the production code paths.
class UniformSource {
public:
    virtual ~UniformSource() = default;

    // Uniform double in [0, 1), 53-bit resolution.
    virtual double next_uniform() = 0;
};

// Seeded stream addressed by (master_seed, stream_index). Identical
// addresses replay identical sequences; distinct indices give statistically
// independent streams.
class RandomSource final : public UniformSource {
public:
    RandomSource(std::uint64_t master_seed, std::uint64_t stream_index);

    double next_uniform() override;

    std::uint64_t master_seed() const { return master_seed_; }
    std::uint64_t stream_index() const { return stream_index_; }

private:
    std::uint64_t master_seed_ = 0;
    std::uint64_t stream_index_ = 0;
    std::mt19937_64 engine_;
};

inline RandomSource derive_stream(std::uint64_t master_seed, std::uint64_t history_index) {
    return RandomSource(master_seed, history_index);
}

// Fixed draw sequence for tests. Throws std::out_of_range when exhausted.
class ScriptedSource final : public UniformSource {
public:
    explicit ScriptedSource(std::vector<double> draws) : draws_(std::move(draws)) {}
    double next_uniform() override;

private:
    std::vector<double> draws_;
    std::size_t next_ = 0;
};

// Inverse-CDF draw: one uniform mapped through the cumulative distribution in
// ascending index order. This protocol is normative; it is what makes
// differently factored models trace-equivalent. A single-outcome distribution
// consumes no randomness.
std::size_t draw_categorical(UniformSource& source, std::span<const double> probabilities);

// True with probability p: one uniform, success iff u < p.
inline bool draw_bernoulli(UniformSource& source, double p) {
    return source.next_uniform() < p;
}

}  // namespace langev
