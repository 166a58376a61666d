#include "langev/random.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "langev/errors.hpp"

namespace langev {

namespace {

// splitmix64 finalizer; bijective, so distinct inputs give distinct outputs.
std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

RandomSource::RandomSource(std::uint64_t master_seed, std::uint64_t stream_index)
    : master_seed_(master_seed), stream_index_(stream_index) {
    // Expand (seed, stream) into four mixed words; the addition constant keeps
    // the stream offset injective for a fixed master seed.
    const std::uint64_t base = master_seed + 0xda942042e4dd58b5ULL * (stream_index + 1);
    std::array<std::uint32_t, 8> material{};
    for (std::size_t w = 0; w < 4; ++w) {
        const std::uint64_t m = mix64(base + w);
        material[2 * w] = static_cast<std::uint32_t>(m);
        material[2 * w + 1] = static_cast<std::uint32_t>(m >> 32);
    }
    std::seed_seq seq(material.begin(), material.end());
    engine_.seed(seq);
}

double RandomSource::next_uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double ScriptedSource::next_uniform() {
    if (next_ >= draws_.size()) {
        throw std::out_of_range("ScriptedSource: draw sequence exhausted");
    }
    return draws_[next_++];
}

std::size_t draw_categorical(UniformSource& source, std::span<const double> probabilities) {
    if (probabilities.empty()) {
        throw ConfigError("draw_categorical: empty distribution");
    }
    if (probabilities.size() == 1) {
        return 0;
    }
    double total = 0.0;
    for (double p : probabilities) {
        if (!(p >= 0.0) || p > 1.0) {
            throw ConfigError("draw_categorical: probability outside [0, 1]");
        }
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-12) {
        throw ConfigError("draw_categorical: probabilities do not sum to 1");
    }
    const double u = source.next_uniform();
    double cumulative = 0.0;
    for (std::size_t i = 0; i + 1 < probabilities.size(); ++i) {
        cumulative += probabilities[i];
        if (u < cumulative) {
            return i;
        }
    }
    return probabilities.size() - 1;
}

}  // namespace langev
