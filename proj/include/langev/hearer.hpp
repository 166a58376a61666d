#pragma once
// Hearer-side interpretation: the posterior over messages given a phrasal
// sign is the count-weighted prior, normalized. Pure functions, freely
// shareable across threads.

#include <span>
#include <vector>

#include "langev/model.hpp"

namespace langev {

// posterior_i = counts_i * priors_i / sum_j counts_j * priors_j.
// Scale-invariant in the counts; throws std::domain_error when the weighted
// mass is zero (undefined posterior).
std::vector<double> posterior(std::span<const double> counts, std::span<const double> priors);

// Posterior at every checkpoint of a trajectory whose count cells are indexed
// by message.
std::vector<std::vector<double>> interpretation_trajectory(
    std::span<const TrajectorySample> samples, std::span<const double> priors);

}  // namespace langev
