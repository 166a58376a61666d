#pragma once
// Efficiency metrics and diachronic case-study ingestion. A grammar is
// "efficient" when the more complex form carries the rarer (more informative)
// meaning; the case-study report classifies historical marker data into the
// categoricalization regime (unmarked meaning more frequent, marker becomes
// obligatory) or the stable-variation regime.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "langev/form_competition.hpp"

namespace langev {

// Surprisal in bits: log2(1/p). p must lie in (0, 1].
double informativeness(double probability_in_context);

struct FormProfile {
    std::string form_id;
    int morpheme_count = 1;  // >= 1
    std::optional<int> segment_count;
};

struct EfficiencyEntry {
    std::string form_id;
    int morpheme_count = 1;
    double meaning_probability = 0.0;
    double informativeness_bits = 0.0;
};

struct EfficiencyReport {
    std::vector<EfficiencyEntry> entries;
    // Sign of the rank correlation between complexity and informativeness:
    // "efficient", "inefficient", or "neutral".
    std::string verdict;
    double rank_correlation = 0.0;
};

// meaning_probabilities[i] is the in-context probability of the meaning that
// profiles[i] expresses in the converged grammar. Needs at least two forms.
EfficiencyReport efficiency_report(const std::vector<FormProfile>& profiles,
                                   const std::vector<double>& meaning_probabilities);

struct CaseRow {
    std::string period;
    std::string context;
    std::uint64_t unmarked_count = 0;
    std::uint64_t marked_count = 0;

    double marked_share() const;
};

struct CaseTable {
    std::vector<CaseRow> rows;

    void validate() const;
};

// CSV with header `period,context,unmarked_count,marked_count`. Malformed
// rows raise ConfigError naming the row number.
CaseTable ingest_case_table(const std::filesystem::path& file);
void write_case_table(const std::filesystem::path& file, const CaseTable& table);

struct CaseStudyContextTrend {
    std::string context;
    std::vector<std::string> periods;
    std::vector<double> marked_shares;
    bool rising = false;  // final period's marked share above the first's
};

struct CaseStudyReport {
    double p_unmarked_meaning = 0.0;  // pooled share of the unmarked form in modern data
    std::string regime;               // names the covering limit result
    std::optional<LimitPrediction> prediction;  // stable-variation limits, when applicable
    std::vector<CaseStudyContextTrend> trends;  // empty without a historical table
    bool directionally_consistent = true;
};

// Classify the regime from the modern priors table and, when a historical
// table is supplied, check the marked-share trend against it.
CaseStudyReport case_study_report(const std::optional<CaseTable>& historical,
                                  const CaseTable& modern_priors);

}  // namespace langev
