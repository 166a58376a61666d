#include "langev/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "langev/errors.hpp"

namespace langev {

double informativeness(double probability_in_context) {
    if (!(probability_in_context > 0.0) || probability_in_context > 1.0) {
        throw std::domain_error("informativeness: probability must lie in (0, 1]");
    }
    return std::log2(1.0 / probability_in_context);
}

namespace {

// Average ranks, so ties contribute zero to the correlation.
std::vector<double> ranks(const std::vector<double>& values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<double> result(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) {
            ++j;
        }
        const double shared = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t k = i; k <= j; ++k) {
            result[order[k]] = shared;
        }
        i = j + 1;
    }
    return result;
}

double spearman(const std::vector<double>& a, const std::vector<double>& b) {
    const auto ra = ranks(a);
    const auto rb = ranks(b);
    const double n = static_cast<double>(a.size());
    const double mean = (n + 1.0) / 2.0;
    double cov = 0.0;
    double var_a = 0.0;
    double var_b = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        cov += (ra[i] - mean) * (rb[i] - mean);
        var_a += (ra[i] - mean) * (ra[i] - mean);
        var_b += (rb[i] - mean) * (rb[i] - mean);
    }
    if (var_a == 0.0 || var_b == 0.0) {
        return 0.0;
    }
    return cov / std::sqrt(var_a * var_b);
}

}  // namespace

EfficiencyReport efficiency_report(const std::vector<FormProfile>& profiles,
                                   const std::vector<double>& meaning_probabilities) {
    if (profiles.size() < 2) {
        throw std::invalid_argument("efficiency_report: need at least two forms");
    }
    if (profiles.size() != meaning_probabilities.size()) {
        throw std::invalid_argument(
            "efficiency_report: one meaning probability per form required");
    }
    EfficiencyReport report;
    std::vector<double> complexity;
    std::vector<double> info;
    for (std::size_t i = 0; i < profiles.size(); ++i) {
        if (profiles[i].morpheme_count < 1) {
            throw std::invalid_argument("efficiency_report: morpheme_count must be >= 1");
        }
        EfficiencyEntry entry;
        entry.form_id = profiles[i].form_id;
        entry.morpheme_count = profiles[i].morpheme_count;
        entry.meaning_probability = meaning_probabilities[i];
        entry.informativeness_bits = informativeness(meaning_probabilities[i]);
        complexity.push_back(static_cast<double>(entry.morpheme_count));
        info.push_back(entry.informativeness_bits);
        report.entries.push_back(std::move(entry));
    }
    report.rank_correlation = spearman(complexity, info);
    if (report.rank_correlation > 0.0) {
        report.verdict = "efficient";
    } else if (report.rank_correlation < 0.0) {
        report.verdict = "inefficient";
    } else {
        report.verdict = "neutral";
    }
    return report;
}

double CaseRow::marked_share() const {
    const double total = static_cast<double>(unmarked_count + marked_count);
    if (total == 0.0) {
        return 0.0;
    }
    return static_cast<double>(marked_count) / total;
}

void CaseTable::validate() const {
    if (rows.empty()) {
        throw ConfigError("case table: at least one row is required");
    }
}

CaseTable ingest_case_table(const std::filesystem::path& file) {
    std::ifstream input(file);
    if (!input) {
        throw ConfigError("case table: cannot open " + file.string());
    }
    std::string line;
    if (!std::getline(input, line)) {
        throw ConfigError("case table: empty file " + file.string());
    }
    if (line != "period,context,unmarked_count,marked_count") {
        throw ConfigError("case table: unexpected header in " + file.string());
    }
    CaseTable table;
    std::size_t row_number = 1;
    while (std::getline(input, line)) {
        ++row_number;
        if (line.empty()) {
            continue;
        }
        std::stringstream fields(line);
        CaseRow row;
        std::string unmarked;
        std::string marked;
        if (!std::getline(fields, row.period, ',') || !std::getline(fields, row.context, ',') ||
            !std::getline(fields, unmarked, ',') || !std::getline(fields, marked)) {
            throw ConfigError("case table: malformed row " + std::to_string(row_number) +
                              " in " + file.string());
        }
        try {
            row.unmarked_count = std::stoull(unmarked);
            row.marked_count = std::stoull(marked);
        } catch (const std::exception&) {
            throw ConfigError("case table: non-numeric count in row " +
                              std::to_string(row_number) + " of " + file.string());
        }
        table.rows.push_back(std::move(row));
    }
    table.validate();
    return table;
}

void write_case_table(const std::filesystem::path& file, const CaseTable& table) {
    std::ofstream output(file);
    if (!output) {
        throw ConfigError("case table: cannot write " + file.string());
    }
    output << "period,context,unmarked_count,marked_count\n";
    for (const auto& row : table.rows) {
        output << row.period << ',' << row.context << ',' << row.unmarked_count << ','
               << row.marked_count << '\n';
    }
}

CaseStudyReport case_study_report(const std::optional<CaseTable>& historical,
                                  const CaseTable& modern_priors) {
    modern_priors.validate();
    CaseStudyReport report;

    std::uint64_t unmarked = 0;
    std::uint64_t marked = 0;
    for (const auto& row : modern_priors.rows) {
        unmarked += row.unmarked_count;
        marked += row.marked_count;
    }
    if (unmarked + marked == 0) {
        throw ConfigError("modern priors: zero total count");
    }
    report.p_unmarked_meaning =
        static_cast<double>(unmarked) / static_cast<double>(unmarked + marked);

    if (report.p_unmarked_meaning == 0.5) {
        report.regime = "boundary (p = 1/2): not covered by either limit result";
    } else if (report.p_unmarked_meaning > 0.5) {
        report.regime = "categoricalization (Theorem 4)";
        report.prediction = limit_prediction(report.p_unmarked_meaning);
    } else {
        report.regime = "stable variation (Theorem 5)";
        report.prediction = limit_prediction(report.p_unmarked_meaning);
    }

    if (historical) {
        historical->validate();
        // Group the historical rows by context, preserving period order.
        for (const auto& row : historical->rows) {
            auto it = std::find_if(report.trends.begin(), report.trends.end(),
                                   [&](const CaseStudyContextTrend& t) {
                                       return t.context == row.context;
                                   });
            if (it == report.trends.end()) {
                report.trends.push_back(CaseStudyContextTrend{row.context, {}, {}, false});
                it = std::prev(report.trends.end());
            }
            it->periods.push_back(row.period);
            it->marked_shares.push_back(row.marked_share());
        }
        for (auto& trend : report.trends) {
            trend.rising = trend.marked_shares.back() > trend.marked_shares.front();
            // Categoricalization predicts a rising marked share; stable
            // variation predicts the share leveling toward its limit.
            bool consistent = true;
            if (report.p_unmarked_meaning > 0.5) {
                consistent = trend.rising;
            } else if (report.prediction) {
                const double limit = 1.0 - report.prediction->speaker_fu_given_obj;
                consistent = std::abs(trend.marked_shares.back() - limit) <=
                             std::abs(trend.marked_shares.front() - limit);
            }
            report.directionally_consistent = report.directionally_consistent && consistent;
        }
    }
    return report;
}

}  // namespace langev
