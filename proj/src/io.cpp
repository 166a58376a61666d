#include "langev/io.hpp"

#include <charconv>
#include <fstream>

#include "langev/errors.hpp"

namespace langev {

namespace {

std::ofstream open_output(const std::filesystem::path& file) {
    std::ofstream output(file, std::ios::binary);
    if (!output) {
        throw std::runtime_error("cannot write " + file.string());
    }
    return output;
}

}  // namespace

std::string format_double(double value) {
    char buffer[32];
    const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, result.ptr);
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char byte : bytes) {
        hash ^= byte;
        hash *= 0x100000001b3ULL;
    }
    char buffer[17];
    static const char* digits = "0123456789abcdef";
    for (int i = 15; i >= 0; --i) {
        buffer[i] = digits[hash & 0xf];
        hash >>= 4;
    }
    buffer[16] = '\0';
    return std::string(buffer);
}

void write_manifest(const std::filesystem::path& file, const RunManifest& manifest) {
    nlohmann::ordered_json doc;
    doc["artifact"] = "langev";
    doc["version"] = "0.1.0";
    doc["command"] = manifest.command;
    doc["config"] = manifest.config_path;
    doc["config_hash"] = manifest.config_hash;
    doc["master_seed"] = manifest.master_seed;
    doc["histories"] = manifest.histories;
    doc["utterances"] = manifest.utterances;
    doc["workers"] = manifest.workers;
    doc["epsilon"] = manifest.epsilon;
    doc["format"] = manifest.format;
    doc["cells"] = manifest.cells;
    auto output = open_output(file);
    output << doc.dump(2) << '\n';
}

void write_trajectory_csv(const std::filesystem::path& file, const EnsembleResult& result) {
    auto output = open_output(file);
    output << "checkpoint_k,message_id,mean_p,sample_path_id,p\n";
    for (std::size_t c = 0; c < result.checkpoints.size(); ++c) {
        for (std::size_t i = 0; i < result.mean_trajectory[c].size(); ++i) {
            output << result.checkpoints[c] << ',' << i << ','
                   << format_double(result.mean_trajectory[c][i]) << ",,\n";
        }
    }
    for (const auto& path : result.sample_paths) {
        for (const auto& sample : path.samples) {
            for (std::size_t i = 0; i < sample.probabilities.size(); ++i) {
                output << sample.k << ',' << i << ",," << path.history_id << ','
                       << format_double(sample.probabilities[i]) << '\n';
            }
        }
    }
}

void write_histograms_csv(const std::filesystem::path& file, const EnsembleResult& result) {
    auto output = open_output(file);
    output << "checkpoint_k,message_id,bin_index,count\n";
    for (std::size_t s = 0; s < result.histogram_checkpoints.size(); ++s) {
        for (std::size_t i = 0; i < result.histograms[s].size(); ++i) {
            for (std::size_t bin = 0; bin < kHistogramBins; ++bin) {
                output << result.histogram_checkpoints[s] << ',' << i << ',' << bin << ','
                       << result.histograms[s][i][bin] << '\n';
            }
        }
    }
}

void write_verdicts_csv(const std::filesystem::path& file, const EnsembleResult& result) {
    auto output = open_output(file);
    output << "history_id,verdict,final_p_max,message_id\n";
    for (std::size_t h = 0; h < result.histories.size(); ++h) {
        const auto& summary = result.histories[h];
        int cell = summary.verdict.winner;
        if (cell < 0) {
            double best = -1.0;
            for (std::size_t i = 0; i < summary.final_probabilities.size(); ++i) {
                if (summary.final_probabilities[i] > best) {
                    best = summary.final_probabilities[i];
                    cell = static_cast<int>(i);
                }
            }
        }
        output << h << ',' << (summary.verdict.converged ? "converged" : "unresolved") << ','
               << format_double(summary.verdict.p_max) << ',' << cell << '\n';
    }
}

nlohmann::json result_to_json(const EnsembleResult& result) {
    nlohmann::ordered_json doc;
    doc["checkpoints"] = result.checkpoints;
    doc["cells"] = result.probability_labels;
    doc["count_cells"] = result.count_labels;
    doc["mean_trajectory"] = result.mean_trajectory;
    doc["histogram_checkpoints"] = result.histogram_checkpoints;
    auto& histograms = doc["histograms"] = nlohmann::json::array();
    for (const auto& per_cell : result.histograms) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& bins : per_cell) {
            rows.push_back(bins);
        }
        histograms.push_back(std::move(rows));
    }
    auto& verdicts = doc["verdicts"] = nlohmann::json::array();
    for (const auto& summary : result.histories) {
        nlohmann::ordered_json v;
        v["converged"] = summary.verdict.converged;
        v["winner"] = summary.verdict.winner;
        v["p_max"] = summary.verdict.p_max;
        v["final_probabilities"] = summary.final_probabilities;
        v["final_counts"] = summary.final_counts;
        if (!summary.final_hearer_posterior.empty()) {
            v["final_hearer_posterior"] = summary.final_hearer_posterior;
        }
        verdicts.push_back(std::move(v));
    }
    auto& paths = doc["sample_paths"] = nlohmann::json::array();
    for (const auto& path : result.sample_paths) {
        nlohmann::ordered_json p;
        p["history_id"] = path.history_id;
        auto& samples = p["samples"] = nlohmann::json::array();
        for (const auto& sample : path.samples) {
            samples.push_back({{"k", sample.k},
                               {"probabilities", sample.probabilities},
                               {"counts", sample.counts}});
        }
        paths.push_back(std::move(p));
    }
    if (!result.hearer_priors.empty()) {
        doc["hearer_priors"] = result.hearer_priors;
        doc["mean_hearer_trajectory"] = result.mean_hearer_trajectory;
    }
    return doc;
}

void write_history_csv(const std::filesystem::path& file,
                       const std::vector<Utterance>& utterances) {
    auto output = open_output(file);
    output << "k,message_id,outcome,payoff,gr_id,form_id,verb_id,speaker_id,scene_id\n";
    for (const auto& u : utterances) {
        output << u.k << ',' << u.message_id << ','
               << (u.success() ? "success" : (u.exhausted ? "failure_exhausted" : "failure"))
               << ',' << format_double(u.payoff) << ',' << u.gr_id << ',' << u.form_id << ','
               << u.verb_id << ',' << u.speaker_id << ',' << u.scene_id << '\n';
    }
}

void write_hearer_csvs(const std::filesystem::path& directory, const EnsembleResult& result) {
    {
        auto output = open_output(directory / "hearer_trajectory.csv");
        output << "checkpoint_k,message_id,mean_posterior\n";
        for (std::size_t c = 0; c < result.mean_hearer_trajectory.size(); ++c) {
            for (std::size_t i = 0; i < result.mean_hearer_trajectory[c].size(); ++i) {
                output << result.checkpoints[c] << ',' << i << ','
                       << format_double(result.mean_hearer_trajectory[c][i]) << '\n';
            }
        }
    }
    {
        auto output = open_output(directory / "hearer_finals.csv");
        output << "history_id,message_id,posterior\n";
        for (std::size_t h = 0; h < result.histories.size(); ++h) {
            const auto& post = result.histories[h].final_hearer_posterior;
            for (std::size_t i = 0; i < post.size(); ++i) {
                output << h << ',' << i << ',' << format_double(post[i]) << '\n';
            }
        }
    }
}

}  // namespace langev
