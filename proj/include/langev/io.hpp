#pragma once
// Plot-ready serialization. Floats are written in shortest round-trip form so
// reruns with identical flags reproduce output files byte for byte.

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "langev/ensemble.hpp"

namespace langev {

// Shortest decimal representation that parses back to the same double.
std::string format_double(double value);

// FNV-1a 64-bit over raw bytes, hex-encoded; used for config hashes.
std::string fnv1a_hex(const std::string& bytes);

struct RunManifest {
    std::string command;
    std::string config_path;
    std::string config_hash;
    std::uint64_t master_seed = 0;
    std::uint64_t histories = 0;
    std::uint64_t utterances = 0;
    unsigned workers = 1;
    double epsilon = 0.01;
    std::string format = "csv";
    std::vector<std::string> cells;
};

void write_manifest(const std::filesystem::path& file, const RunManifest& manifest);

// trajectory.csv: header checkpoint_k,message_id,mean_p,sample_path_id,p.
// Mean rows leave the last two fields empty; retained sample paths leave
// mean_p empty.
void write_trajectory_csv(const std::filesystem::path& file, const EnsembleResult& result);

// histograms.csv: checkpoint_k,message_id,bin_index,count.
void write_histograms_csv(const std::filesystem::path& file, const EnsembleResult& result);

// verdicts.csv: history_id,verdict,final_p_max,message_id. message_id is the
// converged-to cell, or the final arg-max cell for unresolved histories.
void write_verdicts_csv(const std::filesystem::path& file, const EnsembleResult& result);

// Whole result as one JSON document (used by --format json).
nlohmann::json result_to_json(const EnsembleResult& result);

// history.csv for a single run: per-utterance record.
void write_history_csv(const std::filesystem::path& file,
                       const std::vector<Utterance>& utterances);

void write_hearer_csvs(const std::filesystem::path& directory, const EnsembleResult& result);

}  // namespace langev
