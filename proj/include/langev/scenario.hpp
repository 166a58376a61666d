#pragma once
// JSON scenario files: one `model` discriminator plus the model's parameters,
// with optional ensemble defaults. parse_config validates everything up
// front; error messages name the offending field.

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "langev/form_competition.hpp"
#include "langev/forms.hpp"
#include "langev/fundamental.hpp"
#include "langev/recursion.hpp"
#include "langev/sequential.hpp"
#include "langev/similarity.hpp"

namespace langev {

enum class ModelKind {
    Fundamental,
    General,
    Sequential,
    Similarity,
    Forms,
    FormCompetition,
    Phased,
};

const char* model_name(ModelKind kind);

struct EnsembleDefaults {
    std::optional<std::uint64_t> histories;
    std::optional<std::uint64_t> utterances;
    std::optional<std::uint64_t> seed;
    std::optional<double> epsilon;
    std::optional<unsigned> workers;
    std::vector<double> hearer_priors;
};

struct Scenario {
    ModelKind kind = ModelKind::Fundamental;
    std::variant<FundamentalScenario, SequentialScenario, SimilarityScenario, FormInventory,
                 CompetitionScenario, PhasedScenario>
        config;
    EnsembleDefaults ensemble;

    const PhasedScenario& phased() const { return std::get<PhasedScenario>(config); }
};

Scenario parse_config(const std::filesystem::path& file);
Scenario parse_config_json(const nlohmann::json& root);

// History prototype for every model kind except Phased (which runs through
// run_phased_scenario instead).
std::unique_ptr<History> make_history(const Scenario& scenario);

}  // namespace langev
