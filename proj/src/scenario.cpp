#include "langev/scenario.hpp"

#include <fstream>

#include "langev/errors.hpp"

namespace langev {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& what) {
    throw ConfigError(field + ": " + what);
}

const json& require(const json& node, const char* key) {
    if (!node.contains(key)) {
        fail(key, "missing required field");
    }
    return node.at(key);
}

double number(const json& node, const std::string& field) {
    if (!node.is_number()) {
        fail(field, "expected a number");
    }
    return node.get<double>();
}

std::vector<double> number_vector(const json& node, const std::string& field) {
    if (!node.is_array()) {
        fail(field, "expected an array of numbers");
    }
    std::vector<double> values;
    values.reserve(node.size());
    for (std::size_t i = 0; i < node.size(); ++i) {
        values.push_back(number(node[i], field + "[" + std::to_string(i) + "]"));
    }
    return values;
}

std::vector<std::string> string_vector(const json& node, const std::string& field) {
    if (!node.is_array()) {
        fail(field, "expected an array of strings");
    }
    std::vector<std::string> values;
    for (const auto& item : node) {
        if (!item.is_string()) {
            fail(field, "expected an array of strings");
        }
        values.push_back(item.get<std::string>());
    }
    return values;
}

ForgettingPolicy parse_forgetting(const json& node, const std::string& field) {
    ForgettingPolicy policy;
    if (node.is_null()) {
        return policy;
    }
    if (!node.is_object()) {
        fail(field, "expected an object");
    }
    policy.nu = number(require(node, "nu"), field + ".nu");
    policy.decay_alpha = node.value("decay_alpha", true);
    policy.decay_on_failure = node.value("decay_on_failure", false);
    validate_forgetting(policy, field);
    return policy;
}

FundamentalScenario parse_fundamental(const json& root, bool general) {
    FundamentalScenario scenario;
    if (root.contains("messages")) {
        scenario.message_labels = string_vector(root.at("messages"), "messages");
    }
    scenario.start_counts = number_vector(require(root, "start_counts"), "start_counts");
    scenario.alpha = root.contains("alpha") ? number(root.at("alpha"), "alpha") : 0.0;
    if (root.contains("forgetting")) {
        scenario.policy = parse_forgetting(root.at("forgetting"), "forgetting");
    }
    if (!general) {
        scenario.message_probabilities =
            number_vector(require(root, "message_probabilities"), "message_probabilities");
        scenario.validate();
        return scenario;
    }

    const json& scenes = require(root, "scenes");
    if (!scenes.is_array()) {
        fail("scenes", "expected an array");
    }
    for (const auto& scene : scenes) {
        scenario.scene_weights.push_back(number(require(scene, "weight"), "scenes[].weight"));
    }
    const json& speakers = require(root, "speakers");
    if (!speakers.is_array()) {
        fail("speakers", "expected an array");
    }
    for (std::size_t r = 0; r < speakers.size(); ++r) {
        const std::string field = "speakers[" + std::to_string(r) + "]";
        SpeakerSpec spec;
        spec.label = speakers[r].value("label", "r" + std::to_string(r + 1));
        spec.weight = number(require(speakers[r], "weight"), field + ".weight");
        const json& rows = require(speakers[r], "message_probabilities");
        if (!rows.is_array()) {
            fail(field + ".message_probabilities", "expected an array per scene");
        }
        for (std::size_t s = 0; s < rows.size(); ++s) {
            spec.message_probabilities.push_back(number_vector(
                rows[s], field + ".message_probabilities[" + std::to_string(s) + "]"));
        }
        scenario.speakers.push_back(std::move(spec));
    }
    if (root.contains("payoffs")) {
        const json& payoffs = root.at("payoffs");
        for (std::size_t r = 0; r < payoffs.size(); ++r) {
            std::vector<std::vector<double>> per_scene;
            for (std::size_t s = 0; s < payoffs[r].size(); ++s) {
                per_scene.push_back(number_vector(payoffs[r][s], "payoffs[" + std::to_string(r) +
                                                                     "][" + std::to_string(s) +
                                                                     "]"));
            }
            scenario.payoffs.push_back(std::move(per_scene));
        }
    }
    scenario.validate();
    return scenario;
}

SequentialScenario parse_sequential(const json& root) {
    SequentialScenario scenario;
    if (root.contains("messages")) {
        scenario.message_labels = string_vector(root.at("messages"), "messages");
    }
    scenario.message_probabilities =
        number_vector(require(root, "message_probabilities"), "message_probabilities");
    const json& relations = require(root, "relations");
    if (!relations.is_array()) {
        fail("relations", "expected an array");
    }
    for (std::size_t g = 0; g < relations.size(); ++g) {
        const std::string field = "relations[" + std::to_string(g) + "]";
        RelationSpec spec;
        spec.name = relations[g].value("name", "GR" + std::to_string(g + 1));
        spec.alpha =
            relations[g].contains("alpha") ? number(relations[g].at("alpha"), field + ".alpha") : 0.0;
        spec.start_counts =
            number_vector(require(relations[g], "start_counts"), field + ".start_counts");
        if (relations[g].contains("forgetting")) {
            spec.policy = parse_forgetting(relations[g].at("forgetting"), field + ".forgetting");
        }
        scenario.relations.push_back(std::move(spec));
    }
    scenario.validate();
    return scenario;
}

SimilarityScenario parse_similarity(const json& root) {
    SimilarityScenario scenario;
    const json& verbs = require(root, "verbs");
    if (!verbs.is_array()) {
        fail("verbs", "expected an array");
    }
    for (std::size_t v = 0; v < verbs.size(); ++v) {
        const std::string field = "verbs[" + std::to_string(v) + "]";
        VerbSpec spec;
        spec.name = verbs[v].value("name", "v" + std::to_string(v + 1));
        spec.frequency = number(require(verbs[v], "frequency"), field + ".frequency");
        spec.roles = string_vector(require(verbs[v], "roles"), field + ".roles");
        spec.role_probabilities =
            number_vector(require(verbs[v], "role_probabilities"), field + ".role_probabilities");
        scenario.verbs.push_back(std::move(spec));
    }
    const json& relations = require(root, "relations");
    for (std::size_t g = 0; g < relations.size(); ++g) {
        SimilarityGr gr;
        gr.name = relations[g].value("name", "GR" + std::to_string(g + 1));
        gr.alpha = relations[g].contains("alpha")
                       ? number(relations[g].at("alpha"),
                                "relations[" + std::to_string(g) + "].alpha")
                       : 0.0;
        scenario.relations.push_back(std::move(gr));
    }
    const json& similarity = require(root, "similarity");
    const json& gamma = require(similarity, "gamma");
    for (std::size_t t = 0; t < gamma.size(); ++t) {
        scenario.gamma.push_back(
            number_vector(gamma[t], "similarity.gamma[" + std::to_string(t) + "]"));
    }
    scenario.decay = similarity.contains("decay")
                         ? number(similarity.at("decay"), "similarity.decay")
                         : 1.0;
    const std::string align = similarity.value("align", "by_role_name");
    if (align == "by_role_name") {
        scenario.align_by_role_name = true;
    } else if (align == "explicit") {
        scenario.align_by_role_name = false;
        const json& alignment = require(similarity, "alignment");
        for (std::size_t t = 0; t < alignment.size(); ++t) {
            std::vector<std::vector<std::size_t>> per_source;
            for (std::size_t s = 0; s < alignment[t].size(); ++s) {
                std::vector<std::size_t> map;
                for (const auto& value : alignment[t][s]) {
                    map.push_back(value.get<std::size_t>());
                }
                per_source.push_back(std::move(map));
            }
            scenario.alignment.push_back(std::move(per_source));
        }
    } else {
        fail("similarity.align", "expected 'by_role_name' or 'explicit'");
    }
    if (root.contains("forgetting")) {
        scenario.policy = parse_forgetting(root.at("forgetting"), "forgetting");
    }
    if (root.contains("start_counts")) {
        const json& tables = root.at("start_counts");
        for (std::size_t g = 0; g < tables.size(); ++g) {
            std::vector<std::vector<double>> per_verb;
            for (std::size_t v = 0; v < tables[g].size(); ++v) {
                per_verb.push_back(number_vector(tables[g][v], "start_counts[" +
                                                                   std::to_string(g) + "][" +
                                                                   std::to_string(v) + "]"));
            }
            scenario.start_counts.push_back(std::move(per_verb));
        }
    }
    scenario.validate();
    return scenario;
}

FormInventory parse_forms(const json& root) {
    FormInventory inventory;
    if (root.contains("messages")) {
        inventory.message_labels = string_vector(root.at("messages"), "messages");
    }
    inventory.message_probabilities =
        number_vector(require(root, "message_probabilities"), "message_probabilities");
    inventory.form_labels = string_vector(require(root, "forms"), "forms");
    const json& biases = require(root, "form_probabilities");
    for (std::size_t i = 0; i < biases.size(); ++i) {
        inventory.form_probabilities.push_back(
            number_vector(biases[i], "form_probabilities[" + std::to_string(i) + "]"));
    }
    const json& starts = require(root, "start_counts");
    for (std::size_t i = 0; i < starts.size(); ++i) {
        inventory.start_counts.push_back(
            number_vector(starts[i], "start_counts[" + std::to_string(i) + "]"));
    }
    inventory.alpha = root.contains("alpha") ? number(root.at("alpha"), "alpha") : 0.0;
    if (root.contains("forgetting")) {
        inventory.policy = parse_forgetting(root.at("forgetting"), "forgetting");
    }
    inventory.validate();
    return inventory;
}

CompetitionScenario parse_form_competition(const json& root) {
    CompetitionScenario scenario;
    scenario.p_subj = number(require(root, "p_subj"), "p_subj");
    if (root.contains("start_counts")) {
        const json& starts = root.at("start_counts");
        scenario.c0_u_subj = number(require(starts, "unmarked_subj"), "start_counts.unmarked_subj");
        scenario.c0_u_obj = number(require(starts, "unmarked_obj"), "start_counts.unmarked_obj");
        scenario.c0_a_obj =
            starts.contains("marked_obj") ? number(starts.at("marked_obj"), "start_counts.marked_obj") : 0.0;
    }
    scenario.validate();
    return scenario;
}

PhasedScenario parse_phased(const json& root) {
    PhasedScenario scenario;
    scenario.lexicon = string_vector(require(root, "lexicon"), "lexicon");
    scenario.epsilon =
        root.contains("epsilon") ? number(root.at("epsilon"), "epsilon") : 0.01;
    const json& phases = require(root, "phases");
    if (!phases.is_array()) {
        fail("phases", "expected an array");
    }
    for (std::size_t t = 0; t < phases.size(); ++t) {
        const std::string field = "phases[" + std::to_string(t) + "]";
        PhaseSpec phase;
        phase.id = phases[t].value("id", "phase" + std::to_string(t + 1));
        phase.sign_id = require(phases[t], "sign").get<std::string>();
        if (phases[t].contains("constituents")) {
            phase.constituents =
                string_vector(phases[t].at("constituents"), field + ".constituents");
        }
        phase.n_utterances = require(phases[t], "utterances").get<std::uint64_t>();
        phase.meanings = string_vector(require(phases[t], "meanings"), field + ".meanings");
        phase.meaning_probabilities = number_vector(
            require(phases[t], "meaning_probabilities"), field + ".meaning_probabilities");
        phase.start_counts =
            number_vector(require(phases[t], "start_counts"), field + ".start_counts");
        phase.alpha =
            phases[t].contains("alpha") ? number(phases[t].at("alpha"), field + ".alpha") : 0.0;
        if (phases[t].contains("forgetting")) {
            phase.policy = parse_forgetting(phases[t].at("forgetting"), field + ".forgetting");
        }
        scenario.phases.push_back(std::move(phase));
    }
    scenario.validate();
    return scenario;
}

EnsembleDefaults parse_ensemble_defaults(const json& root) {
    EnsembleDefaults defaults;
    if (!root.contains("ensemble")) {
        return defaults;
    }
    const json& node = root.at("ensemble");
    if (node.contains("histories")) {
        defaults.histories = node.at("histories").get<std::uint64_t>();
    }
    if (node.contains("utterances")) {
        defaults.utterances = node.at("utterances").get<std::uint64_t>();
    }
    if (node.contains("seed")) {
        defaults.seed = node.at("seed").get<std::uint64_t>();
    }
    if (node.contains("epsilon")) {
        defaults.epsilon = number(node.at("epsilon"), "ensemble.epsilon");
    }
    if (node.contains("workers")) {
        defaults.workers = node.at("workers").get<unsigned>();
    }
    if (node.contains("hearer_priors")) {
        defaults.hearer_priors =
            number_vector(node.at("hearer_priors"), "ensemble.hearer_priors");
    }
    return defaults;
}

}  // namespace

const char* model_name(ModelKind kind) {
    switch (kind) {
        case ModelKind::Fundamental: return "fundamental";
        case ModelKind::General: return "general";
        case ModelKind::Sequential: return "sequential";
        case ModelKind::Similarity: return "similarity";
        case ModelKind::Forms: return "forms";
        case ModelKind::FormCompetition: return "form_competition";
        case ModelKind::Phased: return "phased";
    }
    return "unknown";
}

Scenario parse_config_json(const nlohmann::json& root) {
    if (!root.is_object()) {
        throw ConfigError("config: expected a JSON object");
    }
    const std::string model = require(root, "model").get<std::string>();
    Scenario scenario;
    scenario.ensemble = parse_ensemble_defaults(root);
    if (model == "fundamental") {
        scenario.kind = ModelKind::Fundamental;
        scenario.config = parse_fundamental(root, false);
    } else if (model == "general") {
        scenario.kind = ModelKind::General;
        scenario.config = parse_fundamental(root, true);
    } else if (model == "sequential") {
        scenario.kind = ModelKind::Sequential;
        scenario.config = parse_sequential(root);
    } else if (model == "similarity") {
        scenario.kind = ModelKind::Similarity;
        scenario.config = parse_similarity(root);
    } else if (model == "forms") {
        scenario.kind = ModelKind::Forms;
        scenario.config = parse_forms(root);
    } else if (model == "form_competition") {
        scenario.kind = ModelKind::FormCompetition;
        scenario.config = parse_form_competition(root);
    } else if (model == "phased") {
        scenario.kind = ModelKind::Phased;
        scenario.config = parse_phased(root);
    } else {
        throw ConfigError("model: unknown model name '" + model + "'");
    }
    return scenario;
}

Scenario parse_config(const std::filesystem::path& file) {
    std::ifstream input(file);
    if (!input) {
        throw ConfigError("config: cannot open " + file.string());
    }
    nlohmann::json root;
    try {
        input >> root;
    } catch (const nlohmann::json::exception& error) {
        throw ConfigError("config: invalid JSON in " + file.string() + ": " + error.what());
    }
    return parse_config_json(root);
}

std::unique_ptr<History> make_history(const Scenario& scenario) {
    switch (scenario.kind) {
        case ModelKind::Fundamental:
        case ModelKind::General:
            return std::make_unique<FundamentalHistory>(
                std::get<FundamentalScenario>(scenario.config));
        case ModelKind::Sequential:
            return std::make_unique<SequentialHistory>(
                std::get<SequentialScenario>(scenario.config));
        case ModelKind::Similarity:
            return std::make_unique<SimilarityHistory>(
                std::get<SimilarityScenario>(scenario.config));
        case ModelKind::Forms:
            return std::make_unique<FormsHistory>(std::get<FormInventory>(scenario.config));
        case ModelKind::FormCompetition:
            return std::make_unique<FormCompetitionHistory>(
                std::get<CompetitionScenario>(scenario.config));
        case ModelKind::Phased:
            throw ConfigError("model: phased scenarios run phase by phase, not as one history");
    }
    throw ConfigError("model: unknown model kind");
}

}  // namespace langev
