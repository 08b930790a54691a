#include "donorbench/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "donorbench/error.hpp"

namespace donorbench {

namespace {

void write_string(std::string& out, const std::string& s)
{
    out += Json(s).dump();
}

void write_number(std::string& out, double v)
{
    if (!std::isfinite(v)) {
        out += "null";
        return;
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
}

void write_value(std::string& out, const Json& v, int indent, int level)
{
    const auto newline = [&](int lvl) {
        if (indent >= 0) {
            out += '\n';
            out.append(static_cast<std::size_t>(indent * lvl), ' ');
        }
    };
    switch (v.type()) {
    case Json::value_t::object: {
        if (v.empty()) {
            out += "{}";
            return;
        }
        out += '{';
        bool first = true;
        for (auto it = v.begin(); it != v.end(); ++it) {  // std::map order: sorted keys
            if (!first) {
                out += ',';
            }
            first = false;
            newline(level + 1);
            write_string(out, it.key());
            out += indent >= 0 ? ": " : ":";
            write_value(out, it.value(), indent, level + 1);
        }
        newline(level);
        out += '}';
        return;
    }
    case Json::value_t::array: {
        if (v.empty()) {
            out += "[]";
            return;
        }
        out += '[';
        bool first = true;
        for (const auto& item : v) {
            if (!first) {
                out += ',';
            }
            first = false;
            newline(level + 1);
            write_value(out, item, indent, level + 1);
        }
        newline(level);
        out += ']';
        return;
    }
    case Json::value_t::number_float:
        write_number(out, v.get<double>());
        return;
    default:
        out += v.dump();
        return;
    }
}

}  // namespace

std::string canonical_dump(const Json& value, int indent)
{
    std::string out;
    write_value(out, value, indent, 0);
    out += '\n';
    return out;
}

Json to_json(const ParamValue& value)
{
    return std::visit([](const auto& v) { return Json(v); }, value);
}

Json to_json(const ClassifierSpec& spec)
{
    Json params = Json::object();
    for (const auto& [key, value] : spec.params()) {
        params[key] = to_json(value);
    }
    return {{"kind", to_string(spec.kind())}, {"params", params}};
}

Json to_json(const PipelineSpec& spec)
{
    return {{"preprocessor", to_string(spec.preprocessor)},
            {"classifier", to_json(spec.classifier)},
            {"encoding", spec.encode()}};
}

Json to_json(const DatasetSummary& s)
{
    Json features = Json::array();
    for (std::size_t j = 0; j < s.features.size(); ++j) {
        features.push_back({{"name", j < s.feature_names.size() ? s.feature_names[j] : ""},
                            {"min", s.features[j].min},
                            {"max", s.features[j].max},
                            {"mean", s.features[j].mean}});
    }
    return {{"n_samples", s.n_samples},
            {"n_features", s.n_features},
            {"features", features},
            {"class_counts", {{"0", s.count0}, {"1", s.count1}}},
            {"majority_label", s.majority_label},
            {"majority_frequency", s.majority_frequency}};
}

Json to_json(const ConsistencyReport& r)
{
    Json j = {{"status", to_string(r.status)}, {"message", r.message}};
    if (r.status == ConsistencyStatus::proportional) {
        j["ratio"] = r.ratio;
    } else if (r.status == ConsistencyStatus::not_proportional) {
        j["first_mismatch"] = r.first_mismatch;
    }
    return j;
}

Json to_json(const FoldPlan& plan)
{
    Json sizes = Json::array();
    for (const auto& f : plan.folds) {
        sizes.push_back(f.size());
    }
    return {{"n", plan.n}, {"k", plan.k}, {"shuffle", plan.shuffled}, {"seed", plan.seed}, {"fold_sizes", sizes}};
}

Json to_json(const CVReport& r)
{
    return {{"pipeline", to_json(r.pipeline)},
            {"fold_accuracies", r.fold_accuracies},
            {"fold_seconds", r.fold_seconds},
            {"mean_accuracy", r.mean_accuracy}};
}

Json to_json(const Individual& ind)
{
    Json j = {{"genome", to_json(ind.genome)}, {"size", ind.size()}};
    j["fitness"] = ind.fitness ? Json(*ind.fitness) : Json(nullptr);
    if (!ind.error.empty()) {
        j["error"] = ind.error;
    }
    return j;
}

Json to_json(const EvolutionHistory& h)
{
    Json gens = Json::array();
    for (const auto& rec : h.generations) {
        Json pop = Json::array();
        for (const auto& ind : rec.population) {
            pop.push_back({{"encoding", ind.genome.encode()},
                           {"fitness", ind.fitness ? Json(*ind.fitness) : Json(nullptr)}});
        }
        gens.push_back({{"generation", rec.generation},
                        {"best_fitness", rec.best_fitness},
                        {"mean_fitness", rec.mean_fitness},
                        {"best_genome", to_json(rec.best_genome)},
                        {"evaluations", rec.evaluations},
                        {"population", pop}});
    }
    Json failures = Json::array();
    for (const auto& f : h.failures) {
        failures.push_back(to_json(f));
    }
    return {{"generations", gens},
            {"champion", to_json(h.champion)},
            {"evaluations", h.evaluations},
            {"failures", failures}};
}

ParamValue param_from_json(const Json& v)
{
    switch (v.type()) {
    case Json::value_t::boolean: return v.get<bool>();
    case Json::value_t::number_integer:
    case Json::value_t::number_unsigned: return v.get<std::int64_t>();
    case Json::value_t::number_float: return v.get<double>();
    case Json::value_t::string: return v.get<std::string>();
    default: throw InvalidArgument("hyperparameter values must be booleans, numbers, or strings");
    }
}

ClassifierSpec classifier_spec_from_json(const Json& v)
{
    if (!v.is_object() || !v.contains("kind") || !v["kind"].is_string()) {
        throw InvalidArgument("classifier spec needs a string 'kind'");
    }
    const auto name = v["kind"].get<std::string>();
    const auto kind = classifier_kind_from_string(name);
    if (!kind) {
        throw InvalidArgument("unknown classifier kind '" + name + "'");
    }
    auto spec = ClassifierSpec::defaults(*kind);
    if (v.contains("params")) {
        if (!v["params"].is_object()) {
            throw InvalidArgument("classifier 'params' must be an object");
        }
        for (auto it = v["params"].begin(); it != v["params"].end(); ++it) {
            spec.set(it.key(), param_from_json(it.value()));
        }
    }
    return spec;
}

PipelineSpec pipeline_from_json(const Json& v)
{
    if (!v.is_object() || !v.contains("classifier")) {
        throw InvalidArgument("pipeline spec needs a 'classifier' entry");
    }
    PipelineSpec spec;
    if (v.contains("preprocessor") && !v["preprocessor"].is_null()) {
        const auto name = v["preprocessor"].get<std::string>();
        const auto kind = scaler_kind_from_string(name);
        if (!kind) {
            throw InvalidArgument("unknown preprocessor '" + name + "'");
        }
        spec.preprocessor = *kind;
    }
    spec.classifier = classifier_spec_from_json(v["classifier"]);
    return spec;
}

Json read_json_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open '" + path.string() + "'");
    }
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw Error("malformed JSON in '" + path.string() + "': " + e.what());
    }
}

}  // namespace donorbench
