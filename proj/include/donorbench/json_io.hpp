#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "donorbench/dataset.hpp"
#include "donorbench/gp_optimizer.hpp"
#include "donorbench/metrics_cv.hpp"
#include "donorbench/pipeline.hpp"

namespace donorbench {

using Json = nlohmann::json;

// Object keys come out sorted and every floating-point number is written
// with 17 significant digits, so equal values always serialize to equal
// bytes.
std::string canonical_dump(const Json& value, int indent = 2);

Json to_json(const ParamValue& value);
Json to_json(const ClassifierSpec& spec);
Json to_json(const PipelineSpec& spec);
Json to_json(const DatasetSummary& summary);
Json to_json(const ConsistencyReport& report);
Json to_json(const FoldPlan& plan);
Json to_json(const CVReport& report);
Json to_json(const Individual& individual);
Json to_json(const EvolutionHistory& history);

ParamValue param_from_json(const Json& value);
ClassifierSpec classifier_spec_from_json(const Json& value);
// Accepts {"preprocessor": ..., "classifier": {"kind": ..., "params": {...}}};
// missing params take defaults.
PipelineSpec pipeline_from_json(const Json& value);

Json read_json_file(const std::filesystem::path& path);

}  // namespace donorbench
