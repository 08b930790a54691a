#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "donorbench/dataset.hpp"
#include "donorbench/gp_optimizer.hpp"
#include "donorbench/json_io.hpp"
#include "donorbench/metrics_cv.hpp"

namespace donorbench {

inline constexpr const char* kReportSchema = "donorbench-report/1";
inline constexpr const char* kVersion = "0.1.0";
// A classifier whose mean accuracy lies this close to the majority-class
// frequency is flagged as indistinguishable from the constant predictor.
inline constexpr double kBaselineMargin = 0.005;

struct RunConfig {
    std::filesystem::path data;
    bool has_header = true;
    std::size_t k = 5;
    std::uint64_t seed = 0;
    bool shuffle = false;
    std::vector<ClassifierKind> classifiers = all_classifier_kinds();
    bool run_ga = true;
    std::size_t generations = 5;
    std::size_t population = 20;
    std::optional<std::filesystem::path> out;
    unsigned threads = 0;

    void validate() const;
};

struct ClassifierResult {
    std::string name;
    CVReport cv;
    bool near_baseline = false;
};

struct RankEntry {
    std::string name;
    double mean_accuracy = 0.0;
};

struct BenchmarkReport {
    RunConfig config;
    DatasetSummary summary;
    ConsistencyReport consistency;
    FoldPlan plan;
    std::vector<ClassifierResult> classifiers;
    std::optional<EvolutionHistory> evolution;
    std::optional<ClassifierResult> champion;
    std::vector<RankEntry> ranking;
    std::string generated_at;
    double total_seconds = 0.0;
};

// Raised by run_benchmark; names the stage that failed.
class StageError : public Error {
public:
    StageError(std::string stage, const std::string& message)
        : Error(stage + ": " + message), stage_(std::move(stage))
    {
    }
    const std::string& stage() const noexcept { return stage_; }

private:
    std::string stage_;
};

Json to_json(const RunConfig& config);

// load -> plan -> CV of each selected classifier -> GA -> CV of champion
// -> rank. Writes the report when config.out is set.
BenchmarkReport run_benchmark(const RunConfig& config);

Json report_to_json(const BenchmarkReport& report);

void emit_report(const BenchmarkReport& report, const std::filesystem::path& path);

// Console layout: per classifier the fold scores, an
// "Average=" line and the pipeline, then baseline and ranking.
void print_table(const BenchmarkReport& report, std::ostream& out);

// Formats with the same 17 significant digits used in the JSON report.
std::string format_score(double value);

}  // namespace donorbench
