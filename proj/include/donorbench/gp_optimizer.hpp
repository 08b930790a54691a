#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "donorbench/dataset.hpp"
#include "donorbench/metrics_cv.hpp"
#include "donorbench/pipeline.hpp"
#include "donorbench/rng.hpp"

namespace donorbench {

using ParamGrid = std::map<std::string, std::vector<ParamValue>>;

// What the genetic search may produce. Hyperparameters without a grid stay
// at their defaults.
struct SearchSpace {
    std::vector<ScalerKind> preprocessors;  // never contains ScalerKind::none
    std::vector<ClassifierKind> classifiers;
    std::map<ClassifierKind, ParamGrid> grids;

    static SearchSpace default_space();

    // Throws InvalidArgument if empty, malformed, or holding illegal values.
    void validate() const;

    bool contains(const PipelineSpec& spec) const;

    const ParamGrid& grid(ClassifierKind kind) const;
};

struct Individual {
    PipelineSpec genome;
    std::optional<double> fitness;
    std::string error;  // non-empty when evaluation failed and fitness was set to 0

    std::size_t size() const noexcept { return genome.size(); }
};

// Total order used for ranking: higher fitness, then fewer steps, then the
// lexicographically smaller encoding. Unevaluated individuals rank last.
bool ranks_before(const Individual& a, const Individual& b);

struct GenerationRecord {
    std::size_t generation = 0;
    double best_fitness = 0.0;
    double mean_fitness = 0.0;
    PipelineSpec best_genome;
    std::size_t evaluations = 0;  // cumulative distinct CV runs so far
    std::vector<Individual> population;
};

struct EvolutionHistory {
    std::vector<GenerationRecord> generations;
    Individual champion;
    std::size_t evaluations = 0;
    std::vector<Individual> failures;
};

struct EvolveConfig {
    std::size_t population_size = 20;
    std::size_t generations = 5;
    double crossover_rate = 0.5;
    double mutation_rate = 0.9;
    std::size_t elitism = 1;
    std::size_t tournament = 2;
    unsigned threads = 0;  // fitness workers; 0 = hardware concurrency

    void validate() const;
};

PipelineSpec random_pipeline(const SearchSpace& space, Rng& rng);
PipelineSpec mutate(const PipelineSpec& spec, const SearchSpace& space, Rng& rng);
PipelineSpec crossover(const PipelineSpec& a, const PipelineSpec& b, Rng& rng);

EvolutionHistory evolve(const Dataset& ds, const SearchSpace& space, const EvolveConfig& config, const FoldPlan& plan,
                        std::uint64_t seed);

}  // namespace donorbench
