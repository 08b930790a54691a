#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "donorbench/dataset.hpp"
#include "donorbench/error.hpp"
#include "donorbench/pipeline.hpp"

namespace donorbench {

double accuracy(std::span<const int> predicted, std::span<const int> actual);

// Left-to-right sum divided by the count.
double mean(std::span<const double> values);

// k disjoint folds covering 0..n-1; sizes differ by at most one.
struct FoldPlan {
    std::size_t n = 0;
    std::size_t k = 0;
    bool shuffled = false;
    std::uint64_t seed = 0;
    std::vector<std::vector<std::size_t>> folds;

    // Every index not in fold f, ascending.
    std::vector<std::size_t> training_indices(std::size_t f) const;

    bool operator==(const FoldPlan&) const = default;
};

// Contiguous folds (first n mod k folds one larger); with shuffle, a seeded
// permutation is applied before chunking.
FoldPlan kfold_plan(std::size_t n, std::size_t k, bool shuffle = false, std::uint64_t seed = 0);

struct CVReport {
    PipelineSpec pipeline;
    std::vector<double> fold_accuracies;
    std::vector<double> fold_seconds;
    double mean_accuracy = 0.0;
};

class FoldError : public Error {
public:
    FoldError(std::size_t fold, const std::string& message)
        : Error("fold " + std::to_string(fold) + ": " + message), fold_(fold)
    {
    }
    std::size_t fold() const noexcept { return fold_; }

private:
    std::size_t fold_;
};

struct CvOptions {
    // Worker threads for fold evaluation; 0 picks the hardware concurrency.
    unsigned threads = 1;
};

// Seed handed to the classifier when fitting fold f.
std::uint64_t fold_seed(std::uint64_t seed, std::size_t fold) noexcept;

// Fits the pipeline on every fold except f. Only training rows are read.
FittedPipeline fit_fold(const PipelineSpec& pipeline, const Dataset& ds, const FoldPlan& plan, std::size_t fold,
                        std::uint64_t seed);

CVReport cross_validate(const PipelineSpec& pipeline, const Dataset& ds, const FoldPlan& plan, std::uint64_t seed,
                        const CvOptions& options = {});

}  // namespace donorbench
