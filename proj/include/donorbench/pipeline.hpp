#pragma once

#include <cstdint>
#include <string>

#include "donorbench/classifiers.hpp"
#include "donorbench/preprocess.hpp"

namespace donorbench {

// Genome: an optional scaler (none = absent) followed by one classifier.
struct PipelineSpec {
    ScalerKind preprocessor = ScalerKind::none;
    ClassifierSpec classifier;

    // Number of steps: 1 for a bare classifier, 2 with a scaler.
    std::size_t size() const noexcept { return preprocessor == ScalerKind::none ? 1 : 2; }

    // Canonical text form used for caching and lexicographic tie-breaks,
    // e.g. "minmax|knn(k=5,p=2)".
    std::string encode() const;

    bool operator==(const PipelineSpec&) const = default;
};

PipelineSpec default_pipeline(ClassifierKind kind);

struct FittedPipeline {
    ScalerParams scaler;
    TrainedModel model;

    bool operator==(const FittedPipeline&) const = default;
};

FittedPipeline fit_pipeline(const PipelineSpec& spec, const Matrix& X, std::span<const int> y, std::uint64_t seed);

std::vector<int> predict(const FittedPipeline& fitted, const Matrix& X);

}  // namespace donorbench
