#include "donorbench/pipeline.hpp"

namespace donorbench {

std::string PipelineSpec::encode() const
{
    return to_string(preprocessor) + "|" + classifier.encode();
}

PipelineSpec default_pipeline(ClassifierKind kind)
{
    return PipelineSpec{ScalerKind::none, ClassifierSpec::defaults(kind)};
}

FittedPipeline fit_pipeline(const PipelineSpec& spec, const Matrix& X, std::span<const int> y, std::uint64_t seed)
{
    FittedPipeline out{fit_scaler(spec.preprocessor, X), {}};
    out.model = fit(spec.classifier, transform(out.scaler, X), y, seed);
    return out;
}

std::vector<int> predict(const FittedPipeline& fitted, const Matrix& X)
{
    return predict(fitted.model, transform(fitted.scaler, X));
}

}  // namespace donorbench
