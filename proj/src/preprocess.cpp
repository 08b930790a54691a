#include "donorbench/preprocess.hpp"

#include <algorithm>
#include <cmath>

#include "donorbench/error.hpp"

namespace donorbench {

std::string to_string(ScalerKind kind)
{
    switch (kind) {
    case ScalerKind::none: return "none";
    case ScalerKind::minmax: return "minmax";
    case ScalerKind::standard: return "standard";
    }
    return "none";
}

std::optional<ScalerKind> scaler_kind_from_string(std::string_view name)
{
    if (name == "none") return ScalerKind::none;
    if (name == "minmax") return ScalerKind::minmax;
    if (name == "standard") return ScalerKind::standard;
    return std::nullopt;
}

ScalerParams fit_scaler(ScalerKind kind, const Matrix& X)
{
    if (X.rows() == 0) {
        throw InvalidArgument("fit_scaler: empty matrix");
    }
    const std::size_t n = X.rows();
    const std::size_t d = X.cols();

    ScalerParams p;
    p.kind = kind;
    p.n_features = d;
    p.offset.assign(d, 0.0);
    p.scale.assign(d, 1.0);
    p.constant.assign(d, false);

    switch (kind) {
    case ScalerKind::none:
        break;
    case ScalerKind::minmax:
        for (std::size_t j = 0; j < d; ++j) {
            double lo = X(0, j);
            double hi = X(0, j);
            for (std::size_t i = 1; i < n; ++i) {
                lo = std::min(lo, X(i, j));
                hi = std::max(hi, X(i, j));
            }
            p.offset[j] = lo;
            p.scale[j] = hi - lo;
            p.constant[j] = hi == lo;
        }
        break;
    case ScalerKind::standard:
        for (std::size_t j = 0; j < d; ++j) {
            double sum = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                sum += X(i, j);
            }
            const double mean = sum / static_cast<double>(n);
            double ss = 0.0;
            bool all_equal = true;
            for (std::size_t i = 0; i < n; ++i) {
                const double dev = X(i, j) - mean;
                ss += dev * dev;
                all_equal = all_equal && X(i, j) == X(0, j);
            }
            p.offset[j] = mean;
            p.scale[j] = all_equal ? 0.0 : std::sqrt(ss / static_cast<double>(n));
            p.constant[j] = all_equal || p.scale[j] == 0.0;
        }
        break;
    }
    return p;
}

Matrix transform(const ScalerParams& params, const Matrix& X)
{
    if (X.cols() != params.n_features) {
        throw InvalidArgument("transform: scaler fitted on " + std::to_string(params.n_features) +
                              " features, got " + std::to_string(X.cols()));
    }
    if (params.kind == ScalerKind::none) {
        return X;
    }
    Matrix out(X.rows(), X.cols());
    for (std::size_t i = 0; i < X.rows(); ++i) {
        for (std::size_t j = 0; j < X.cols(); ++j) {
            out(i, j) = params.constant[j] ? 0.0 : (X(i, j) - params.offset[j]) / params.scale[j];
        }
    }
    return out;
}

}  // namespace donorbench
