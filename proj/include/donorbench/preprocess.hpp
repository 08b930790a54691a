#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "donorbench/matrix.hpp"

namespace donorbench {

enum class ScalerKind { none, minmax, standard };

std::string to_string(ScalerKind kind);
std::optional<ScalerKind> scaler_kind_from_string(std::string_view name);

// Per-feature statistics learned on training rows only.
//   minmax:   offset = min,  scale = max - min
//   standard: offset = mean, scale = population stddev
struct ScalerParams {
    ScalerKind kind = ScalerKind::none;
    std::size_t n_features = 0;
    std::vector<double> offset;
    std::vector<double> scale;
    std::vector<bool> constant;  // zero spread; such columns transform to 0

    bool operator==(const ScalerParams&) const = default;
};

ScalerParams fit_scaler(ScalerKind kind, const Matrix& X);

// Applies the fitted affine map. Test rows may land outside [0, 1] for minmax.
Matrix transform(const ScalerParams& params, const Matrix& X);

}  // namespace donorbench
