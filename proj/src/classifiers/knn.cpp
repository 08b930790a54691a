#include "donorbench/classifiers.hpp"
#include "training_checks.hpp"

namespace donorbench {

KnnModel fit_knn(const Matrix& X, std::span<const int> y, const KnnParams& params)
{
    detail::check_training_set(X, y, "knn");
    if (params.k < 1 || params.p < 1) {
        throw InvalidArgument("knn: k and p must be >= 1");
    }
    if (X.rows() < static_cast<std::size_t>(params.k)) {
        throw InvalidArgument("knn: " + std::to_string(X.rows()) + " training samples is fewer than k=" +
                              std::to_string(params.k));
    }
    return KnnModel{X, std::vector<int>(y.begin(), y.end()), params.k, params.p};
}

}  // namespace donorbench
