#include <numeric>

#include "donorbench/classifiers.hpp"
#include "donorbench/rng.hpp"
#include "training_checks.hpp"

namespace donorbench {

PerceptronModel fit_perceptron(const Matrix& X, std::span<const int> y, const PerceptronParams& params,
                               std::uint64_t seed)
{
    detail::check_training_set(X, y, "perceptron");
    if (params.epochs < 0 || !(params.learning_rate > 0.0)) {
        throw InvalidArgument("perceptron: epochs must be >= 0 and learning_rate > 0");
    }

    PerceptronModel model;
    model.weights.assign(X.cols(), 0.0);

    std::vector<std::size_t> order(X.rows());
    std::iota(order.begin(), order.end(), std::size_t{0});
    Rng rng(seed);

    for (int epoch = 0; epoch < params.epochs; ++epoch) {
        if (params.shuffle) {
            rng.shuffle(std::span<std::size_t>(order));
        }
        for (auto i : order) {
            const auto x = X.row(i);
            const double target = y[i] == 1 ? 1.0 : -1.0;
            double score = model.bias;
            for (std::size_t j = 0; j < x.size(); ++j) {
                score += model.weights[j] * x[j];
            }
            // A zero score counts as a mistake for either class.
            if (target * score <= 0.0) {
                const double step = params.learning_rate * target;
                for (std::size_t j = 0; j < x.size(); ++j) {
                    model.weights[j] += step * x[j];
                }
                model.bias += step;
            }
        }
    }
    return model;
}

}  // namespace donorbench
