#include <cmath>
#include <limits>

#include "donorbench/classifiers.hpp"
#include "training_checks.hpp"

namespace donorbench {

BernoulliNbModel fit_bernoulli_nb(const Matrix& X, std::span<const int> y, const BernoulliNbParams& params)
{
    detail::check_training_set(X, y, "bernoulli_nb");
    if (!(params.alpha > 0.0) || !std::isfinite(params.alpha)) {
        throw InvalidArgument("bernoulli_nb: alpha must be a positive finite number");
    }

    const std::size_t d = X.cols();
    std::array<double, 2> class_count{};
    std::array<std::vector<double>, 2> ones{std::vector<double>(d, 0.0), std::vector<double>(d, 0.0)};
    for (std::size_t i = 0; i < X.rows(); ++i) {
        const auto c = static_cast<std::size_t>(y[i]);
        class_count[c] += 1.0;
        for (std::size_t j = 0; j < d; ++j) {
            if (X(i, j) > params.binarize) {
                ones[c][j] += 1.0;
            }
        }
    }

    BernoulliNbModel model;
    model.binarize = params.binarize;
    model.n_features = d;
    const double n = static_cast<double>(X.rows());
    for (std::size_t c = 0; c < 2; ++c) {
        // An absent class gets log prior -inf and can never be predicted.
        model.log_prior[c] = class_count[c] > 0.0 ? std::log(class_count[c] / n)
                                                  : -std::numeric_limits<double>::infinity();
        model.log_p[c].resize(d);
        model.log_not_p[c].resize(d);
        const double denom = class_count[c] + 2.0 * params.alpha;
        for (std::size_t j = 0; j < d; ++j) {
            const double on = ones[c][j] + params.alpha;
            const double off = class_count[c] - ones[c][j] + params.alpha;
            model.log_p[c][j] = std::log(on) - std::log(denom);
            model.log_not_p[c][j] = std::log(off) - std::log(denom);
        }
    }
    return model;
}

std::array<double, 2> log_joint(const BernoulliNbModel& model, std::span<const double> x)
{
    detail::check_query(model.n_features, x.size(), "bernoulli_nb");
    std::array<double, 2> out = model.log_prior;
    for (std::size_t c = 0; c < 2; ++c) {
        for (std::size_t j = 0; j < x.size(); ++j) {
            out[c] += x[j] > model.binarize ? model.log_p[c][j] : model.log_not_p[c][j];
        }
    }
    return out;
}

}  // namespace donorbench
