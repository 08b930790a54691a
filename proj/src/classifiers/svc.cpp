#include <cmath>
#include <limits>

#include "donorbench/classifiers.hpp"
#include "training_checks.hpp"

namespace donorbench {

double rbf_kernel(std::span<const double> x, std::span<const double> z, double gamma)
{
    if (x.size() != z.size()) {
        throw InvalidArgument("rbf_kernel: dimension mismatch (" + std::to_string(x.size()) + " vs " +
                              std::to_string(z.size()) + ")");
    }
    if (!(gamma >= 0.0)) {
        throw InvalidArgument("rbf_kernel: gamma must be >= 0");
    }
    double sq = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
        const double diff = x[j] - z[j];
        sq += diff * diff;
    }
    return std::exp(-gamma * sq);
}

// Soft-margin dual solved by SMO with maximal-violating-pair selection:
// the first index maximizes the KKT violation, the second is chosen by the
// second-order gain rule. Each step moves two multipliers along the
// equality constraint and clips to the [0, C] box. Iterates until the
// violation gap falls below tol or the update budget is spent.
SvcModel fit_svc_rbf(const Matrix& X, std::span<const int> y, const SvcParams& params)
{
    detail::check_training_set(X, y, "svc_rbf");
    detail::check_both_classes(y, "svc_rbf");
    if (!(params.C > 0.0) || !(params.tol > 0.0) || params.max_passes < 1 ||
        (params.gamma && !(*params.gamma >= 0.0))) {
        throw InvalidArgument("svc_rbf: C > 0, tol > 0, max_passes >= 1, gamma >= 0 required");
    }

    const std::size_t n = X.rows();
    const double C = params.C;
    const double gamma = params.gamma.value_or(1.0 / static_cast<double>(X.cols()));

    std::vector<double> K(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        K[i * n + i] = 1.0;
        for (std::size_t j = i + 1; j < n; ++j) {
            const double k = rbf_kernel(X.row(i), X.row(j), gamma);
            K[i * n + j] = k;
            K[j * n + i] = k;
        }
    }

    std::vector<double> sign(n);
    for (std::size_t i = 0; i < n; ++i) {
        sign[i] = y[i] == 1 ? 1.0 : -1.0;
    }
    std::vector<double> alpha(n, 0.0);
    // Dual gradient G_i = (Q alpha)_i - 1 with Q_ij = s_i s_j K_ij.
    std::vector<double> grad(n, -1.0);

    auto in_up = [&](std::size_t t) { return sign[t] > 0 ? alpha[t] < C : alpha[t] > 0.0; };
    auto in_low = [&](std::size_t t) { return sign[t] > 0 ? alpha[t] > 0.0 : alpha[t] < C; };
    auto violation = [&](std::size_t t) { return -sign[t] * grad[t]; };

    constexpr double tau = 1e-12;
    const std::size_t budget = static_cast<std::size_t>(params.max_passes) * n;
    const double lowest = -std::numeric_limits<double>::infinity();

    SvcModel model;
    double upper_max = lowest;
    double lower_min = -lowest;
    std::size_t iter = 0;
    for (;; ++iter) {
        upper_max = lowest;
        lower_min = -lowest;
        std::size_t i = n;
        for (std::size_t t = 0; t < n; ++t) {
            if (in_up(t) && violation(t) > upper_max) {
                upper_max = violation(t);
                i = t;
            }
            if (in_low(t)) {
                lower_min = std::min(lower_min, violation(t));
            }
        }
        if (i == n || upper_max - lower_min < params.tol) {
            model.converged = true;
            break;
        }
        if (iter >= budget) {
            break;
        }

        std::size_t j = n;
        double best_gain = -lowest;
        for (std::size_t t = 0; t < n; ++t) {
            if (!in_low(t)) {
                continue;
            }
            const double b = upper_max - violation(t);
            if (b <= 0.0) {
                continue;
            }
            double a = K[i * n + i] + K[t * n + t] - 2.0 * K[i * n + t];
            if (a <= 0.0) {
                a = tau;
            }
            const double gain = -(b * b) / a;
            if (gain < best_gain) {
                best_gain = gain;
                j = t;
            }
        }
        if (j == n) {
            model.converged = true;
            break;
        }

        double curvature = K[i * n + i] + K[j * n + j] - 2.0 * K[i * n + j];
        if (curvature <= 0.0) {
            curvature = tau;
        }
        double step = (violation(i) - violation(j)) / curvature;
        const double bound_i = sign[i] > 0 ? C - alpha[i] : alpha[i];
        const double bound_j = sign[j] > 0 ? alpha[j] : C - alpha[j];
        bool clip_i = false;
        bool clip_j = false;
        if (step >= bound_i) {
            step = bound_i;
            clip_i = true;
        }
        if (step >= bound_j) {
            step = bound_j;
            clip_j = true;
            clip_i = clip_i && bound_i == bound_j;
        }

        alpha[i] = clip_i ? (sign[i] > 0 ? C : 0.0) : alpha[i] + sign[i] * step;
        alpha[j] = clip_j ? (sign[j] > 0 ? 0.0 : C) : alpha[j] - sign[j] * step;
        for (std::size_t k = 0; k < n; ++k) {
            grad[k] += sign[k] * step * (K[k * n + i] - K[k * n + j]);
        }
    }
    model.iterations = iter;

    // Bias: average violation over free multipliers, else the midpoint of
    // the feasible interval.
    double free_sum = 0.0;
    std::size_t free_count = 0;
    for (std::size_t t = 0; t < n; ++t) {
        if (alpha[t] > 0.0 && alpha[t] < C) {
            free_sum += violation(t);
            ++free_count;
        }
    }
    if (free_count > 0) {
        model.bias = free_sum / static_cast<double>(free_count);
    } else if (upper_max == lowest) {
        model.bias = lower_min;
    } else if (lower_min == -lowest) {
        model.bias = upper_max;
    } else {
        model.bias = (upper_max + lower_min) / 2.0;
    }

    model.gamma = gamma;
    model.C = C;
    for (std::size_t t = 0; t < n; ++t) {
        if (alpha[t] > 0.0) {
            model.support_vectors.append_row(X.row(t));
            model.dual_coef.push_back(alpha[t] * sign[t]);
        }
    }
    if (model.support_vectors.cols() == 0) {
        model.support_vectors = Matrix(0, X.cols());
    }
    model.alphas = std::move(alpha);
    return model;
}

double decision_value(const SvcModel& model, std::span<const double> x)
{
    detail::check_query(model.support_vectors.cols(), x.size(), "svc_rbf");
    double f = model.bias;
    for (std::size_t k = 0; k < model.dual_coef.size(); ++k) {
        f += model.dual_coef[k] * rbf_kernel(model.support_vectors.row(k), x, model.gamma);
    }
    return f;
}

}  // namespace donorbench
