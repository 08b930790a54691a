#include <cmath>

#include "donorbench/classifiers.hpp"
#include "training_checks.hpp"

namespace donorbench {

namespace {

double margin_score(std::span<const double> x, std::span<const double> w, double b)
{
    double s = b;
    for (std::size_t j = 0; j < x.size(); ++j) {
        s += w[j] * x[j];
    }
    return s;
}

void check_shapes(const Matrix& X, std::span<const double> signs, std::span<const double> w)
{
    if (signs.size() != X.rows() || w.size() != X.cols()) {
        throw InvalidArgument("squared hinge: shape mismatch");
    }
}

}  // namespace

double squared_hinge_objective(const Matrix& X, std::span<const double> signs, std::span<const double> w, double b,
                               double C)
{
    check_shapes(X, signs, w);
    double reg = 0.0;
    for (double v : w) {
        reg += v * v;
    }
    double loss = 0.0;
    for (std::size_t i = 0; i < X.rows(); ++i) {
        const double slack = 1.0 - signs[i] * margin_score(X.row(i), w, b);
        if (slack > 0.0) {
            loss += slack * slack;
        }
    }
    return 0.5 * reg + C * loss;
}

std::vector<double> squared_hinge_gradient(const Matrix& X, std::span<const double> signs,
                                           std::span<const double> w, double b, double C)
{
    check_shapes(X, signs, w);
    const std::size_t d = X.cols();
    std::vector<double> g(d + 1, 0.0);
    for (std::size_t j = 0; j < d; ++j) {
        g[j] = w[j];
    }
    for (std::size_t i = 0; i < X.rows(); ++i) {
        const auto x = X.row(i);
        const double slack = 1.0 - signs[i] * margin_score(x, w, b);
        if (slack > 0.0) {
            const double coef = -2.0 * C * slack * signs[i];
            for (std::size_t j = 0; j < d; ++j) {
                g[j] += coef * x[j];
            }
            g[d] += coef;
        }
    }
    return g;
}

// Full-batch gradient descent with Armijo backtracking. The trial step
// starts at twice the last accepted step so well-conditioned problems
// speed up while ill-conditioned ones still make monotone progress.
LinearSvcModel fit_linear_svc(const Matrix& X, std::span<const int> y, const LinearSvcParams& params)
{
    detail::check_training_set(X, y, "linear_svc");
    detail::check_both_classes(y, "linear_svc");
    if (!(params.C > 0.0) || !(params.tol > 0.0) || params.max_iter < 1) {
        throw InvalidArgument("linear_svc: C > 0, tol > 0, max_iter >= 1 required");
    }

    constexpr double armijo = 1e-4;
    constexpr double min_step = 1e-30;

    const std::size_t d = X.cols();
    std::vector<double> signs(X.rows());
    for (std::size_t i = 0; i < X.rows(); ++i) {
        signs[i] = y[i] == 1 ? 1.0 : -1.0;
    }

    LinearSvcModel model;
    model.weights.assign(d, 0.0);
    double f = squared_hinge_objective(X, signs, model.weights, model.bias, params.C);
    model.objective_trace.push_back(f);

    double step = 1.0;
    std::vector<double> trial_w(d);
    for (int iter = 0; iter < params.max_iter; ++iter) {
        model.iterations = static_cast<std::size_t>(iter) + 1;
        const auto g = squared_hinge_gradient(X, signs, model.weights, model.bias, params.C);
        double g2 = 0.0;
        for (double v : g) {
            g2 += v * v;
        }
        if (g2 == 0.0) {
            model.converged = true;
            break;
        }

        step *= 2.0;
        double trial_b = 0.0;
        double trial_f = 0.0;
        bool accepted = false;
        while (step >= min_step) {
            for (std::size_t j = 0; j < d; ++j) {
                trial_w[j] = model.weights[j] - step * g[j];
            }
            trial_b = model.bias - step * g[d];
            trial_f = squared_hinge_objective(X, signs, trial_w, trial_b, params.C);
            if (trial_f <= f - armijo * step * g2) {
                accepted = true;
                break;
            }
            step /= 2.0;
        }
        if (!accepted) {
            // No representable descent step left: numerically stationary.
            model.converged = true;
            break;
        }

        const double decrease = f - trial_f;
        model.weights = trial_w;
        model.bias = trial_b;
        f = trial_f;
        model.objective_trace.push_back(f);
        if (decrease < params.tol) {
            model.converged = true;
            break;
        }
    }
    return model;
}

}  // namespace donorbench
