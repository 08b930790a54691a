#include <algorithm>
#include <cmath>
#include <numeric>

#include "donorbench/classifiers.hpp"
#include "training_checks.hpp"

namespace donorbench {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Monotone in the Minkowski distance; the p-th root is skipped.
double minkowski_power(std::span<const double> a, std::span<const double> b, int p)
{
    double s = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        const double diff = std::abs(a[j] - b[j]);
        switch (p) {
        case 1: s += diff; break;
        case 2: s += diff * diff; break;
        default: s += std::pow(diff, p); break;
        }
    }
    return s;
}

int knn_vote(const KnnModel& m, std::span<const double> x)
{
    const std::size_t n = m.train_X.rows();
    std::vector<std::pair<double, std::size_t>> dist(n);
    for (std::size_t i = 0; i < n; ++i) {
        dist[i] = {minkowski_power(m.train_X.row(i), x, m.p), i};
    }
    const auto k = static_cast<std::size_t>(m.k);
    std::partial_sort(dist.begin(), dist.begin() + static_cast<std::ptrdiff_t>(k), dist.end());
    std::size_t ones = 0;
    for (std::size_t r = 0; r < k; ++r) {
        ones += m.train_y[dist[r].second] == 1 ? 1 : 0;
    }
    return 2 * ones > k ? 1 : 0;
}

int tree_predict(const DecisionTreeModel& m, std::span<const double> x)
{
    std::size_t id = 0;
    while (!m.nodes[id].is_leaf) {
        const auto& node = m.nodes[id];
        id = static_cast<std::size_t>(x[node.feature] <= node.threshold ? node.left : node.right);
    }
    return m.nodes[id].label;
}

}  // namespace

std::size_t n_features(const TrainedModel& model)
{
    return std::visit(overloaded{
                          [](const PerceptronModel& m) { return m.weights.size(); },
                          [](const KnnModel& m) { return m.train_X.cols(); },
                          [](const DecisionTreeModel& m) { return m.n_features; },
                          [](const BernoulliNbModel& m) { return m.n_features; },
                          [](const SvcModel& m) { return m.support_vectors.cols(); },
                          [](const LinearSvcModel& m) { return m.weights.size(); },
                      },
                      model);
}

int predict_one(const TrainedModel& model, std::span<const double> x)
{
    detail::check_query(n_features(model), x.size(), "predict");
    return std::visit(overloaded{
                          [&](const PerceptronModel& m) {
                              double s = m.bias;
                              for (std::size_t j = 0; j < x.size(); ++j) {
                                  s += m.weights[j] * x[j];
                              }
                              return s > 0.0 ? 1 : 0;
                          },
                          [&](const KnnModel& m) { return knn_vote(m, x); },
                          [&](const DecisionTreeModel& m) { return tree_predict(m, x); },
                          [&](const BernoulliNbModel& m) {
                              const auto lj = log_joint(m, x);
                              return lj[1] > lj[0] ? 1 : 0;
                          },
                          [&](const SvcModel& m) { return decision_value(m, x) > 0.0 ? 1 : 0; },
                          [&](const LinearSvcModel& m) {
                              double s = m.bias;
                              for (std::size_t j = 0; j < x.size(); ++j) {
                                  s += m.weights[j] * x[j];
                              }
                              return s > 0.0 ? 1 : 0;
                          },
                      },
                      model);
}

std::vector<int> predict(const TrainedModel& model, const Matrix& X)
{
    detail::check_query(n_features(model), X.cols(), "predict");
    std::vector<int> out(X.rows());
    for (std::size_t i = 0; i < X.rows(); ++i) {
        out[i] = predict_one(model, X.row(i));
    }
    return out;
}

TrainedModel fit(const ClassifierSpec& spec, const Matrix& X, std::span<const int> y, std::uint64_t seed)
{
    spec.validate();
    switch (spec.kind()) {
    case ClassifierKind::perceptron: return fit_perceptron(X, y, perceptron_params(spec), seed);
    case ClassifierKind::knn: return fit_knn(X, y, knn_params(spec));
    case ClassifierKind::decision_tree: return fit_decision_tree(X, y, tree_params(spec));
    case ClassifierKind::bernoulli_nb: return fit_bernoulli_nb(X, y, bernoulli_nb_params(spec));
    case ClassifierKind::svc_rbf: return fit_svc_rbf(X, y, svc_params(spec));
    case ClassifierKind::linear_svc: return fit_linear_svc(X, y, linear_svc_params(spec));
    }
    throw InvalidArgument("fit: unknown classifier kind");
}

}  // namespace donorbench
