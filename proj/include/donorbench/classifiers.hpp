#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "donorbench/classifier_spec.hpp"
#include "donorbench/matrix.hpp"

namespace donorbench {

// All learners share one tie rule: a decision value of exactly 0, a tied
// vote, or a tied majority predicts class 0.

struct PerceptronModel {
    std::vector<double> weights;
    double bias = 0.0;

    bool operator==(const PerceptronModel&) const = default;
};

struct KnnModel {
    Matrix train_X;
    std::vector<int> train_y;
    int k = 5;
    int p = 2;

    bool operator==(const KnnModel&) const = default;
};

struct TreeNode {
    bool is_leaf = true;
    int label = 0;
    std::size_t count0 = 0;
    std::size_t count1 = 0;
    std::size_t feature = 0;
    double threshold = 0.0;  // rows with x[feature] <= threshold go left
    std::int32_t left = -1;
    std::int32_t right = -1;

    bool operator==(const TreeNode&) const = default;
};

struct DecisionTreeModel {
    std::vector<TreeNode> nodes;  // nodes[0] is the root
    std::size_t n_features = 0;

    std::size_t depth() const;
    std::size_t leaf_count() const;

    bool operator==(const DecisionTreeModel&) const = default;
};

struct BernoulliNbModel {
    double binarize = 0.0;
    std::size_t n_features = 0;
    std::array<double, 2> log_prior{};
    std::array<std::vector<double>, 2> log_p;      // log P(x_j = 1 | c)
    std::array<std::vector<double>, 2> log_not_p;  // log P(x_j = 0 | c)

    bool operator==(const BernoulliNbModel&) const = default;
};

struct SvcModel {
    Matrix support_vectors;
    std::vector<double> dual_coef;  // alpha_i * y_i for each support vector
    double bias = 0.0;
    double gamma = 0.0;
    double C = 1.0;
    std::vector<double> alphas;     // every training alpha, in training order
    bool converged = false;
    std::size_t iterations = 0;

    bool operator==(const SvcModel&) const = default;
};

struct LinearSvcModel {
    std::vector<double> weights;
    double bias = 0.0;
    std::vector<double> objective_trace;  // objective after each accepted step, starting at w = 0
    bool converged = false;
    std::size_t iterations = 0;

    bool operator==(const LinearSvcModel&) const = default;
};

using TrainedModel =
    std::variant<PerceptronModel, KnnModel, DecisionTreeModel, BernoulliNbModel, SvcModel, LinearSvcModel>;

PerceptronModel fit_perceptron(const Matrix& X, std::span<const int> y, const PerceptronParams& params,
                               std::uint64_t seed);

KnnModel fit_knn(const Matrix& X, std::span<const int> y, const KnnParams& params);

double gini_impurity(std::size_t count0, std::size_t count1);

DecisionTreeModel fit_decision_tree(const Matrix& X, std::span<const int> y, const TreeParams& params);

BernoulliNbModel fit_bernoulli_nb(const Matrix& X, std::span<const int> y, const BernoulliNbParams& params);

// Per-class joint log-likelihoods (log prior + feature terms) for one row.
std::array<double, 2> log_joint(const BernoulliNbModel& model, std::span<const double> x);

double rbf_kernel(std::span<const double> x, std::span<const double> z, double gamma);

SvcModel fit_svc_rbf(const Matrix& X, std::span<const int> y, const SvcParams& params);

double decision_value(const SvcModel& model, std::span<const double> x);

// Squared-hinge primal: 0.5 |w|^2 + C * sum max(0, 1 - s_i (w.x_i + b))^2 with
// s_i in {-1, +1}. The bias is not regularized.
double squared_hinge_objective(const Matrix& X, std::span<const double> signs, std::span<const double> w, double b,
                               double C);

// Gradient of squared_hinge_objective; the last entry is d/db.
std::vector<double> squared_hinge_gradient(const Matrix& X, std::span<const double> signs,
                                           std::span<const double> w, double b, double C);

LinearSvcModel fit_linear_svc(const Matrix& X, std::span<const int> y, const LinearSvcParams& params);

// Dispatches on spec.kind(). seed feeds learners with randomized steps.
TrainedModel fit(const ClassifierSpec& spec, const Matrix& X, std::span<const int> y, std::uint64_t seed);

std::vector<int> predict(const TrainedModel& model, const Matrix& X);
int predict_one(const TrainedModel& model, std::span<const double> x);

std::size_t n_features(const TrainedModel& model);

}  // namespace donorbench
