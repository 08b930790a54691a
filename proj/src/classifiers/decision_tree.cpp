#include <algorithm>
#include <cmath>
#include <numeric>

#include "donorbench/classifiers.hpp"
#include "training_checks.hpp"

namespace donorbench {

double gini_impurity(std::size_t count0, std::size_t count1)
{
    const std::size_t total = count0 + count1;
    if (total == 0) {
        throw InvalidArgument("gini_impurity: zero total count");
    }
    const double p0 = static_cast<double>(count0) / static_cast<double>(total);
    const double p1 = static_cast<double>(count1) / static_cast<double>(total);
    return 1.0 - (p0 * p0 + p1 * p1);
}

std::size_t DecisionTreeModel::depth() const
{
    if (nodes.empty()) {
        return 0;
    }
    std::size_t best = 0;
    std::vector<std::pair<std::int32_t, std::size_t>> stack{{0, 0}};
    while (!stack.empty()) {
        auto [id, d] = stack.back();
        stack.pop_back();
        const auto& node = nodes[static_cast<std::size_t>(id)];
        best = std::max(best, d);
        if (!node.is_leaf) {
            stack.emplace_back(node.left, d + 1);
            stack.emplace_back(node.right, d + 1);
        }
    }
    return best;
}

std::size_t DecisionTreeModel::leaf_count() const
{
    return static_cast<std::size_t>(std::count_if(nodes.begin(), nodes.end(), [](const TreeNode& n) { return n.is_leaf; }));
}

namespace {

struct SplitChoice {
    bool found = false;
    std::size_t feature = 0;
    double threshold = 0.0;
    double gain = 0.0;
};

class TreeBuilder {
public:
    TreeBuilder(const Matrix& X, std::span<const int> y, const TreeParams& params)
        : X_(X), y_(y), params_(params)
    {
    }

    DecisionTreeModel build()
    {
        std::vector<std::size_t> all(X_.rows());
        std::iota(all.begin(), all.end(), std::size_t{0});
        model_.n_features = X_.cols();
        grow(all, 0);
        return std::move(model_);
    }

private:
    std::int32_t grow(std::vector<std::size_t>& idx, std::size_t depth)
    {
        const auto id = static_cast<std::int32_t>(model_.nodes.size());
        model_.nodes.emplace_back();

        TreeNode node;
        for (auto i : idx) {
            (y_[i] == 1 ? node.count1 : node.count0) += 1;
        }
        node.label = node.count1 > node.count0 ? 1 : 0;

        const bool pure = node.count0 == 0 || node.count1 == 0;
        const bool too_small = idx.size() < static_cast<std::size_t>(params_.min_samples_split);
        const bool at_depth = params_.max_depth && depth >= static_cast<std::size_t>(*params_.max_depth);
        SplitChoice split;
        if (!pure && !too_small && !at_depth) {
            split = best_split(idx, node.count0, node.count1);
        }
        if (!split.found) {
            model_.nodes[static_cast<std::size_t>(id)] = node;
            return id;
        }

        std::vector<std::size_t> left;
        std::vector<std::size_t> right;
        for (auto i : idx) {
            (X_(i, split.feature) <= split.threshold ? left : right).push_back(i);
        }
        idx.clear();
        idx.shrink_to_fit();

        node.is_leaf = false;
        node.feature = split.feature;
        node.threshold = split.threshold;
        node.left = grow(left, depth + 1);
        node.right = grow(right, depth + 1);
        model_.nodes[static_cast<std::size_t>(id)] = node;
        return id;
    }

    // Exhaustive CART search: every feature, every midpoint between
    // consecutive distinct values. The first strictly best candidate wins,
    // so ties go to the lower feature index and then the lower threshold.
    SplitChoice best_split(const std::vector<std::size_t>& idx, std::size_t count0, std::size_t count1)
    {
        const std::size_t n = idx.size();
        const auto min_leaf = static_cast<std::size_t>(params_.min_samples_leaf);
        const double parent = gini_impurity(count0, count1);
        const double total = static_cast<double>(n);

        SplitChoice best;
        std::vector<std::size_t> order(idx);
        for (std::size_t f = 0; f < X_.cols(); ++f) {
            std::stable_sort(order.begin(), order.end(),
                             [&](std::size_t a, std::size_t b) { return X_(a, f) < X_(b, f); });
            std::size_t left0 = 0;
            std::size_t left1 = 0;
            for (std::size_t t = 1; t < n; ++t) {
                (y_[order[t - 1]] == 1 ? left1 : left0) += 1;
                const double lo = X_(order[t - 1], f);
                const double hi = X_(order[t], f);
                if (!(lo < hi) || t < min_leaf || n - t < min_leaf) {
                    continue;
                }
                const std::size_t right0 = count0 - left0;
                const std::size_t right1 = count1 - left1;
                const double child = (static_cast<double>(t) * gini_impurity(left0, left1) +
                                      static_cast<double>(n - t) * gini_impurity(right0, right1)) /
                                     total;
                const double gain = parent - child;
                if (!best.found || gain > best.gain) {
                    double mid = lo + (hi - lo) / 2.0;
                    if (!(mid < hi)) {
                        mid = lo;
                    }
                    best = {true, f, mid, gain};
                }
            }
        }
        return best;
    }

    const Matrix& X_;
    std::span<const int> y_;
    TreeParams params_;
    DecisionTreeModel model_;
};

}  // namespace

DecisionTreeModel fit_decision_tree(const Matrix& X, std::span<const int> y, const TreeParams& params)
{
    detail::check_training_set(X, y, "decision_tree");
    if (params.min_samples_split < 2 || params.min_samples_leaf < 1 || (params.max_depth && *params.max_depth < 1)) {
        throw InvalidArgument("decision_tree: min_samples_split >= 2, min_samples_leaf >= 1, max_depth >= 1 required");
    }
    return TreeBuilder(X, y, params).build();
}

}  // namespace donorbench
