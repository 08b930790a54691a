#pragma once

// Reference computations written independently of the library code paths
// they check: brute force, exhaustive search, finite differences.

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "donorbench/classifiers.hpp"

namespace donorbench::testing {

inline int brute_force_knn(const Matrix& X, const std::vector<int>& y, std::span<const double> q, int k, int p)
{
    std::vector<std::pair<double, std::size_t>> dist;
    for (std::size_t i = 0; i < X.rows(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < X.cols(); ++j) {
            s += std::pow(std::abs(X(i, j) - q[j]), p);
        }
        dist.emplace_back(std::pow(s, 1.0 / p), i);
    }
    std::sort(dist.begin(), dist.end());
    int ones = 0;
    for (int t = 0; t < k; ++t) {
        ones += y[dist[static_cast<std::size_t>(t)].second];
    }
    return 2 * ones > k ? 1 : 0;
}

inline double gini(std::size_t a, std::size_t b)
{
    const double n = static_cast<double>(a + b);
    const double pa = static_cast<double>(a) / n;
    const double pb = static_cast<double>(b) / n;
    return 1.0 - pa * pa - pb * pb;
}

// Best impurity decrease over every (feature, midpoint) with both children
// holding at least min_leaf rows; nullopt when no admissible split exists.
inline std::optional<double> best_split_gain(const Matrix& X, const std::vector<int>& y,
                                             const std::vector<std::size_t>& rows, int min_leaf)
{
    std::size_t c1 = 0;
    for (auto r : rows) {
        c1 += static_cast<std::size_t>(y[r]);
    }
    const double parent = gini(rows.size() - c1, c1);
    std::optional<double> best;
    for (std::size_t f = 0; f < X.cols(); ++f) {
        std::set<double> values;
        for (auto r : rows) {
            values.insert(X(r, f));
        }
        for (auto it = values.begin(); std::next(it) != values.end(); ++it) {
            const double thr = (*it + *std::next(it)) / 2.0;
            std::size_t l0 = 0, l1 = 0, r0 = 0, r1 = 0;
            for (auto r : rows) {
                if (X(r, f) <= thr) {
                    (y[r] ? l1 : l0) += 1;
                } else {
                    (y[r] ? r1 : r0) += 1;
                }
            }
            const auto nl = l0 + l1;
            const auto nr = r0 + r1;
            if (nl < static_cast<std::size_t>(min_leaf) || nr < static_cast<std::size_t>(min_leaf)) {
                continue;
            }
            const double child =
                (static_cast<double>(nl) * gini(l0, l1) + static_cast<double>(nr) * gini(r0, r1)) /
                static_cast<double>(rows.size());
            const double gain = parent - child;
            if (!best || gain > *best) {
                best = gain;
            }
        }
    }
    return best;
}

// Walks the fitted tree and checks, at every node, that the chosen split is
// an optimal admissible split for the rows reaching it, and that leaves are
// leaves for a legitimate reason.
inline bool tree_matches_oracle(const DecisionTreeModel& m, const Matrix& X, const std::vector<int>& y,
                                const TreeParams& params)
{
    struct Frame {
        std::int32_t id;
        std::vector<std::size_t> rows;
        std::size_t depth;
    };
    std::vector<std::size_t> all(X.rows());
    for (std::size_t i = 0; i < all.size(); ++i) {
        all[i] = i;
    }
    std::vector<Frame> stack{{0, all, 0}};
    while (!stack.empty()) {
        Frame fr = std::move(stack.back());
        stack.pop_back();
        const auto& node = m.nodes[static_cast<std::size_t>(fr.id)];
        std::size_t c1 = 0;
        for (auto r : fr.rows) {
            c1 += static_cast<std::size_t>(y[r]);
        }
        const std::size_t c0 = fr.rows.size() - c1;
        if (node.count0 != c0 || node.count1 != c1) {
            return false;
        }
        const bool splittable = c0 > 0 && c1 > 0 &&
                                fr.rows.size() >= static_cast<std::size_t>(params.min_samples_split) &&
                                !(params.max_depth && fr.depth >= static_cast<std::size_t>(*params.max_depth));
        const auto best = splittable ? best_split_gain(X, y, fr.rows, params.min_samples_leaf) : std::nullopt;
        if (node.is_leaf) {
            if (best || node.label != (c1 > c0 ? 1 : 0)) {
                return false;
            }
            continue;
        }
        if (!best) {
            return false;
        }
        Frame left{node.left, {}, fr.depth + 1};
        Frame right{node.right, {}, fr.depth + 1};
        std::size_t l0 = 0, l1 = 0, r0 = 0, r1 = 0;
        for (auto r : fr.rows) {
            if (X(r, node.feature) <= node.threshold) {
                left.rows.push_back(r);
                (y[r] ? l1 : l0) += 1;
            } else {
                right.rows.push_back(r);
                (y[r] ? r1 : r0) += 1;
            }
        }
        if (left.rows.size() < static_cast<std::size_t>(params.min_samples_leaf) ||
            right.rows.size() < static_cast<std::size_t>(params.min_samples_leaf)) {
            return false;
        }
        const double gain = gini(c0, c1) - (static_cast<double>(left.rows.size()) * gini(l0, l1) +
                                            static_cast<double>(right.rows.size()) * gini(r0, r1)) /
                                               static_cast<double>(fr.rows.size());
        if (std::abs(gain - *best) > 1e-12) {
            return false;
        }
        stack.push_back(std::move(left));
        stack.push_back(std::move(right));
    }
    return true;
}

inline double dual_objective(const Matrix& X, const std::vector<int>& y, const std::vector<double>& alpha,
                             double gamma)
{
    double linear = 0.0;
    double quad = 0.0;
    for (std::size_t i = 0; i < X.rows(); ++i) {
        linear += alpha[i];
        for (std::size_t j = 0; j < X.rows(); ++j) {
            double sq = 0.0;
            for (std::size_t f = 0; f < X.cols(); ++f) {
                sq += (X(i, f) - X(j, f)) * (X(i, f) - X(j, f));
            }
            const double si = y[i] ? 1.0 : -1.0;
            const double sj = y[j] ? 1.0 : -1.0;
            quad += alpha[i] * alpha[j] * si * sj * std::exp(-gamma * sq);
        }
    }
    return linear - 0.5 * quad;
}

// Grid search over the first three multipliers of a 4-point problem; the
// fourth is fixed by the equality constraint.
inline double grid_search_dual_xor(const Matrix& X, const std::vector<int>& y, double gamma, double C, int steps)
{
    double best = -std::numeric_limits<double>::infinity();
    std::vector<double> a(4);
    const double s3 = y[3] ? 1.0 : -1.0;
    for (int i = 0; i <= steps; ++i) {
        for (int j = 0; j <= steps; ++j) {
            for (int k = 0; k <= steps; ++k) {
                a[0] = C * i / steps;
                a[1] = C * j / steps;
                a[2] = C * k / steps;
                double partial = 0.0;
                for (int t = 0; t < 3; ++t) {
                    partial += a[static_cast<std::size_t>(t)] * (y[static_cast<std::size_t>(t)] ? 1.0 : -1.0);
                }
                a[3] = -partial / s3;
                if (a[3] < -1e-12 || a[3] > C + 1e-12) {
                    continue;
                }
                best = std::max(best, dual_objective(X, y, a, gamma));
            }
        }
    }
    return best;
}

// Maximal KKT violation m(alpha) - M(alpha) of the soft-margin dual,
// recomputed from scratch.
inline double kkt_violation(const SvcModel& m, const Matrix& X, const std::vector<int>& y)
{
    const std::size_t n = X.rows();
    double up = -std::numeric_limits<double>::infinity();
    double low = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        const double si = y[i] ? 1.0 : -1.0;
        double g = -1.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double sj = y[j] ? 1.0 : -1.0;
            g += si * sj * m.alphas[j] * rbf_kernel(X.row(i), X.row(j), m.gamma);
        }
        const double v = -si * g;
        const double a = m.alphas[i];
        const bool in_up = si > 0 ? a < m.C : a > 0.0;
        const bool in_low = si > 0 ? a > 0.0 : a < m.C;
        if (in_up) {
            up = std::max(up, v);
        }
        if (in_low) {
            low = std::min(low, v);
        }
    }
    return std::max(0.0, up - low);
}

inline double signed_alpha_sum(const SvcModel& m, const std::vector<int>& y)
{
    double s = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        s += m.alphas[i] * (y[i] ? 1.0 : -1.0);
    }
    return s;
}

inline double hinge_objective(const Matrix& X, const std::vector<double>& signs, const std::vector<double>& w,
                              double b, double C)
{
    double f = 0.0;
    for (double v : w) {
        f += 0.5 * v * v;
    }
    for (std::size_t i = 0; i < X.rows(); ++i) {
        double score = b;
        for (std::size_t j = 0; j < X.cols(); ++j) {
            score += w[j] * X(i, j);
        }
        const double slack = std::max(0.0, 1.0 - signs[i] * score);
        f += C * slack * slack;
    }
    return f;
}

inline std::vector<double> central_difference_gradient(const Matrix& X, const std::vector<double>& signs,
                                                       std::vector<double> w, double b, double C, double h)
{
    std::vector<double> g(w.size() + 1);
    for (std::size_t j = 0; j < w.size(); ++j) {
        const double keep = w[j];
        w[j] = keep + h;
        const double up = hinge_objective(X, signs, w, b, C);
        w[j] = keep - h;
        const double down = hinge_objective(X, signs, w, b, C);
        w[j] = keep;
        g[j] = (up - down) / (2.0 * h);
    }
    g.back() = (hinge_objective(X, signs, w, b + h, C) - hinge_objective(X, signs, w, b - h, C)) / (2.0 * h);
    return g;
}

inline double relative_error(const std::vector<double>& a, const std::vector<double>& b)
{
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]) / std::max(1.0, std::abs(b[i])));
    }
    return worst;
}

}  // namespace donorbench::testing
