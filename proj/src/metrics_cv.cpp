#include "donorbench/metrics_cv.hpp"

#include <chrono>
#include <numeric>

#include "donorbench/rng.hpp"
#include "parallel.hpp"

namespace donorbench {

double accuracy(std::span<const int> predicted, std::span<const int> actual)
{
    if (predicted.size() != actual.size()) {
        throw InvalidArgument("accuracy: length mismatch (" + std::to_string(predicted.size()) + " vs " +
                              std::to_string(actual.size()) + ")");
    }
    if (predicted.empty()) {
        throw InvalidArgument("accuracy: empty label sequences");
    }
    std::size_t matches = 0;
    for (std::size_t i = 0; i < predicted.size(); ++i) {
        matches += predicted[i] == actual[i] ? 1 : 0;
    }
    return static_cast<double>(matches) / static_cast<double>(predicted.size());
}

double mean(std::span<const double> values)
{
    if (values.empty()) {
        throw InvalidArgument("mean: empty sequence");
    }
    return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
}

std::vector<std::size_t> FoldPlan::training_indices(std::size_t f) const
{
    std::vector<bool> held(n, false);
    for (auto i : folds.at(f)) {
        held[i] = true;
    }
    std::vector<std::size_t> out;
    out.reserve(n - folds[f].size());
    for (std::size_t i = 0; i < n; ++i) {
        if (!held[i]) {
            out.push_back(i);
        }
    }
    return out;
}

FoldPlan kfold_plan(std::size_t n, std::size_t k, bool shuffle, std::uint64_t seed)
{
    if (k < 2) {
        throw InvalidArgument("kfold_plan: k must be at least 2");
    }
    if (k > n) {
        throw InvalidArgument("kfold_plan: k=" + std::to_string(k) + " exceeds n=" + std::to_string(n));
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    if (shuffle) {
        Rng rng(seed);
        rng.shuffle(std::span<std::size_t>(order));
    }

    FoldPlan plan{n, k, shuffle, seed, {}};
    const std::size_t base = n / k;
    const std::size_t extra = n % k;
    std::size_t pos = 0;
    for (std::size_t f = 0; f < k; ++f) {
        const std::size_t size = base + (f < extra ? 1 : 0);
        plan.folds.emplace_back(order.begin() + static_cast<std::ptrdiff_t>(pos),
                                order.begin() + static_cast<std::ptrdiff_t>(pos + size));
        pos += size;
    }
    return plan;
}

std::uint64_t fold_seed(std::uint64_t seed, std::size_t fold) noexcept
{
    return derive_seed(seed, fold);
}

namespace {

void check_plan(const Dataset& ds, const FoldPlan& plan)
{
    if (plan.n != ds.n_samples() || plan.folds.size() != plan.k) {
        throw InvalidArgument("cross_validate: plan built for n=" + std::to_string(plan.n) + " but dataset has " +
                              std::to_string(ds.n_samples()) + " samples");
    }
}

}  // namespace

FittedPipeline fit_fold(const PipelineSpec& pipeline, const Dataset& ds, const FoldPlan& plan, std::size_t fold,
                        std::uint64_t seed)
{
    check_plan(ds, plan);
    const auto train_idx = plan.training_indices(fold);
    const Dataset train = ds.subset(train_idx);
    return fit_pipeline(pipeline, train.features, train.labels, fold_seed(seed, fold));
}

CVReport cross_validate(const PipelineSpec& pipeline, const Dataset& ds, const FoldPlan& plan, std::uint64_t seed,
                        const CvOptions& options)
{
    check_plan(ds, plan);
    pipeline.classifier.validate();

    CVReport report;
    report.pipeline = pipeline;
    report.fold_accuracies.assign(plan.k, 0.0);
    report.fold_seconds.assign(plan.k, 0.0);

    detail::parallel_for(plan.k, options.threads, [&](std::size_t f) {
        const auto start = std::chrono::steady_clock::now();
        try {
            const auto fitted = fit_fold(pipeline, ds, plan, f, seed);
            const Dataset test = ds.subset(plan.folds[f]);
            report.fold_accuracies[f] = accuracy(predict(fitted, test.features), test.labels);
        } catch (const FoldError&) {
            throw;
        } catch (const std::exception& e) {
            throw FoldError(f, e.what());
        }
        report.fold_seconds[f] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    });

    report.mean_accuracy = mean(report.fold_accuracies);
    return report;
}

}  // namespace donorbench
