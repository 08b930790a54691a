#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "donorbench/advisor.hpp"
#include "donorbench/report.hpp"

namespace py = pybind11;
using namespace donorbench;

namespace {

Dataset make_dataset(const std::vector<std::vector<double>>& features, const std::vector<int>& labels)
{
    if (features.size() != labels.size()) {
        throw InvalidArgument("features and labels differ in length");
    }
    Dataset ds;
    for (const auto& row : features) {
        ds.features.append_row(row);
    }
    for (int y : labels) {
        if (y != 0 && y != 1) {
            throw InvalidArgument("labels must be 0 or 1");
        }
    }
    ds.labels = labels;
    for (std::size_t j = 0; j < ds.features.cols(); ++j) {
        ds.feature_names.push_back("x" + std::to_string(j));
    }
    return ds;
}

Matrix make_matrix(const std::vector<std::vector<double>>& rows)
{
    Matrix m;
    for (const auto& row : rows) {
        m.append_row(row);
    }
    return m;
}

std::string dump(const Json& j)
{
    return canonical_dump(j, -1);
}

py::dict load_csv_py(const std::string& path, bool has_header)
{
    const auto ds = load_csv(path, has_header);
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < ds.n_samples(); ++i) {
        const auto r = ds.features.row(i);
        rows.emplace_back(r.begin(), r.end());
    }
    py::dict out;
    out["features"] = rows;
    out["labels"] = ds.labels;
    out["feature_names"] = ds.feature_names;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "donorbench native core";
    m.attr("__version__") = kVersion;

    // Translators run newest first, so the base class goes in first.
    py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<DatasetError>(m, "DatasetError", PyExc_ValueError);
    py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);

    m.def("load_csv", &load_csv_py, py::arg("path"), py::arg("has_header") = true);

    m.def(
        "summarize",
        [](const std::vector<std::vector<double>>& X, const std::vector<int>& y) {
            const auto ds = make_dataset(X, y);
            return dump({{"summary", to_json(summarize(ds))}, {"consistency", to_json(consistency_check(ds))}});
        },
        py::arg("features"), py::arg("labels"));

    m.def(
        "kfold_plan",
        [](std::size_t n, std::size_t k, bool shuffle, std::uint64_t seed) { return kfold_plan(n, k, shuffle, seed).folds; },
        py::arg("n"), py::arg("k"), py::arg("shuffle") = false, py::arg("seed") = 0);

    m.def(
        "fit_predict",
        [](const std::string& pipeline, const std::vector<std::vector<double>>& X, const std::vector<int>& y,
           const std::vector<std::vector<double>>& X_test, std::uint64_t seed) {
            const auto spec = pipeline_from_json(Json::parse(pipeline));
            const auto fitted = fit_pipeline(spec, make_matrix(X), y, seed);
            return predict(fitted, make_matrix(X_test));
        },
        py::arg("pipeline"), py::arg("features"), py::arg("labels"), py::arg("test_features"), py::arg("seed") = 0);

    m.def(
        "cross_validate",
        [](const std::string& pipeline, const std::vector<std::vector<double>>& X, const std::vector<int>& y,
           std::size_t k, bool shuffle, std::uint64_t seed, unsigned threads) {
            const auto ds = make_dataset(X, y);
            const auto plan = kfold_plan(ds.n_samples(), k, shuffle, seed);
            py::gil_scoped_release release;
            return dump(to_json(cross_validate(pipeline_from_json(Json::parse(pipeline)), ds, plan, seed,
                                               CvOptions{threads})));
        },
        py::arg("pipeline"), py::arg("features"), py::arg("labels"), py::arg("k") = 5, py::arg("shuffle") = false,
        py::arg("seed") = 0, py::arg("threads") = 1);

    m.def(
        "evolve",
        [](const std::vector<std::vector<double>>& X, const std::vector<int>& y, std::size_t k, bool shuffle,
           std::uint64_t seed, std::size_t generations, std::size_t population, unsigned threads) {
            const auto ds = make_dataset(X, y);
            const auto plan = kfold_plan(ds.n_samples(), k, shuffle, seed);
            EvolveConfig config;
            config.generations = generations;
            config.population_size = population;
            config.threads = threads;
            py::gil_scoped_release release;
            return dump(to_json(evolve(ds, SearchSpace::default_space(), config, plan, seed)));
        },
        py::arg("features"), py::arg("labels"), py::arg("k") = 5, py::arg("shuffle") = false, py::arg("seed") = 0,
        py::arg("generations") = 5, py::arg("population") = 20, py::arg("threads") = 0);

    m.def(
        "recommend",
        [](std::size_t n_samples, bool labeled, bool predicting_category, bool text_data) {
            const auto r = recommend({n_samples, labeled, predicting_category, text_data});
            std::vector<std::string> kinds;
            for (auto kind : r.classifiers) {
                kinds.push_back(to_string(kind));
            }
            py::dict out;
            out["verdict"] = to_string(r.verdict);
            out["classifiers"] = kinds;
            out["trail"] = r.trail;
            out["note"] = r.note;
            return out;
        },
        py::arg("n_samples"), py::arg("labeled") = true, py::arg("predicting_category") = true,
        py::arg("text_data") = false);

    m.def(
        "run_benchmark",
        [](const std::string& data, std::size_t k, std::uint64_t seed, bool shuffle,
           const std::optional<std::vector<std::string>>& classifiers, bool run_ga, std::size_t generations,
           std::size_t population, const std::optional<std::string>& out, unsigned threads, bool has_header) {
            RunConfig config;
            config.data = data;
            config.k = k;
            config.seed = seed;
            config.shuffle = shuffle;
            if (classifiers) {
                config.classifiers.clear();
                for (const auto& name : *classifiers) {
                    const auto kind = classifier_kind_from_string(name);
                    if (!kind) {
                        throw InvalidArgument("unknown classifier '" + name + "'");
                    }
                    config.classifiers.push_back(*kind);
                }
            }
            config.run_ga = run_ga;
            config.generations = generations;
            config.population = population;
            if (out) {
                config.out = *out;
            }
            config.threads = threads;
            config.has_header = has_header;
            py::gil_scoped_release release;
            return dump(report_to_json(run_benchmark(config)));
        },
        py::arg("data"), py::arg("k") = 5, py::arg("seed") = 0, py::arg("shuffle") = false,
        py::arg("classifiers") = py::none(), py::arg("run_ga") = true, py::arg("generations") = 5,
        py::arg("population") = 20, py::arg("out") = py::none(), py::arg("threads") = 0,
        py::arg("has_header") = true);
}
