#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "donorbench/advisor.hpp"
#include "donorbench/report.hpp"

using namespace donorbench;

namespace {

struct CommonOptions {
    std::string data;
    bool no_header = false;
    std::size_t k = 5;
    std::uint64_t seed = 0;
    bool shuffle = false;
    std::string out;
    unsigned threads = 0;
};

void add_data_options(CLI::App* cmd, CommonOptions& o, bool required = true)
{
    auto* opt = cmd->add_option("--data", o.data, "CSV file: numeric features, 0/1 label last");
    if (required) {
        opt->required();
    }
    cmd->add_flag("--no-header", o.no_header, "The CSV has no header line");
}

void add_cv_options(CLI::App* cmd, CommonOptions& o)
{
    cmd->add_option("--k", o.k, "Number of folds")->capture_default_str();
    cmd->add_option("--seed", o.seed, "Random seed")->capture_default_str();
    cmd->add_flag("--shuffle", o.shuffle, "Shuffle rows before building folds");
    cmd->add_option("--threads", o.threads, "Worker threads (0 = all cores)")->capture_default_str();
}

std::vector<ClassifierKind> parse_classifier_list(const std::string& text)
{
    std::vector<ClassifierKind> kinds;
    if (text == "all") {
        return all_classifier_kinds();
    }
    if (text.empty() || text == "none") {
        return kinds;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto kind = classifier_kind_from_string(item);
        if (!kind) {
            throw InvalidArgument("unknown classifier '" + item + "'");
        }
        kinds.push_back(*kind);
    }
    return kinds;
}

void write_json(const Json& j, const std::string& path)
{
    const auto text = canonical_dump(j);
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out || !(out << text)) {
        throw StageError("emit", "cannot write '" + path + "'");
    }
}

int fail(const std::string& stage, const std::string& message)
{
    std::cerr << canonical_dump(Json{{"error", {{"stage", stage}, {"message", message}}}});
    return 1;
}

Dataset load_or_throw(const CommonOptions& o)
{
    try {
        return load_csv(o.data, !o.no_header);
    } catch (const std::exception& e) {
        throw StageError("load", e.what());
    }
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"donorbench: binary-classifier comparison with k-fold CV and a genetic pipeline search"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));

    CommonOptions o;

    // bench
    auto* bench = app.add_subcommand("bench", "Cross-validate every classifier, evolve a pipeline, rank them");
    std::string classifier_list = "all";
    std::size_t generations = 5;
    std::size_t population = 20;
    bool no_ga = false;
    bool quiet = false;
    add_data_options(bench, o);
    add_cv_options(bench, o);
    bench->add_option("--classifiers", classifier_list, "Comma-separated kinds, 'all' or 'none'")->capture_default_str();
    bench->add_option("--generations", generations, "GA generations")->capture_default_str();
    bench->add_option("--population", population, "GA population size")->capture_default_str();
    bench->add_flag("--no-ga", no_ga, "Skip the genetic pipeline search");
    bench->add_option("--out", o.out, "Write the JSON report here");
    bench->add_flag("--quiet", quiet, "Do not print the score table");

    // cv
    auto* cv = app.add_subcommand("cv", "Cross-validate a single pipeline");
    std::string classifier_name;
    std::string pipeline_arg;
    std::string preprocess = "none";
    add_data_options(cv, o);
    add_cv_options(cv, o);
    cv->add_option("--classifier", classifier_name, "Classifier kind with default hyperparameters");
    cv->add_option("--preprocess", preprocess, "none, minmax or standard")->capture_default_str();
    cv->add_option("--pipeline", pipeline_arg, "Pipeline JSON, inline or a file path");
    cv->add_option("--out", o.out, "Write the JSON result here (default: stdout)");

    // evolve
    auto* ev = app.add_subcommand("evolve", "Run only the genetic pipeline search");
    add_data_options(ev, o);
    add_cv_options(ev, o);
    ev->add_option("--generations", generations, "GA generations")->capture_default_str();
    ev->add_option("--population", population, "GA population size")->capture_default_str();
    ev->add_option("--out", o.out, "Write the JSON history here (default: stdout)");

    // advise
    auto* advise = app.add_subcommand("advise", "Walk the estimator-selection flowchart");
    std::size_t n_samples = 0;
    bool unlabeled = false;
    bool not_category = false;
    bool text_data = false;
    add_data_options(advise, o, false);
    advise->add_option("--n-samples", n_samples, "Sample count (taken from --data when given)");
    advise->add_flag("--unlabeled", unlabeled, "Data has no labels");
    advise->add_flag("--not-category", not_category, "Target is a quantity, not a category");
    advise->add_flag("--text", text_data, "Features are text");

    // inspect
    auto* inspect = app.add_subcommand("inspect", "Summarize a dataset");
    add_data_options(inspect, o);
    inspect->add_option("--out", o.out, "Write the JSON summary here (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (bench->parsed()) {
            RunConfig cfg;
            cfg.data = o.data;
            cfg.has_header = !o.no_header;
            cfg.k = o.k;
            cfg.seed = o.seed;
            cfg.shuffle = o.shuffle;
            cfg.classifiers = parse_classifier_list(classifier_list);
            cfg.run_ga = !no_ga;
            cfg.generations = generations;
            cfg.population = population;
            cfg.threads = o.threads;
            if (!o.out.empty()) {
                cfg.out = o.out;
            }
            const auto report = run_benchmark(cfg);
            if (!quiet) {
                print_table(report, std::cout);
            }
            return 0;
        }

        if (cv->parsed()) {
            const Dataset ds = load_or_throw(o);
            PipelineSpec spec;
            if (!pipeline_arg.empty()) {
                const Json j = std::filesystem::exists(pipeline_arg) ? read_json_file(pipeline_arg)
                                                                     : Json::parse(pipeline_arg);
                spec = pipeline_from_json(j);
            } else {
                if (classifier_name.empty()) {
                    throw InvalidArgument("cv needs --classifier or --pipeline");
                }
                const auto kind = classifier_kind_from_string(classifier_name);
                if (!kind) {
                    throw InvalidArgument("unknown classifier '" + classifier_name + "'");
                }
                const auto scaler = scaler_kind_from_string(preprocess);
                if (!scaler) {
                    throw InvalidArgument("unknown preprocessor '" + preprocess + "'");
                }
                spec = PipelineSpec{*scaler, ClassifierSpec::defaults(*kind)};
            }
            const auto plan = kfold_plan(ds.n_samples(), o.k, o.shuffle, o.seed);
            const auto report = cross_validate(spec, ds, plan, o.seed, CvOptions{o.threads});
            write_json({{"schema", kReportSchema}, {"fold_plan", to_json(plan)}, {"cv", to_json(report)}}, o.out);
            return 0;
        }

        if (ev->parsed()) {
            const Dataset ds = load_or_throw(o);
            const auto plan = kfold_plan(ds.n_samples(), o.k, o.shuffle, o.seed);
            EvolveConfig ga;
            ga.generations = generations;
            ga.population_size = population;
            ga.threads = o.threads;
            const auto history = evolve(ds, SearchSpace::default_space(), ga, plan, o.seed);
            write_json({{"schema", kReportSchema}, {"fold_plan", to_json(plan)}, {"evolution", to_json(history)}},
                       o.out);
            return 0;
        }

        if (advise->parsed()) {
            TaskProfile profile;
            profile.n_samples = o.data.empty() ? n_samples : load_or_throw(o).n_samples();
            profile.labeled = !unlabeled;
            profile.predicting_category = !not_category;
            profile.text_data = text_data;
            const auto rec = recommend(profile);
            for (const auto& step : rec.trail) {
                std::cout << "- " << step << '\n';
            }
            std::cout << "verdict: " << to_string(rec.verdict) << '\n';
            for (auto kind : rec.classifiers) {
                std::cout << "  " << to_string(kind) << '\n';
            }
            if (!rec.note.empty()) {
                std::cout << "note: " << rec.note << '\n';
            }
            return 0;
        }

        if (inspect->parsed()) {
            const Dataset ds = load_or_throw(o);
            write_json({{"summary", to_json(summarize(ds))}, {"consistency", to_json(consistency_check(ds))}}, o.out);
            return 0;
        }
    } catch (const StageError& e) {
        return fail(e.stage(), e.what());
    } catch (const DatasetError& e) {
        return fail("load", e.what());
    } catch (const std::exception& e) {
        return fail("run", e.what());
    }
    return 0;
}
