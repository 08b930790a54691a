#include "donorbench/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <ostream>

namespace donorbench {

namespace {

std::string utc_timestamp()
{
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

template <typename Fn>
auto run_stage(const std::string& stage, Fn&& fn)
{
    try {
        return fn();
    } catch (const StageError&) {
        throw;
    } catch (const std::exception& e) {
        throw StageError(stage, e.what());
    }
}

Json to_json(const ClassifierResult& r)
{
    return {{"name", r.name}, {"cv", to_json(r.cv)}, {"near_baseline", r.near_baseline}};
}

}  // namespace

void RunConfig::validate() const
{
    if (data.empty()) {
        throw InvalidArgument("config: data path is required");
    }
    if (k < 2) {
        throw InvalidArgument("config: k must be at least 2");
    }
    if (run_ga && population < 2) {
        throw InvalidArgument("config: population must be at least 2");
    }
}

Json to_json(const RunConfig& c)
{
    Json kinds = Json::array();
    for (auto kind : c.classifiers) {
        kinds.push_back(to_string(kind));
    }
    return {{"data", c.data.string()},
            {"has_header", c.has_header},
            {"k", c.k},
            {"seed", c.seed},
            {"shuffle", c.shuffle},
            {"classifiers", kinds},
            {"run_ga", c.run_ga},
            {"generations", c.generations},
            {"population", c.population},
            {"out", c.out ? Json(c.out->string()) : Json(nullptr)},
            {"threads", c.threads}};
}

std::string format_score(double value)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

BenchmarkReport run_benchmark(const RunConfig& config)
{
    const auto start = std::chrono::steady_clock::now();
    run_stage("config", [&] {
        config.validate();
        return 0;
    });

    BenchmarkReport report;
    report.config = config;
    report.generated_at = utc_timestamp();

    const Dataset ds = run_stage("load", [&] { return load_csv(config.data, config.has_header); });
    report.summary = run_stage("summarize", [&] { return summarize(ds); });
    report.consistency = consistency_check(ds);
    report.plan = run_stage("plan", [&] { return kfold_plan(ds.n_samples(), config.k, config.shuffle, config.seed); });

    const auto near_baseline = [&](double mean) {
        return std::abs(mean - report.summary.majority_frequency) <= kBaselineMargin;
    };

    for (auto kind : config.classifiers) {
        const auto name = to_string(kind);
        auto cv = run_stage("cv:" + name, [&] {
            return cross_validate(default_pipeline(kind), ds, report.plan, config.seed, CvOptions{config.threads});
        });
        const bool flag = near_baseline(cv.mean_accuracy);
        report.classifiers.push_back({name, std::move(cv), flag});
    }

    if (config.run_ga) {
        EvolveConfig ga;
        ga.population_size = config.population;
        ga.generations = config.generations;
        ga.threads = config.threads;
        report.evolution = run_stage("evolve", [&] {
            return evolve(ds, SearchSpace::default_space(), ga, report.plan, config.seed);
        });
        auto cv = run_stage("cv:ga_champion", [&] {
            return cross_validate(report.evolution->champion.genome, ds, report.plan, config.seed,
                                  CvOptions{config.threads});
        });
        const bool flag = near_baseline(cv.mean_accuracy);
        report.champion = ClassifierResult{"ga_champion", std::move(cv), flag};
    }

    for (const auto& r : report.classifiers) {
        report.ranking.push_back({r.name, r.cv.mean_accuracy});
    }
    if (report.champion) {
        report.ranking.push_back({report.champion->name, report.champion->cv.mean_accuracy});
    }
    std::sort(report.ranking.begin(), report.ranking.end(), [](const RankEntry& a, const RankEntry& b) {
        return a.mean_accuracy != b.mean_accuracy ? a.mean_accuracy > b.mean_accuracy : a.name < b.name;
    });

    report.total_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (config.out) {
        run_stage("emit", [&] {
            emit_report(report, *config.out);
            return 0;
        });
    }
    return report;
}

Json report_to_json(const BenchmarkReport& report)
{
    Json classifiers = Json::array();
    for (const auto& r : report.classifiers) {
        classifiers.push_back(to_json(r));
    }
    Json ranking = Json::array();
    for (const auto& e : report.ranking) {
        ranking.push_back({{"name", e.name}, {"mean_accuracy", e.mean_accuracy}});
    }
    Json flagged = Json::array();
    for (const auto& r : report.classifiers) {
        if (r.near_baseline) {
            flagged.push_back(r.name);
        }
    }
    if (report.champion && report.champion->near_baseline) {
        flagged.push_back(report.champion->name);
    }

    Json j;
    j["schema"] = kReportSchema;
    j["version"] = kVersion;
    j["generated_at"] = report.generated_at;
    j["total_seconds"] = report.total_seconds;
    j["config"] = to_json(report.config);
    j["dataset"] = {{"summary", to_json(report.summary)}, {"consistency", to_json(report.consistency)}};
    j["baseline"] = {{"majority_label", report.summary.majority_label},
                     {"majority_frequency", report.summary.majority_frequency},
                     {"margin", kBaselineMargin},
                     {"near_baseline", flagged}};
    j["fold_plan"] = to_json(report.plan);
    j["classifiers"] = classifiers;
    j["evolution"] = report.evolution ? to_json(*report.evolution) : Json(nullptr);
    j["champion"] = report.champion ? to_json(*report.champion) : Json(nullptr);
    j["ranking"] = ranking;
    return j;
}

void emit_report(const BenchmarkReport& report, const std::filesystem::path& path)
{
    const auto text = canonical_dump(report_to_json(report));
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error("cannot write report to '" + path.string() + "'");
    }
    out << text;
    out.flush();
    if (!out) {
        throw Error("I/O failure while writing '" + path.string() + "'");
    }
}

void print_table(const BenchmarkReport& report, std::ostream& out)
{
    const auto& s = report.summary;
    out << "dataset: " << report.config.data.string() << " (" << s.n_samples << " samples, " << s.n_features
        << " features)\n";
    out << "majority-class baseline: label " << s.majority_label << " = " << format_score(s.majority_frequency)
        << "\n\n";

    std::size_t block = 0;
    const auto print_block = [&](const ClassifierResult& r) {
        out << ++block << ' ' << r.name << '\n';
        for (double a : r.cv.fold_accuracies) {
            out << format_score(a) << '\n';
        }
        out << "Average= " << format_score(r.cv.mean_accuracy);
        if (r.near_baseline) {
            out << "  [within " << kBaselineMargin << " of baseline]";
        }
        out << '\n' << r.cv.pipeline.encode() << "\n\n";
    };
    for (const auto& r : report.classifiers) {
        print_block(r);
    }
    if (report.champion) {
        print_block(*report.champion);
    }
    if (!report.ranking.empty()) {
        out << "ranking:\n";
        for (std::size_t i = 0; i < report.ranking.size(); ++i) {
            out << "  " << i + 1 << ". " << report.ranking[i].name << "  " << format_score(report.ranking[i].mean_accuracy)
                << '\n';
        }
    }
}

}  // namespace donorbench
