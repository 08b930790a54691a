#include <doctest.h>

#include <cstring>
#include <fstream>
#include <sstream>

#include "donorbench/dataset.hpp"
#include "donorbench/error.hpp"
#include "support/synthetic.hpp"

using namespace donorbench;

namespace {

// Same header layout as the UCI file; rows are made up.
constexpr const char* kUciStyle =
    "Recency (months),Frequency (times),Monetary (c.c. blood),Time (months),"
    "\"whether he/she donated blood in March 2007\"\r\n"
    "2 ,50,12500,98 ,1\r\n"
    "0 ,13,3250,28 ,1\r\n"
    "1 ,16,4000,35 ,0\r\n"
    "21 ,2,500,52 ,0\r\n";

Dataset parse(const std::string& text, bool header = true)
{
    std::istringstream in(text);
    return parse_csv(in, header);
}

DatasetErrc error_code(const std::string& text, bool header = true)
{
    try {
        parse(text, header);
    } catch (const DatasetError& e) {
        return e.code();
    }
    FAIL("expected a DatasetError");
    return DatasetErrc::empty_dataset;
}

Dataset with_labels(std::vector<int> labels)
{
    Dataset ds;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const double row[] = {static_cast<double>(i)};
        ds.features.append_row(row);
    }
    ds.labels = std::move(labels);
    ds.feature_names = {"x"};
    return ds;
}

}  // namespace

TEST_CASE("UCI-style header gives four named features")
{
    const auto ds = parse(kUciStyle);
    CHECK(ds.n_features() == 4);
    CHECK(ds.n_samples() == 4);
    CHECK(ds.feature_names ==
          std::vector<std::string>{"Recency (months)", "Frequency (times)", "Monetary (c.c. blood)", "Time (months)"});
    CHECK(ds.labels == std::vector<int>{1, 1, 0, 0});
    CHECK(ds.features(0, 2) == 12500.0);
    CHECK(ds.features(3, 3) == 52.0);
}

TEST_CASE("sample count equals data-line count, blank lines ignored")
{
    const auto ds = parse(std::string(kUciStyle) + "\n\n4,4,1000,4,0\n");
    CHECK(ds.n_samples() == 5);
    CHECK(ds.labels.size() == ds.features.rows());
}

TEST_CASE("headerless files get generated names")
{
    const auto ds = parse("1,2,0\n3,4,1\n", false);
    CHECK(ds.feature_names == std::vector<std::string>{"x0", "x1"});
    CHECK(ds.n_samples() == 2);
}

TEST_CASE("each malformed input maps to its own error code")
{
    CHECK(error_code("a,b,label\n") == DatasetErrc::empty_data);
    CHECK(error_code("") == DatasetErrc::empty_data);
    CHECK(error_code("a,b,label\n1,2,0\n1,2\n") == DatasetErrc::ragged_row);
    CHECK(error_code("a,b,label\n1,x,0\n") == DatasetErrc::non_numeric);
    CHECK(error_code("a,b,label\n1,nan,0\n") == DatasetErrc::non_numeric);
    CHECK(error_code("a,b,label\n1,inf,0\n") == DatasetErrc::non_numeric);
    CHECK(error_code("a,b,label\n1,2,yes\n") == DatasetErrc::non_numeric);
    CHECK(error_code("a,b,label\n1,2,2\n") == DatasetErrc::bad_label);
    CHECK(error_code("a,b,label\n1,2,0.5\n") == DatasetErrc::bad_label);
    CHECK(error_code("a,b,label\n1,2,-1\n") == DatasetErrc::bad_label);

    try {
        load_csv(testing::temp_path("does_not_exist.csv"), true);
        FAIL("expected missing_file");
    } catch (const DatasetError& e) {
        CHECK(e.code() == DatasetErrc::missing_file);
    }
}

TEST_CASE("errors carry the offending line")
{
    try {
        parse("a,b,label\n1,2,0\n1,2,7\n");
        FAIL("expected bad_label");
    } catch (const DatasetError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("summarize: majority frequency")
{
    CHECK(summarize(with_labels({0, 0, 0, 1})).majority_frequency == 0.75);
    const auto all_ones = summarize(with_labels({1, 1, 1}));
    CHECK(all_ones.majority_frequency == 1.0);
    CHECK(all_ones.majority_label == 1);

    const auto tie = summarize(with_labels({0, 1}));
    CHECK(tie.majority_label == 0);
    CHECK(tie.majority_frequency == 0.5);
}

TEST_CASE("summarize: per-feature statistics and class counts")
{
    const auto s = summarize(parse(kUciStyle));
    CHECK(s.count0 + s.count1 == s.n_samples);
    CHECK(s.features[0].min == 0.0);
    CHECK(s.features[0].max == 21.0);
    CHECK(s.features[0].mean == doctest::Approx(6.0));
    CHECK(s.features[2].max == 12500.0);
}

TEST_CASE("summarize rejects an empty dataset")
{
    CHECK_THROWS_AS(summarize(Dataset{}), DatasetError);
}

TEST_CASE("consistency check")
{
    SUBCASE("monetary is 250 x frequency")
    {
        const auto r = consistency_check(parse(kUciStyle));
        CHECK(r.status == ConsistencyStatus::proportional);
        CHECK(r.ratio == 250.0);
        CHECK(r.message == "proportional, ratio 250");
    }
    SUBCASE("one perturbed row breaks it")
    {
        auto ds = parse(kUciStyle);
        ds.features(2, 2) += 1.0;
        const auto r = consistency_check(ds);
        CHECK(r.status == ConsistencyStatus::not_proportional);
        CHECK(r.first_mismatch == 2);
    }
    SUBCASE("other widths are skipped")
    {
        CHECK(consistency_check(parse("a,b,label\n1,2,0\n")).status == ConsistencyStatus::skipped);
    }
}

TEST_CASE("load and summarize are pure")
{
    const auto path = testing::temp_path("pure.csv");
    {
        std::ofstream out(path, std::ios::binary);
        out << kUciStyle;
    }
    const auto a = load_csv(path, true);
    const auto b = load_csv(path, true);
    CHECK(a == b);
    const auto sa = summarize(a);
    const auto sb = summarize(b);
    CHECK(sa.majority_frequency == sb.majority_frequency);
    CHECK(sa.features[3].mean == sb.features[3].mean);
    std::filesystem::remove(path);
}

TEST_CASE("write then reload is bit-exact for arbitrary doubles")
{
    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Dataset ds;
        ds.feature_names = {"a", "b", "c"};
        for (int i = 0; i < 30; ++i) {
            const double row[] = {testing::normal(rng) * 1e-7, testing::normal(rng) * 1e9,
                                  std::floor(testing::normal(rng) * 100.0)};
            ds.features.append_row(row);
            ds.labels.push_back(rng.bernoulli(0.3) ? 1 : 0);
        }
        std::stringstream buf;
        write_csv(ds, buf);
        const auto back = parse_csv(buf, true);
        REQUIRE(back.features.data().size() == ds.features.data().size());
        for (std::size_t i = 0; i < ds.features.data().size(); ++i) {
            CHECK(std::memcmp(&back.features.data()[i], &ds.features.data()[i], sizeof(double)) == 0);
        }
        CHECK(back.labels == ds.labels);
        CHECK(back.feature_names == ds.feature_names);
    }
}

TEST_CASE("real transfusion file, when available")
{
    const auto path = testing::transfusion_path();
    if (!path) {
        MESSAGE("transfusion.data not available; set DONORBENCH_TRANSFUSION to enable");
        return;
    }
    const auto ds = load_csv(*path, true);
    CHECK(ds.n_samples() == 748);
    CHECK(ds.n_features() == 4);
    CHECK(std::abs(summarize(ds).majority_frequency - 0.762) < 5e-4);
    const auto r = consistency_check(ds);
    CHECK(r.status == ConsistencyStatus::proportional);
    CHECK(r.ratio == 250.0);
}
