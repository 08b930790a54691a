#include "donorbench/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>

#include "donorbench/error.hpp"

namespace donorbench {

namespace {

std::string_view trim(std::string_view s)
{
    constexpr std::string_view ws = " \t\r\n";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

// Comma split honouring double quotes; quotes are stripped from the fields.
std::vector<std::string> split_fields(std::string_view line)
{
    std::vector<std::string> fields;
    std::string current;
    bool quoted = false;
    for (char c : line) {
        if (c == '"') {
            quoted = !quoted;
        } else if (c == ',' && !quoted) {
            fields.emplace_back(trim(current));
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    fields.emplace_back(trim(current));
    return fields;
}

bool parse_finite(std::string_view text, double& out)
{
    if (!text.empty() && text.front() == '+') {
        text.remove_prefix(1);
    }
    const char* first = text.data();
    const char* last = first + text.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last && std::isfinite(out);
}

std::string format_double(double v)
{
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

}  // namespace

const char* to_string(ConsistencyStatus status) noexcept
{
    switch (status) {
    case ConsistencyStatus::skipped: return "skipped";
    case ConsistencyStatus::proportional: return "proportional";
    case ConsistencyStatus::not_proportional: return "not_proportional";
    }
    return "unknown";
}

Dataset Dataset::subset(std::span<const std::size_t> indices) const
{
    Dataset out;
    out.features = features.select_rows(indices);
    out.labels.reserve(indices.size());
    for (auto i : indices) {
        out.labels.push_back(labels[i]);
    }
    out.feature_names = feature_names;
    return out;
}

Dataset parse_csv(std::istream& in, bool has_header)
{
    Dataset ds;
    std::string line;
    std::size_t line_no = 0;
    std::size_t width = 0;  // fields per row, fixed by the header or first data row
    bool header_pending = has_header;
    std::vector<double> row;

    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view = line;
        if (line_no == 1 && view.starts_with("\xEF\xBB\xBF")) {
            view.remove_prefix(3);
        }
        if (trim(view).empty()) {
            continue;
        }
        auto fields = split_fields(view);
        if (header_pending) {
            header_pending = false;
            width = fields.size();
            if (width < 2) {
                throw DatasetError(DatasetErrc::ragged_row,
                                   "header must name at least one feature and the label", line_no);
            }
            ds.feature_names.assign(fields.begin(), fields.end() - 1);
            continue;
        }
        if (width == 0) {
            width = fields.size();
            if (width < 2) {
                throw DatasetError(DatasetErrc::ragged_row,
                                   "line " + std::to_string(line_no) + ": need at least one feature and a label",
                                   line_no);
            }
        }
        if (fields.size() != width) {
            throw DatasetError(DatasetErrc::ragged_row,
                               "line " + std::to_string(line_no) + ": expected " + std::to_string(width) +
                                   " fields, found " + std::to_string(fields.size()),
                               line_no);
        }
        row.assign(width - 1, 0.0);
        for (std::size_t j = 0; j + 1 < width; ++j) {
            if (!parse_finite(fields[j], row[j])) {
                throw DatasetError(DatasetErrc::non_numeric,
                                   "line " + std::to_string(line_no) + ", column " + std::to_string(j + 1) +
                                       ": not a finite number: '" + fields[j] + "'",
                                   line_no);
            }
        }
        double label = 0.0;
        if (!parse_finite(fields.back(), label)) {
            throw DatasetError(DatasetErrc::non_numeric,
                               "line " + std::to_string(line_no) + ": label is not numeric: '" + fields.back() + "'",
                               line_no);
        }
        if (label != 0.0 && label != 1.0) {
            throw DatasetError(DatasetErrc::bad_label,
                               "line " + std::to_string(line_no) + ": label must be 0 or 1, found '" +
                                   fields.back() + "'",
                               line_no);
        }
        ds.features.append_row(row);
        ds.labels.push_back(label == 1.0 ? 1 : 0);
    }

    if (ds.labels.empty()) {
        throw DatasetError(DatasetErrc::empty_data, "no data rows");
    }
    if (ds.feature_names.empty()) {
        for (std::size_t j = 0; j < ds.n_features(); ++j) {
            ds.feature_names.push_back("x" + std::to_string(j));
        }
    }
    return ds;
}

Dataset load_csv(const std::filesystem::path& path, bool has_header)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw DatasetError(DatasetErrc::missing_file, "cannot open '" + path.string() + "'");
    }
    return parse_csv(in, has_header);
}

void write_csv(const Dataset& ds, std::ostream& out, const std::string& label_name)
{
    for (const auto& name : ds.feature_names) {
        out << name << ',';
    }
    out << label_name << '\n';
    for (std::size_t i = 0; i < ds.n_samples(); ++i) {
        for (double v : ds.features.row(i)) {
            out << format_double(v) << ',';
        }
        out << ds.labels[i] << '\n';
    }
}

void write_csv(const Dataset& ds, const std::filesystem::path& path, const std::string& label_name)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot write '" + path.string() + "'");
    }
    write_csv(ds, out, label_name);
}

DatasetSummary summarize(const Dataset& ds)
{
    if (ds.n_samples() == 0) {
        throw DatasetError(DatasetErrc::empty_dataset, "cannot summarize an empty dataset");
    }
    DatasetSummary s;
    s.n_samples = ds.n_samples();
    s.n_features = ds.n_features();
    s.feature_names = ds.feature_names;
    s.features.resize(ds.n_features());
    for (std::size_t j = 0; j < ds.n_features(); ++j) {
        auto& f = s.features[j];
        f.min = f.max = ds.features(0, j);
        double sum = 0.0;
        for (std::size_t i = 0; i < ds.n_samples(); ++i) {
            const double v = ds.features(i, j);
            f.min = std::min(f.min, v);
            f.max = std::max(f.max, v);
            sum += v;
        }
        f.mean = sum / static_cast<double>(ds.n_samples());
    }
    s.count1 = static_cast<std::size_t>(std::count(ds.labels.begin(), ds.labels.end(), 1));
    s.count0 = ds.n_samples() - s.count1;
    s.majority_label = s.count1 > s.count0 ? 1 : 0;
    s.majority_frequency = static_cast<double>(std::max(s.count0, s.count1)) / static_cast<double>(s.n_samples);
    return s;
}

ConsistencyReport consistency_check(const Dataset& ds)
{
    constexpr std::size_t frequency_col = 1;
    constexpr std::size_t monetary_col = 2;

    ConsistencyReport r;
    if (ds.n_features() != 4 || ds.n_samples() == 0) {
        r.status = ConsistencyStatus::skipped;
        r.message = "check skipped: expects the 4-column recency/frequency/monetary/time layout";
        return r;
    }

    // The ratio is taken from the first row with a nonzero frequency, then
    // every row must reproduce monetary == ratio * frequency exactly.
    std::size_t anchor = ds.n_samples();
    for (std::size_t i = 0; i < ds.n_samples(); ++i) {
        if (ds.features(i, frequency_col) != 0.0) {
            anchor = i;
            break;
        }
    }
    if (anchor == ds.n_samples()) {
        r.status = ConsistencyStatus::not_proportional;
        r.message = "not proportional: frequency column is all zero";
        return r;
    }
    const double ratio = ds.features(anchor, monetary_col) / ds.features(anchor, frequency_col);
    for (std::size_t i = 0; i < ds.n_samples(); ++i) {
        if (ds.features(i, monetary_col) != ratio * ds.features(i, frequency_col)) {
            r.status = ConsistencyStatus::not_proportional;
            r.first_mismatch = i;
            r.message = "not proportional: row " + std::to_string(i) + " breaks ratio " + format_double(ratio);
            return r;
        }
    }
    r.status = ConsistencyStatus::proportional;
    r.ratio = ratio;
    r.message = "proportional, ratio " + format_double(ratio);
    return r;
}

}  // namespace donorbench
