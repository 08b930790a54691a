#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "donorbench/matrix.hpp"

namespace donorbench {

// Feature matrix plus binary labels. Immutable once loaded.
struct Dataset {
    Matrix features;
    std::vector<int> labels;  // each 0 or 1
    std::vector<std::string> feature_names;

    std::size_t n_samples() const noexcept { return features.rows(); }
    std::size_t n_features() const noexcept { return features.cols(); }

    // Row subset, preserving the given order.
    Dataset subset(std::span<const std::size_t> indices) const;

    bool operator==(const Dataset&) const = default;
};

struct FeatureStats {
    double min = 0.0;
    double max = 0.0;
    double mean = 0.0;
};

struct DatasetSummary {
    std::size_t n_samples = 0;
    std::size_t n_features = 0;
    std::vector<std::string> feature_names;
    std::vector<FeatureStats> features;
    std::size_t count0 = 0;
    std::size_t count1 = 0;
    int majority_label = 0;  // ties go to 0
    double majority_frequency = 0.0;
};

enum class ConsistencyStatus { skipped, proportional, not_proportional };

const char* to_string(ConsistencyStatus status) noexcept;

// Result of checking whether the monetary column (index 2) is an exact
// constant multiple of the frequency column (index 1).
struct ConsistencyReport {
    ConsistencyStatus status = ConsistencyStatus::skipped;
    double ratio = 0.0;          // valid when proportional
    std::size_t first_mismatch = 0;  // row index, valid when not_proportional
    std::string message;
};

Dataset load_csv(const std::filesystem::path& path, bool has_header);
Dataset parse_csv(std::istream& in, bool has_header);

// Writes features with shortest round-trip formatting so that reloading
// reproduces every value bit-for-bit.
void write_csv(const Dataset& ds, std::ostream& out, const std::string& label_name = "label");
void write_csv(const Dataset& ds, const std::filesystem::path& path, const std::string& label_name = "label");

DatasetSummary summarize(const Dataset& ds);

ConsistencyReport consistency_check(const Dataset& ds);

}  // namespace donorbench
