#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "donorbench/classifier_spec.hpp"

namespace donorbench {

struct TaskProfile {
    std::size_t n_samples = 0;
    bool labeled = true;
    bool predicting_category = true;
    bool text_data = false;  // recorded, not consulted on the classification path
};

enum class Verdict { classification, get_more_data, regression_out_of_scope, clustering_out_of_scope };

std::string to_string(Verdict verdict);

struct Recommendation {
    Verdict verdict = Verdict::get_more_data;
    std::vector<ClassifierKind> classifiers;
    std::vector<std::string> trail;  // one entry per branch evaluated
    std::string note;
};

// Walks the estimator-selection flowchart: sample count, category target,
// labels, then dataset size.
Recommendation recommend(const TaskProfile& profile);

}  // namespace donorbench
