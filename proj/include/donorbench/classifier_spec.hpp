#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace donorbench {

enum class ClassifierKind { perceptron, knn, decision_tree, bernoulli_nb, svc_rbf, linear_svc };

std::string to_string(ClassifierKind kind);
std::optional<ClassifierKind> classifier_kind_from_string(std::string_view name);
const std::vector<ClassifierKind>& all_classifier_kinds();

// Hyperparameter value. Sentinels such as max_depth="none" and gamma="auto"
// are carried as strings.
using ParamValue = std::variant<bool, std::int64_t, double, std::string>;

std::string format_param(const ParamValue& value);

// A classifier kind plus a complete hyperparameter assignment. Construct via
// defaults() and set(); set() rejects unknown keys and out-of-range values.
class ClassifierSpec {
public:
    ClassifierSpec() : ClassifierSpec(defaults(ClassifierKind::perceptron)) {}

    static ClassifierSpec defaults(ClassifierKind kind);

    ClassifierKind kind() const noexcept { return kind_; }
    const std::map<std::string, ParamValue>& params() const noexcept { return params_; }
    const ParamValue& at(const std::string& key) const;

    // Coerces integral doubles / ints to the declared type, then validates.
    ClassifierSpec& set(const std::string& key, ParamValue value);

    // Re-checks every key and range; throws InvalidArgument on violation.
    void validate() const;

    // Deterministic text form, e.g. "knn(k=5,p=2)".
    std::string encode() const;

    bool operator==(const ClassifierSpec&) const = default;

private:
    ClassifierSpec(ClassifierKind kind, std::map<std::string, ParamValue> params)
        : kind_(kind), params_(std::move(params)) {}

    ClassifierKind kind_;
    std::map<std::string, ParamValue> params_;
};

// Names of the legal hyperparameters for a kind, in sorted order.
std::vector<std::string> param_names(ClassifierKind kind);

// Checks a single key/value against the kind's rules without building a spec.
bool param_is_valid(ClassifierKind kind, const std::string& key, const ParamValue& value);

struct PerceptronParams {
    int epochs = 5;
    double learning_rate = 1.0;
    bool shuffle = true;
};

struct KnnParams {
    int k = 5;
    int p = 2;
};

struct TreeParams {
    int min_samples_split = 2;
    int min_samples_leaf = 1;
    std::optional<int> max_depth;
};

struct BernoulliNbParams {
    double alpha = 1.0;
    double binarize = 0.0;
};

struct SvcParams {
    double C = 1.0;
    std::optional<double> gamma;  // empty = auto = 1 / n_features
    double tol = 1e-3;
    int max_passes = 100;         // pair-update budget = max_passes * n
};

struct LinearSvcParams {
    double C = 5.0;
    double tol = 1e-3;
    int max_iter = 1000;
};

PerceptronParams perceptron_params(const ClassifierSpec& spec);
KnnParams knn_params(const ClassifierSpec& spec);
TreeParams tree_params(const ClassifierSpec& spec);
BernoulliNbParams bernoulli_nb_params(const ClassifierSpec& spec);
SvcParams svc_params(const ClassifierSpec& spec);
LinearSvcParams linear_svc_params(const ClassifierSpec& spec);

}  // namespace donorbench
