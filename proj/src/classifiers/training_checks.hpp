#pragma once

#include <span>
#include <string>

#include "donorbench/error.hpp"
#include "donorbench/matrix.hpp"

namespace donorbench::detail {

inline void check_training_set(const Matrix& X, std::span<const int> y, const char* who)
{
    if (X.rows() == 0) {
        throw InvalidArgument(std::string(who) + ": empty training set");
    }
    if (y.size() != X.rows()) {
        throw InvalidArgument(std::string(who) + ": " + std::to_string(X.rows()) + " rows but " +
                              std::to_string(y.size()) + " labels");
    }
    for (int label : y) {
        if (label != 0 && label != 1) {
            throw InvalidArgument(std::string(who) + ": labels must be 0 or 1");
        }
    }
}

inline void check_both_classes(std::span<const int> y, const char* who)
{
    bool has0 = false;
    bool has1 = false;
    for (int label : y) {
        (label == 1 ? has1 : has0) = true;
    }
    if (!has0 || !has1) {
        throw FitError(std::string(who) + ": training data contains a single class");
    }
}

inline void check_query(std::size_t expected, std::size_t got, const char* who)
{
    if (expected != got) {
        throw InvalidArgument(std::string(who) + ": model expects " + std::to_string(expected) +
                              " features, got " + std::to_string(got));
    }
}

}  // namespace donorbench::detail
