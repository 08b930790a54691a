#pragma once

#include <stdexcept>
#include <string>

namespace donorbench {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Shape or argument violations detected at call time (dimension mismatch,
// empty inputs, out-of-range hyperparameters).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

enum class DatasetErrc {
    missing_file,
    ragged_row,
    non_numeric,
    bad_label,
    empty_data,
    empty_dataset,
};

const char* to_string(DatasetErrc code) noexcept;

class DatasetError : public Error {
public:
    DatasetError(DatasetErrc code, const std::string& message, std::size_t line = 0)
        : Error(message), code_(code), line_(line) {}

    DatasetErrc code() const noexcept { return code_; }
    // 1-based source line, 0 when not tied to a line.
    std::size_t line() const noexcept { return line_; }

private:
    DatasetErrc code_;
    std::size_t line_;
};

// A classifier could not be fitted on the data it was given (e.g. a
// single-class training set for an SVM).
class FitError : public Error {
public:
    using Error::Error;
};

}  // namespace donorbench
