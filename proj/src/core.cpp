#include <algorithm>
#include <string>

#include "donorbench/error.hpp"
#include "donorbench/matrix.hpp"
#include "donorbench/rng.hpp"

namespace donorbench {

const char* to_string(DatasetErrc code) noexcept
{
    switch (code) {
    case DatasetErrc::missing_file: return "missing_file";
    case DatasetErrc::ragged_row: return "ragged_row";
    case DatasetErrc::non_numeric: return "non_numeric";
    case DatasetErrc::bad_label: return "bad_label";
    case DatasetErrc::empty_data: return "empty_data";
    case DatasetErrc::empty_dataset: return "empty_dataset";
    }
    return "unknown";
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<double>> rows)
{
    Matrix m;
    for (const auto& r : rows) {
        m.append_row(std::span<const double>(r.begin(), r.size()));
    }
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows)
{
    Matrix m;
    for (const auto& r : rows) {
        m.append_row(r);
    }
    return m;
}

void Matrix::append_row(std::span<const double> values)
{
    if (rows_ == 0 && cols_ == 0) {
        cols_ = values.size();
    }
    if (values.size() != cols_) {
        throw InvalidArgument("Matrix::append_row: expected " + std::to_string(cols_) + " values, got " +
                              std::to_string(values.size()));
    }
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

Matrix Matrix::select_rows(std::span<const std::size_t> indices) const
{
    Matrix out(indices.size(), cols_);
    for (std::size_t i = 0; i < indices.size(); ++i) {
        auto src = row(indices[i]);
        std::copy(src.begin(), src.end(), out.row(i).begin());
    }
    return out;
}

std::size_t Rng::uniform_index(std::size_t n)
{
    if (n <= 1) {
        return 0;
    }
    // Rejection sampling removes modulo bias.
    const std::uint64_t bound = static_cast<std::uint64_t>(n);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x = 0;
    do {
        x = next();
    } while (x >= limit);
    return static_cast<std::size_t>(x % bound);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) noexcept
{
    std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace donorbench
