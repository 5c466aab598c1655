#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace ginipca {

/// Dense column-major matrix of doubles. Columns are contiguous, which is the
/// access pattern of every statistic here (one variable at a time).
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    /// Row-wise nested initializer, e.g. `Matrix{{1, 2}, {3, 4}}`.
    Matrix(std::initializer_list<std::initializer_list<double>> rows);

    static Matrix identity(std::size_t n);
    static Matrix from_columns(const std::vector<std::vector<double>>& columns);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return data_.empty(); }

    double& operator()(std::size_t r, std::size_t c) noexcept { return data_[c * rows_ + r]; }
    double operator()(std::size_t r, std::size_t c) const noexcept { return data_[c * rows_ + r]; }

    std::span<double> col(std::size_t c) noexcept { return {data_.data() + c * rows_, rows_}; }
    std::span<const double> col(std::size_t c) const noexcept {
        return {data_.data() + c * rows_, rows_};
    }

    std::vector<double> row(std::size_t r) const;

    std::span<const double> data() const noexcept { return data_; }
    std::span<double> data() noexcept { return data_; }

    Matrix transpose() const;
    double frobenius_norm() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// C = Aᵀ B.
Matrix transpose_times(const Matrix& a, const Matrix& b);
/// C = A B.
Matrix multiply(const Matrix& a, const Matrix& b);

/// Raw observations: N rows (observations) by K columns (variables).
struct DataMatrix {
    Matrix values;
    std::vector<std::string> row_labels;
    std::vector<std::string> column_names;

    std::size_t n_obs() const noexcept { return values.rows(); }
    std::size_t n_vars() const noexcept { return values.cols(); }

    /// Builds default labels ("1".."N", "x1".."xK") around bare values.
    static DataMatrix from_values(Matrix values);

    /// Throws DimensionError unless N >= 2, K >= 1, labels match, and all values are finite.
    void validate() const;
};

}  // namespace ginipca
