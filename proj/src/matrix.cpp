#include "ginipca/matrix.hpp"

#include <cmath>

#include "ginipca/errors.hpp"
#include "ginipca/kernels.hpp"

namespace ginipca {

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.assign(rows_ * cols_, 0.0);
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != cols_) throw DimensionError("ragged matrix initializer");
        std::size_t c = 0;
        for (double v : row) (*this)(r, c++) = v;
        ++r;
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::from_columns(const std::vector<std::vector<double>>& columns) {
    if (columns.empty()) return {};
    Matrix m(columns.front().size(), columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != m.rows()) throw DimensionError("columns of unequal length");
        std::copy(columns[c].begin(), columns[c].end(), m.col(c).begin());
    }
    return m;
}

std::vector<double> Matrix::row(std::size_t r) const {
    std::vector<double> out(cols_);
    for (std::size_t c = 0; c < cols_; ++c) out[c] = (*this)(r, c);
    return out;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t c = 0; c < cols_; ++c)
        for (std::size_t r = 0; r < rows_; ++r) t(c, r) = (*this)(r, c);
    return t;
}

double Matrix::frobenius_norm() const { return std::sqrt(kernels::dot(data_, data_)); }

Matrix transpose_times(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw DimensionError("transpose_times: row counts differ");
    Matrix c(a.cols(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j)
        for (std::size_t i = 0; i < a.cols(); ++i) c(i, j) = kernels::dot(a.col(i), b.col(j));
    return c;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("multiply: inner dimensions differ");
    Matrix c(a.rows(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j)
        for (std::size_t k = 0; k < a.cols(); ++k) kernels::axpy(b(k, j), a.col(k), c.col(j));
    return c;
}

DataMatrix DataMatrix::from_values(Matrix values) {
    DataMatrix dm;
    dm.row_labels.reserve(values.rows());
    for (std::size_t i = 0; i < values.rows(); ++i) dm.row_labels.push_back(std::to_string(i + 1));
    dm.column_names.reserve(values.cols());
    for (std::size_t k = 0; k < values.cols(); ++k) dm.column_names.push_back("x" + std::to_string(k + 1));
    dm.values = std::move(values);
    return dm;
}

void DataMatrix::validate() const {
    if (values.rows() < 2) throw DimensionError("data matrix needs at least 2 observations");
    if (values.cols() < 1) throw DimensionError("data matrix needs at least 1 variable");
    if (row_labels.size() != values.rows())
        throw DimensionError("row label count does not match observation count");
    if (column_names.size() != values.cols())
        throw DimensionError("column name count does not match variable count");
    for (std::size_t c = 0; c < values.cols(); ++c)
        for (std::size_t r = 0; r < values.rows(); ++r)
            if (!std::isfinite(values(r, c)))
                throw DimensionError("non-finite value at observation " + std::to_string(r + 1) +
                                     ", variable " + std::to_string(c + 1));
}

}  // namespace ginipca
