#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ginipca {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Mismatched or insufficient dimensions.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Out-of-domain parameter (nu <= 1, theta < 1, ...).
class ParameterError : public Error {
public:
    using Error::Error;
};

/// A constant column has zero Gini mean difference and cannot be standardized.
class DegenerateColumnError : public Error {
public:
    DegenerateColumnError(std::size_t column, const std::string& name)
        : Error("degenerate column " + std::to_string(column) + " ('" + name +
                "'): zero dispersion"),
          column_(column) {}

    std::size_t column() const noexcept { return column_; }

private:
    std::size_t column_;
};

/// Input violates a documented precondition (e.g. asymmetric matrix given to a symmetric solver).
class ContractError : public Error {
public:
    using Error::Error;
};

/// Iterative numeric routine failed.
class NumericError : public Error {
public:
    NumericError(const std::string& what, int iterations)
        : Error(what + " after " + std::to_string(iterations) + " iterations"),
          iterations_(iterations) {}

    int iterations() const noexcept { return iterations_; }

private:
    int iterations_;
};

/// Malformed input file. Row and column are 1-based positions in the file, 0 when not applicable.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t row = 0, std::size_t column = 0)
        : Error(format(what, row, column)), row_(row), column_(column) {}

    std::size_t row() const noexcept { return row_; }
    std::size_t column() const noexcept { return column_; }

private:
    static std::string format(const std::string& what, std::size_t row, std::size_t column) {
        if (row == 0) return what;
        std::string out = what + " at row " + std::to_string(row);
        if (column != 0) out += ", column " + std::to_string(column);
        return out;
    }

    std::size_t row_;
    std::size_t column_;
};

}  // namespace ginipca
