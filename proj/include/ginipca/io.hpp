#pragma once

#include <filesystem>
#include <string>

#include "ginipca/matrix.hpp"

namespace ginipca {

inline constexpr const char* kToolVersion = "1.0.0";

/// Reads a rectangular numeric CSV: header row of column names, comma
/// delimiter, period decimals, optional leading label column. Quoted fields
/// and CRLF line ends are accepted. Raises ParseError (with 1-based file
/// row/column) on ragged rows, non-numeric or empty cells, duplicate column
/// names, or a file without data rows.
DataMatrix load_csv(const std::filesystem::path& path, bool has_row_labels);

/// Parses CSV text already in memory; same rules as load_csv.
DataMatrix parse_csv(const std::string& text, bool has_row_labels);

/// True when the first column looks like labels: an empty header cell or a
/// non-numeric first data cell.
bool detect_row_labels(const std::string& text);

/// Writes values with 17 significant digits so that reloading is exact.
void save_csv(const DataMatrix& x, const std::filesystem::path& path, bool with_row_labels = true);
std::string to_csv(const DataMatrix& x, bool with_row_labels = true);

/// Parses one numeric cell (surrounding blanks allowed, leading '+' allowed).
/// Returns false for anything that is not a finite number.
bool parse_number(std::string_view cell, double& out);

/// The 24 x 6 cars data (capacity, power, speed, weight, width, length).
DataMatrix cars_dataset();

}  // namespace ginipca
