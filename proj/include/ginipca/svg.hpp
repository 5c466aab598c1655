#pragma once

#include <span>
#include <string>
#include <vector>

// Standalone SVG documents. Plotting reads its inputs and never modifies them.

namespace ginipca::svg {

struct ScatterSpec {
    std::string title;
    std::string x_label;
    std::string y_label;
};

/// Labelled scatter plot of (x_i, y_i), with dashed lines through the origin.
std::string scatter(std::span<const double> x, std::span<const double> y,
                    const std::vector<std::string>& labels, const ScatterSpec& spec);

/// Vertical bars in percent with a horizontal reference rule at `reference`.
std::string bar_chart(std::span<const double> percent, const std::vector<std::string>& labels,
                      double reference, const std::string& title);

/// Escapes &, <, >, " for text nodes and attributes.
std::string escape(const std::string& s);

}  // namespace ginipca::svg
