#include "ginipca/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace ginipca::svg {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 540.0;
constexpr double kMargin = 60.0;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string header(const std::string& title) {
    return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
           "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
           num(kWidth) + "\" height=\"" + num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) + " " +
           num(kHeight) +
           "\" font-family=\"sans-serif\">\n"
           "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
           "<text x=\"" +
           num(kWidth / 2) + "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">" + escape(title) +
           "</text>\n";
}

struct Range {
    double lo;
    double hi;
};

Range padded_range(std::span<const double> v, bool include_zero) {
    double lo = include_zero ? 0.0 : INFINITY;
    double hi = include_zero ? 0.0 : -INFINITY;
    for (double x : v) {
        if (!std::isfinite(x)) continue;
        lo = std::min(lo, x);
        hi = std::max(hi, x);
    }
    if (!std::isfinite(lo)) return {-1.0, 1.0};
    if (hi - lo <= 0.0) return {lo - 1.0, hi + 1.0};
    const double pad = 0.08 * (hi - lo);
    return {lo - pad, hi + pad};
}

}  // namespace

std::string escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string scatter(std::span<const double> x, std::span<const double> y,
                    const std::vector<std::string>& labels, const ScatterSpec& spec) {
    const Range rx = padded_range(x, true);
    const Range ry = padded_range(y, true);
    const double plot_w = kWidth - 2 * kMargin;
    const double plot_h = kHeight - 2 * kMargin;
    auto px = [&](double v) { return kMargin + (v - rx.lo) / (rx.hi - rx.lo) * plot_w; };
    auto py = [&](double v) { return kHeight - kMargin - (v - ry.lo) / (ry.hi - ry.lo) * plot_h; };

    std::string out = header(spec.title);
    out += "<rect x=\"" + num(kMargin) + "\" y=\"" + num(kMargin) + "\" width=\"" + num(plot_w) +
           "\" height=\"" + num(plot_h) + "\" fill=\"none\" stroke=\"#444\"/>\n";
    out += "<line x1=\"" + num(px(0)) + "\" y1=\"" + num(kMargin) + "\" x2=\"" + num(px(0)) + "\" y2=\"" +
           num(kHeight - kMargin) + "\" stroke=\"#999\" stroke-dasharray=\"4 4\"/>\n";
    out += "<line x1=\"" + num(kMargin) + "\" y1=\"" + num(py(0)) + "\" x2=\"" + num(kWidth - kMargin) +
           "\" y2=\"" + num(py(0)) + "\" stroke=\"#999\" stroke-dasharray=\"4 4\"/>\n";
    out += "<text x=\"" + num(kWidth / 2) + "\" y=\"" + num(kHeight - 20) +
           "\" text-anchor=\"middle\" font-size=\"13\">" + escape(spec.x_label) + "</text>\n";
    out += "<text x=\"18\" y=\"" + num(kHeight / 2) + "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 18 " +
           num(kHeight / 2) + ")\">" + escape(spec.y_label) + "</text>\n";
    for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
        if (!std::isfinite(x[i]) || !std::isfinite(y[i])) continue;
        out += "<circle cx=\"" + num(px(x[i])) + "\" cy=\"" + num(py(y[i])) +
               "\" r=\"3.5\" fill=\"#1f5fa8\"/>\n";
        if (i < labels.size())
            out += "<text x=\"" + num(px(x[i]) + 5) + "\" y=\"" + num(py(y[i]) - 5) +
                   "\" font-size=\"10\">" + escape(labels[i]) + "</text>\n";
    }
    out += "</svg>\n";
    return out;
}

std::string bar_chart(std::span<const double> percent, const std::vector<std::string>& labels,
                      double reference, const std::string& title) {
    std::vector<double> with_ref(percent.begin(), percent.end());
    with_ref.push_back(reference);
    const Range r = padded_range(with_ref, true);
    const double bottom = 160.0;  // room for rotated labels
    const double plot_w = kWidth - 2 * kMargin;
    const double plot_h = kHeight - kMargin - bottom;
    auto py = [&](double v) { return kMargin + (r.hi - v) / (r.hi - r.lo) * plot_h; };
    const double slot = percent.empty() ? plot_w : plot_w / static_cast<double>(percent.size());

    std::string out = header(title);
    out += "<line x1=\"" + num(kMargin) + "\" y1=\"" + num(py(0)) + "\" x2=\"" + num(kWidth - kMargin) +
           "\" y2=\"" + num(py(0)) + "\" stroke=\"#444\"/>\n";
    for (std::size_t i = 0; i < percent.size(); ++i) {
        const double v = std::isfinite(percent[i]) ? percent[i] : 0.0;
        const double x0 = kMargin + slot * static_cast<double>(i) + 0.15 * slot;
        const double top = std::min(py(v), py(0));
        const double h = std::abs(py(v) - py(0));
        out += "<rect x=\"" + num(x0) + "\" y=\"" + num(top) + "\" width=\"" + num(0.7 * slot) +
               "\" height=\"" + num(h) + "\" fill=\"#6c8ebf\"/>\n";
        if (i < labels.size()) {
            const double lx = x0 + 0.35 * slot;
            const double ly = py(r.lo) + 10;
            out += "<text x=\"" + num(lx) + "\" y=\"" + num(ly) + "\" font-size=\"9\" text-anchor=\"end\" transform=\"rotate(-60 " +
                   num(lx) + " " + num(ly) + ")\">" + escape(labels[i]) + "</text>\n";
        }
    }
    out += "<line x1=\"" + num(kMargin) + "\" y1=\"" + num(py(reference)) + "\" x2=\"" +
           num(kWidth - kMargin) + "\" y2=\"" + num(py(reference)) + "\" stroke=\"#d62728\" stroke-width=\"1.5\"/>\n";
    out += "<text x=\"" + num(kWidth - kMargin) + "\" y=\"" + num(py(reference) - 4) +
           "\" text-anchor=\"end\" font-size=\"11\" fill=\"#d62728\">" + num(reference) + "%</text>\n";
    out += "</svg>\n";
    return out;
}

}  // namespace ginipca::svg
