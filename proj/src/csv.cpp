#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <string_view>

#include "ginipca/errors.hpp"
#include "ginipca/io.hpp"

namespace ginipca {

namespace {

using Record = std::vector<std::string>;

// Splits CSV text into records. Handles quotes, doubled quotes and CRLF.
std::vector<Record> split_records(std::string_view text) {
    if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);
    std::vector<Record> records;
    Record current;
    std::string field;
    bool in_quotes = false;
    bool field_started = false;
    std::size_t line = 1;

    auto end_field = [&] {
        current.push_back(std::move(field));
        field.clear();
        field_started = false;
    };
    auto end_record = [&] {
        end_field();
        const bool blank = current.size() == 1 && current[0].empty();
        if (!blank) records.push_back(std::move(current));
        current.clear();
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        const char ch = text[i];
        if (in_quotes) {
            if (ch == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                if (ch == '\n') ++line;
                field.push_back(ch);
            }
            continue;
        }
        switch (ch) {
            case '"':
                if (field_started && !field.empty())
                    throw ParseError("unexpected quote inside unquoted field", line);
                in_quotes = true;
                field_started = true;
                break;
            case ',':
                end_field();
                break;
            case '\r':
                break;
            case '\n':
                end_record();
                ++line;
                break;
            default:
                field.push_back(ch);
                field_started = true;
        }
    }
    if (in_quotes) throw ParseError("unterminated quoted field", line);
    if (!field.empty() || !current.empty()) end_record();
    return records;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

std::string quote_if_needed(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

bool parse_number(std::string_view cell, double& out) {
    cell = trim(cell);
    if (cell.starts_with('+')) cell.remove_prefix(1);
    if (cell.empty()) return false;
    const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), out);
    return ec == std::errc() && ptr == cell.data() + cell.size() && std::isfinite(out);
}

bool detect_row_labels(const std::string& text) {
    const auto records = split_records(text);
    if (records.empty()) return false;
    if (trim(records[0][0]).empty()) return true;
    if (records.size() < 2) return false;
    double tmp = 0.0;
    return !parse_number(records[1][0], tmp);
}

DataMatrix parse_csv(const std::string& text, bool has_row_labels) {
    const auto records = split_records(text);
    if (records.empty()) throw ParseError("empty CSV input");

    const Record& header = records[0];
    const std::size_t offset = has_row_labels ? 1 : 0;
    if (header.size() <= offset) throw ParseError("header has no variable columns", 1);
    const std::size_t width = header.size();

    DataMatrix out;
    std::set<std::string> seen;
    for (std::size_t c = offset; c < width; ++c) {
        std::string name(trim(header[c]));
        if (name.empty()) throw ParseError("empty column name", 1, c + 1);
        if (!seen.insert(name).second) throw ParseError("duplicate column name '" + name + "'", 1, c + 1);
        out.column_names.push_back(std::move(name));
    }

    const std::size_t n = records.size() - 1;
    if (n == 0) throw ParseError("no data rows");
    out.values = Matrix(n, width - offset);
    for (std::size_t r = 1; r < records.size(); ++r) {
        const Record& rec = records[r];
        if (rec.size() != width)
            throw ParseError("expected " + std::to_string(width) + " fields, found " +
                                 std::to_string(rec.size()),
                             r + 1);
        out.row_labels.push_back(has_row_labels ? std::string(trim(rec[0])) : std::to_string(r));
        for (std::size_t c = offset; c < width; ++c) {
            double v = 0.0;
            if (!parse_number(rec[c], v))
                throw ParseError("non-numeric cell '" + rec[c] + "'", r + 1, c + 1);
            out.values(r - 1, c - offset) = v;
        }
    }
    return out;
}

DataMatrix load_csv(const std::filesystem::path& path, bool has_row_labels) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_csv(buf.str(), has_row_labels);
}

std::string to_csv(const DataMatrix& x, bool with_row_labels) {
    std::string out;
    if (with_row_labels) out += "label";
    for (std::size_t c = 0; c < x.n_vars(); ++c) {
        if (with_row_labels || c > 0) out += ',';
        out += quote_if_needed(x.column_names[c]);
    }
    out += '\n';
    char buf[40];
    for (std::size_t r = 0; r < x.n_obs(); ++r) {
        if (with_row_labels) out += quote_if_needed(x.row_labels[r]);
        for (std::size_t c = 0; c < x.n_vars(); ++c) {
            if (with_row_labels || c > 0) out += ',';
            std::snprintf(buf, sizeof buf, "%.17g", x.values(r, c));
            out += buf;
        }
        out += '\n';
    }
    return out;
}

void save_csv(const DataMatrix& x, const std::filesystem::path& path, bool with_row_labels) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write '" + path.string() + "'");
    out << to_csv(x, with_row_labels);
}

}  // namespace ginipca
