#include "fcmlab/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "fcmlab/errors.hpp"

namespace fcmlab {

std::string format_double(double value) {
    char buf[64];
    const auto result = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, result.ptr);
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    for (char c : line) {
        if (c == ',') {
            cells.push_back(cell);
            cell.clear();
        } else {
            cell.push_back(c);
        }
    }
    cells.push_back(cell);
    return cells;
}

std::string trim(std::string s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) {
        return "";
    }
    const auto end = s.find_last_not_of(" \t\r");
    s = s.substr(begin, end - begin + 1);
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"') {
        s = s.substr(1, s.size() - 2);
    }
    return s;
}

bool parse_full_double(const std::string& text, double& out) {
    const char* begin = text.data();
    const char* end = begin + text.size();
    const auto result = std::from_chars(begin, end, out);
    return result.ec == std::errc{} && result.ptr == end;
}

bool parse_full_int(const std::string& text, long& out) {
    const char* begin = text.data();
    const char* end = begin + text.size();
    const auto result = std::from_chars(begin, end, out);
    return result.ec == std::errc{} && result.ptr == end;
}

} // namespace

Dataset load_csv(const std::filesystem::path& path,
                 const std::optional<std::string>& label_column) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }

    std::string line;
    if (!std::getline(in, line)) {
        throw ParseError(path.string() + ": empty file, expected a header row");
    }
    // Strip a UTF-8 byte order mark if present.
    if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) {
        line.erase(0, 3);
    }
    std::vector<std::string> header = split_csv_line(line);
    for (auto& h : header) {
        h = trim(h);
    }

    std::ptrdiff_t label_index = -1;
    if (label_column) {
        for (std::size_t j = 0; j < header.size(); ++j) {
            if (header[j] == *label_column) {
                label_index = static_cast<std::ptrdiff_t>(j);
                break;
            }
        }
        if (label_index < 0) {
            throw ParseError(path.string() + ": label column '" + *label_column +
                             "' not found in header");
        }
    }
    const std::size_t d = header.size() - (label_index >= 0 ? 1 : 0);
    if (d < 1) {
        throw ParseError(path.string() + ": no feature columns");
    }

    std::vector<double> values;
    std::vector<long> int_labels;
    std::vector<std::string> raw_labels;
    bool labels_all_integer = true;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) {
            continue;
        }
        const std::vector<std::string> cells = split_csv_line(line);
        if (cells.size() != header.size()) {
            throw ParseError(path.string() + ": line " + std::to_string(line_no) +
                             ": expected " + std::to_string(header.size()) +
                             " columns, got " + std::to_string(cells.size()));
        }
        for (std::size_t j = 0; j < cells.size(); ++j) {
            const std::string cell = trim(cells[j]);
            if (static_cast<std::ptrdiff_t>(j) == label_index) {
                long v = 0;
                if (parse_full_int(cell, v)) {
                    int_labels.push_back(v);
                } else {
                    labels_all_integer = false;
                    int_labels.push_back(0);
                }
                raw_labels.push_back(cell);
                continue;
            }
            double v = 0.0;
            if (!parse_full_double(cell, v) || !std::isfinite(v)) {
                throw ParseError(path.string() + ": line " +
                                 std::to_string(line_no) + ": column '" +
                                 header[j] + "': not a finite number: '" +
                                 cell + "'");
            }
            values.push_back(v);
        }
    }

    const std::size_t n = label_index >= 0 ? raw_labels.size() : values.size() / d;
    if (n == 0) {
        throw DegenerateDataError(path.string() + ": no data rows");
    }

    bool all_identical = true;
    for (std::size_t i = 1; i < n && all_identical; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            if (values[i * d + j] != values[j]) {
                all_identical = false;
                break;
            }
        }
    }
    if (n > 1 && all_identical) {
        throw DegenerateDataError(path.string() + ": all points are identical");
    }

    std::vector<int> labels;
    if (label_index >= 0) {
        labels.reserve(n);
        if (labels_all_integer) {
            for (long v : int_labels) {
                labels.push_back(static_cast<int>(v));
            }
        } else {
            // Map label text to 1-based ids in order of first appearance.
            std::map<std::string, int> ids;
            for (const auto& raw : raw_labels) {
                auto [it, inserted] =
                    ids.emplace(raw, static_cast<int>(ids.size()) + 1);
                labels.push_back(it->second);
            }
        }
    }
    return Dataset(std::move(values), d, std::move(labels),
                   path.stem().string());
}

void save_csv(const Dataset& data, const std::filesystem::path& path) {
    std::ostringstream out;
    for (std::size_t j = 0; j < data.dim(); ++j) {
        if (j > 0) {
            out << ',';
        }
        out << 'x' << (j + 1);
    }
    if (data.has_labels()) {
        out << ",label";
    }
    out << '\n';
    for (std::size_t i = 0; i < data.size(); ++i) {
        const auto p = data.point(i);
        for (std::size_t j = 0; j < data.dim(); ++j) {
            if (j > 0) {
                out << ',';
            }
            out << format_double(p[j]);
        }
        if (data.has_labels()) {
            out << ',' << data.labels()[i];
        }
        out << '\n';
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw IoError("cannot write " + path.string());
    }
    file << out.str();
    if (!file) {
        throw IoError("failed writing " + path.string());
    }
}

} // namespace fcmlab
