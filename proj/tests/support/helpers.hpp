#pragma once

// Shared test utilities: dataset adapters, a scratch-directory guard and a
// minimal XML well-formedness checker for the emitted SVG files.

#include <cctype>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fcmlab/dataset.hpp"
#include "fcmlab/membership.hpp"

#include "support/oracles.hpp"

namespace testutil {

inline fcmlab::Dataset dataset_from_rows(const oracles::Rows& rows,
                                         std::vector<int> labels = {}) {
    return fcmlab::Dataset::from_rows(rows, std::move(labels));
}

inline oracles::Rows rows_of(const fcmlab::Dataset& data) {
    oracles::Rows rows(data.size(), std::vector<double>(data.dim()));
    for (std::size_t i = 0; i < data.size(); ++i) {
        const auto p = data.point(i);
        rows[i].assign(p.begin(), p.end());
    }
    return rows;
}

inline oracles::Rows rows_of(const fcmlab::MembershipMatrix& u) {
    oracles::Rows rows(u.rows(), std::vector<double>(u.clusters()));
    for (std::size_t i = 0; i < u.rows(); ++i) {
        const auto r = u.row(i);
        rows[i].assign(r.begin(), r.end());
    }
    return rows;
}

inline oracles::Rows rows_of(const fcmlab::Centroids& c) {
    oracles::Rows rows(c.count(), std::vector<double>(c.dim()));
    for (std::size_t k = 0; k < c.count(); ++k) {
        const auto r = c.center(k);
        rows[k].assign(r.begin(), r.end());
    }
    return rows;
}

inline fcmlab::MembershipMatrix membership_from_rows(const oracles::Rows& u) {
    std::vector<double> flat;
    for (const auto& row : u) {
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return fcmlab::MembershipMatrix(std::move(flat), u.size(),
                                    u.front().size());
}

inline fcmlab::Dataset scaled(const fcmlab::Dataset& data, double factor) {
    std::vector<double> values = data.values();
    for (double& v : values) {
        v *= factor;
    }
    return fcmlab::Dataset(std::move(values), data.dim(), data.labels(),
                           data.name());
}

/// Creates a unique scratch directory under the system temp dir and removes
/// it on destruction.
class TempDir {
public:
    explicit TempDir(const std::string& tag) {
        static std::mt19937_64 rng(std::random_device{}());
        path_ = std::filesystem::temp_directory_path() /
                ("fcmlab_" + tag + "_" + std::to_string(rng()));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

inline std::size_t count_occurrences(const std::string& text,
                                     const std::string& needle) {
    std::size_t count = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size())) {
        ++count;
    }
    return count;
}

/// Minimal XML well-formedness check: one root element, balanced and
/// properly nested tags, quoted attribute values. Good enough to validate
/// the emitted SVG structure without an XML library.
inline bool xml_well_formed(const std::string& text, std::string* why = nullptr) {
    const auto fail = [&](const std::string& reason) {
        if (why) {
            *why = reason;
        }
        return false;
    };
    std::vector<std::string> stack;
    std::size_t i = 0;
    bool seen_root = false;
    bool after_root = false;
    while (i < text.size()) {
        if (text[i] != '<') {
            if (!std::isspace(static_cast<unsigned char>(text[i])) &&
                stack.empty() && seen_root) {
                return fail("text content after the root element");
            }
            ++i;
            continue;
        }
        // Prolog / processing instruction.
        if (text.compare(i, 2, "<?") == 0) {
            const auto end = text.find("?>", i);
            if (end == std::string::npos) {
                return fail("unterminated processing instruction");
            }
            i = end + 2;
            continue;
        }
        if (text.compare(i, 4, "<!--") == 0) {
            const auto end = text.find("-->", i);
            if (end == std::string::npos) {
                return fail("unterminated comment");
            }
            i = end + 3;
            continue;
        }
        const auto end = text.find('>', i);
        if (end == std::string::npos) {
            return fail("unterminated tag");
        }
        std::string tag = text.substr(i + 1, end - i - 1);
        if (tag.empty()) {
            return fail("empty tag");
        }
        // Attribute values must be quoted: no '=' outside quotes followed by
        // an unquoted token.
        bool in_quote = false;
        char quote = 0;
        for (std::size_t p = 0; p < tag.size(); ++p) {
            const char ch = tag[p];
            if (in_quote) {
                if (ch == quote) {
                    in_quote = false;
                }
                continue;
            }
            if (ch == '"' || ch == '\'') {
                in_quote = true;
                quote = ch;
            } else if (ch == '=') {
                std::size_t q = p + 1;
                while (q < tag.size() &&
                       std::isspace(static_cast<unsigned char>(tag[q]))) {
                    ++q;
                }
                if (q >= tag.size() || (tag[q] != '"' && tag[q] != '\'')) {
                    return fail("unquoted attribute value");
                }
            }
        }
        if (in_quote) {
            return fail("unterminated attribute quote");
        }
        if (tag.front() == '/') {
            const std::string name = tag.substr(1);
            if (stack.empty() || stack.back() != name) {
                return fail("mismatched closing tag " + name);
            }
            stack.pop_back();
            if (stack.empty()) {
                after_root = true;
            }
        } else if (tag.back() == '/') {
            std::string name = tag.substr(0, tag.find_first_of(" \t\n/"));
            if (stack.empty()) {
                if (after_root || seen_root) {
                    return fail("multiple root elements");
                }
                seen_root = true;
                after_root = true;
            }
        } else {
            std::string name = tag.substr(0, tag.find_first_of(" \t\n"));
            if (stack.empty() && (seen_root && after_root)) {
                return fail("multiple root elements");
            }
            stack.push_back(name);
            seen_root = true;
        }
        i = end + 1;
    }
    if (!stack.empty()) {
        return fail("unclosed tag " + stack.back());
    }
    if (!seen_root) {
        return fail("no root element");
    }
    return true;
}

} // namespace testutil
