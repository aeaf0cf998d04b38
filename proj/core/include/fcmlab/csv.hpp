#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "fcmlab/dataset.hpp"

namespace fcmlab {

/// Shortest round-trip decimal formatting ('.' separator, locale-free).
/// Parsing the result recovers the exact same double.
std::string format_double(double value);

/// Loads a headered, comma-delimited CSV. All columns except the named label
/// column must be numeric; rows with non-numeric features are rejected with
/// their line number. Integer labels are used as-is, any other label text is
/// mapped to 1-based ids in order of first appearance.
///
/// Errors: IoError (missing/unreadable file), ParseError (malformed header
/// or row, unknown label column), DegenerateDataError (no data rows, or all
/// points identical).
Dataset load_csv(const std::filesystem::path& path,
                 const std::optional<std::string>& label_column = {});

/// Writes a dataset as CSV with feature columns x1..xd and, when labels are
/// present, a trailing `label` column. Feature values use format_double, so
/// a load_csv round trip is bit-exact.
void save_csv(const Dataset& data, const std::filesystem::path& path);

} // namespace fcmlab
