#pragma once

#include <filesystem>
#include <map>
#include <string>

#include "fcmlab/selection.hpp"

namespace fcmlab {

/// Writes the (fi, fb) chart for a sweep: equal-scale axes, the solid
/// diagonal fb = fi from the origin, one dashed ray from the origin through
/// every K's point, a polyline through the points in increasing K, and a K
/// label at each marker. Output is deterministic (no timestamps).
void emit_visual_tsfd_svg(const KSweepResult& sweep_result,
                          const std::filesystem::path& path,
                          const std::string& title = "");

/// Writes a K-vs-value line chart. When at least three consecutive K values
/// are present, the elbow K is highlighted. `series_name` labels the
/// vertical axis.
void emit_elbow_svg(const std::map<int, double>& series,
                    const std::string& series_name,
                    const std::filesystem::path& path,
                    const std::string& title = "");

} // namespace fcmlab
