#pragma once

#include <map>
#include <string>
#include <vector>

#include "fcmlab/fcm.hpp"
#include "fcmlab/inertia.hpp"

namespace fcmlab {

/// Outcome of one K during a sweep: inertia triple, every index, and a
/// summary of the winning restart.
struct KFitRecord {
    InertiaTriple inertia;
    IndexReport indices;
    int iterations = 0;
    bool converged = false;
    std::vector<double> fw_trace;
};

/// Per-K results over an inclusive range. A K whose fit failed appears in
/// `failures` with a diagnostic instead of in `records`.
struct KSweepResult {
    int k_min = 0;
    int k_max = 0;
    std::map<int, KFitRecord> records;
    std::map<int, std::string> failures;
};

/// Fits every K in [k_min, k_max] with the template config (its
/// cluster_count is overridden) and records all indices. Throws
/// InsufficientRangeError unless 2 <= k_min <= k_max < n; per-K errors are
/// recorded, not propagated.
KSweepResult sweep(const Dataset& data, const FcmConfig& base, int k_min,
                   int k_max);

enum class Orientation { Maximized, Minimized };

/// Per-index chosen K under each index's own optimization rule
/// (argmax or argmin over the sweep; ties go to the smaller K).
///
/// `fb` maximizes the raw between-inertia. Unlike fb/fw, whose argmax drifts
/// to the top of the range as fw shrinks with K, raw fb peaks where the
/// membership mass stays concentrated, which makes it a usable verdict
/// column; it is what the report table prints.
struct RuleVerdicts {
    int v_pc = 0;
    int v_cl = 0;
    int fb = 0;
    int v_fratio = 0;
    int v_fch = 0;
    int v_fs = 0;
    int v_xb = 0;
    int tsfd = 0;
    int psfd = 0;
};
RuleVerdicts select_by_rule(const KSweepResult& sweep_result);

/// Extracts {K -> index value} from a sweep for one IndexReport field.
std::map<int, double> index_series(const KSweepResult& sweep_result,
                                   double IndexReport::* field);

/// Algebraic elbow rule: the K minimizing the second difference
/// (i_{K+1} - i_K) - (i_K - i_{K-1}). Minimized series are negated first;
/// ties go to the smaller K. Throws InsufficientRangeError when no K has
/// both neighbors present.
int elbow(const std::map<int, double>& series, Orientation orientation);

/// Angle in degrees between the fb = fi diagonal and the origin ray through
/// (fi, fb); 0 on the diagonal, 45 on the fi axis.
double ray_angle_degrees(double fb, double fi);

/// Angle-based reading of the (fi, fb) chart. `candidates` lists every K
/// whose angle improves on the best smaller-K angle by more than
/// plateau_threshold times the angle at the first K; when nothing qualifies
/// the first K is the single candidate.
struct VisualTsfd {
    std::map<int, double> angles_deg;
    std::vector<int> candidates;
};
VisualTsfd visual_tsfd(const KSweepResult& sweep_result,
                       double plateau_threshold = 0.10);

} // namespace fcmlab
