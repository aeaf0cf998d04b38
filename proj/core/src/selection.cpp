#include "fcmlab/selection.hpp"

#include <cmath>
#include <numbers>
#include <optional>

#include "fcmlab/errors.hpp"

namespace fcmlab {

namespace {

template <typename Get>
int arg_best(const KSweepResult& sweep_result, Get value_of,
             Orientation orientation) {
    std::optional<int> best_k;
    double best_value = 0.0;
    for (const auto& [k, record] : sweep_result.records) {
        double v = value_of(record);
        if (orientation == Orientation::Minimized) {
            v = -v;
        }
        if (!best_k || v > best_value) { // strict: ties keep the smaller K
            best_k = k;
            best_value = v;
        }
    }
    if (!best_k) {
        throw InvalidArgumentError("select_by_rule: empty sweep");
    }
    return *best_k;
}

} // namespace

KSweepResult sweep(const Dataset& data, const FcmConfig& base, int k_min,
                   int k_max) {
    if (k_min < 2 || k_min > k_max ||
        static_cast<std::size_t>(k_max) >= data.size()) {
        throw InsufficientRangeError("sweep: need 2 <= k_min <= k_max < n (got [" +
                                     std::to_string(k_min) + ", " +
                                     std::to_string(k_max) + "], n = " +
                                     std::to_string(data.size()) + ")");
    }
    {
        FcmConfig check = base;
        check.cluster_count = k_min;
        check.validate();
    }
    KSweepResult out;
    out.k_min = k_min;
    out.k_max = k_max;
    for (int k = k_min; k <= k_max; ++k) {
        FcmConfig cfg = base;
        cfg.cluster_count = k;
        try {
            ClusterModel model = fit(data, cfg);
            const InertiaTriple tri = inertia(data, model, cfg.fuzziness);
            IndexReport indices = compute_indices(data, model, cfg.fuzziness, tri);
            out.records.emplace(k, KFitRecord{tri, std::move(indices),
                                              model.iterations_run,
                                              model.converged,
                                              std::move(model.fw_trace)});
        } catch (const Error& e) {
            out.failures.emplace(k, e.what());
        }
    }
    return out;
}

RuleVerdicts select_by_rule(const KSweepResult& sweep_result) {
    RuleVerdicts v;
    v.v_pc = arg_best(sweep_result,
                      [](const KFitRecord& r) { return r.indices.v_pc; },
                      Orientation::Maximized);
    v.v_cl = arg_best(sweep_result,
                      [](const KFitRecord& r) { return r.indices.v_cl; },
                      Orientation::Maximized);
    v.fb = arg_best(sweep_result,
                    [](const KFitRecord& r) { return r.inertia.fb; },
                    Orientation::Maximized);
    v.v_fratio = arg_best(sweep_result,
                          [](const KFitRecord& r) { return r.indices.v_fratio; },
                          Orientation::Maximized);
    v.v_fch = arg_best(sweep_result,
                       [](const KFitRecord& r) { return r.indices.v_fch; },
                       Orientation::Maximized);
    v.v_fs = arg_best(sweep_result,
                      [](const KFitRecord& r) { return r.indices.v_fs; },
                      Orientation::Minimized);
    v.v_xb = arg_best(sweep_result,
                      [](const KFitRecord& r) { return r.indices.v_xb; },
                      Orientation::Minimized);
    v.tsfd = arg_best(sweep_result,
                      [](const KFitRecord& r) { return r.indices.tsfd; },
                      Orientation::Maximized);
    v.psfd = arg_best(sweep_result,
                      [](const KFitRecord& r) { return r.indices.psfd; },
                      Orientation::Maximized);
    return v;
}

std::map<int, double> index_series(const KSweepResult& sweep_result,
                                   double IndexReport::* field) {
    std::map<int, double> series;
    for (const auto& [k, record] : sweep_result.records) {
        series.emplace(k, record.indices.*field);
    }
    return series;
}

int elbow(const std::map<int, double>& series, Orientation orientation) {
    std::optional<int> best_k;
    double best_value = 0.0;
    for (const auto& [k, value] : series) {
        const auto lo = series.find(k - 1);
        const auto hi = series.find(k + 1);
        if (lo == series.end() || hi == series.end()) {
            continue;
        }
        double second_diff = (hi->second - value) - (value - lo->second);
        if (orientation == Orientation::Minimized) {
            second_diff = -second_diff;
        }
        if (!best_k || second_diff < best_value) { // ties keep the smaller K
            best_k = k;
            best_value = second_diff;
        }
    }
    if (!best_k) {
        throw InsufficientRangeError(
            "elbow: needs at least 3 consecutive K values");
    }
    return *best_k;
}

double ray_angle_degrees(double fb, double fi) {
    constexpr double rad_to_deg = 180.0 / std::numbers::pi;
    return 45.0 - std::atan(fb / fi) * rad_to_deg;
}

VisualTsfd visual_tsfd(const KSweepResult& sweep_result,
                       double plateau_threshold) {
    if (sweep_result.records.empty()) {
        throw InvalidArgumentError("visual_tsfd: empty sweep");
    }
    VisualTsfd out;
    for (const auto& [k, record] : sweep_result.records) {
        if (!(record.inertia.fi > 0.0)) {
            throw DegenerateDataError("visual_tsfd: non-positive total inertia at K=" +
                                      std::to_string(k));
        }
        out.angles_deg.emplace(k, ray_angle_degrees(record.inertia.fb,
                                                    record.inertia.fi));
    }
    const auto first = out.angles_deg.begin();
    const double quantum = plateau_threshold * first->second;
    double best_smaller = first->second;
    for (auto it = std::next(first); it != out.angles_deg.end(); ++it) {
        if (best_smaller - it->second > quantum) {
            out.candidates.push_back(it->first);
        }
        best_smaller = std::min(best_smaller, it->second);
    }
    if (out.candidates.empty()) {
        // No K improves noticeably on the first one, so the first K is the
        // reading.
        out.candidates.push_back(first->first);
    }
    return out;
}

} // namespace fcmlab
