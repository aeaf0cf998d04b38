#include "fcmlab/fcm.hpp"

#include <cmath>
#include <cstring>
#include <limits>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "fcmlab/errors.hpp"
#include "fcmlab/inertia.hpp"
#include "fcmlab/rng.hpp"

namespace fcmlab {

namespace {

// Indices of the first occurrence of each numerically distinct point, in
// data order. -0.0 is normalized so it compares equal to 0.0.
std::vector<std::size_t> distinct_point_indices(const Dataset& data) {
    std::unordered_set<std::string> seen;
    std::vector<std::size_t> distinct;
    const std::size_t d = data.dim();
    std::string key(d * sizeof(double), '\0');
    for (std::size_t i = 0; i < data.size(); ++i) {
        const auto p = data.point(i);
        for (std::size_t j = 0; j < d; ++j) {
            const double v = p[j] == 0.0 ? 0.0 : p[j];
            std::memcpy(key.data() + j * sizeof(double), &v, sizeof(double));
        }
        if (seen.insert(key).second) {
            distinct.push_back(i);
        }
    }
    return distinct;
}

Centroids sample_centroids(const Dataset& data,
                           const std::vector<std::size_t>& distinct,
                           int cluster_count, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::size_t> pool = distinct;
    const std::size_t k = static_cast<std::size_t>(cluster_count);
    std::vector<double> centers;
    centers.reserve(k * data.dim());
    // Partial Fisher-Yates: the first k slots become the sample.
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = i + rng.below(pool.size() - i);
        std::swap(pool[i], pool[j]);
        const auto p = data.point(pool[i]);
        centers.insert(centers.end(), p.begin(), p.end());
    }
    return Centroids(std::move(centers), data.dim());
}

struct RestartResult {
    Centroids centroids;
    MembershipMatrix memberships;
    std::vector<double> fw_trace;
    bool converged = false;
};

RestartResult run_restart(const Dataset& data,
                          const std::vector<std::size_t>& distinct,
                          const FcmConfig& cfg, std::uint64_t seed) {
    Centroids centroids = sample_centroids(data, distinct, cfg.cluster_count, seed);
    std::optional<MembershipMatrix> memberships;
    std::vector<double> fw_trace;
    fw_trace.reserve(static_cast<std::size_t>(cfg.max_iterations));
    bool converged = false;
    double prev_fw = std::numeric_limits<double>::infinity();

    for (int t = 0; t < cfg.max_iterations; ++t) {
        memberships = update_memberships(data, centroids, cfg.fuzziness);
        centroids = update_centroids(data, *memberships, cfg.fuzziness);
        const double fw = fuzzy_within(data, *memberships, centroids, cfg.fuzziness);
        fw_trace.push_back(fw);
        if (fw == 0.0) {
            // Perfect compactness; no further improvement possible.
            converged = true;
            break;
        }
        if (std::abs(fw - prev_fw) / fw < cfg.epsilon) {
            converged = true;
            break;
        }
        prev_fw = fw;
    }
    return RestartResult{std::move(centroids), std::move(*memberships),
                         std::move(fw_trace), converged};
}

} // namespace

void FcmConfig::validate() const {
    if (cluster_count < 2) {
        throw InvalidArgumentError("FcmConfig: cluster_count must be >= 2");
    }
    if (!(fuzziness > 1.0)) {
        throw InvalidArgumentError("FcmConfig: fuzziness must be > 1");
    }
    if (!(epsilon > 0.0)) {
        throw InvalidArgumentError("FcmConfig: epsilon must be > 0");
    }
    if (max_iterations < 1) {
        throw InvalidArgumentError("FcmConfig: max_iterations must be >= 1");
    }
    if (restarts < 1) {
        throw InvalidArgumentError("FcmConfig: restarts must be >= 1");
    }
}

Centroids initialize_centroids(const Dataset& data, int cluster_count,
                               std::uint64_t seed) {
    if (cluster_count < 2) {
        throw InvalidArgumentError("initialize_centroids: cluster_count must be >= 2");
    }
    if (static_cast<std::size_t>(cluster_count) > data.size()) {
        throw InvalidArgumentError("initialize_centroids: cluster_count " +
                                   std::to_string(cluster_count) +
                                   " exceeds point count " +
                                   std::to_string(data.size()));
    }
    const auto distinct = distinct_point_indices(data);
    if (distinct.size() < static_cast<std::size_t>(cluster_count)) {
        throw DegenerateDataError("initialize_centroids: only " +
                                  std::to_string(distinct.size()) +
                                  " distinct points for " +
                                  std::to_string(cluster_count) + " clusters");
    }
    return sample_centroids(data, distinct, cluster_count, seed);
}

MembershipMatrix update_memberships(const Dataset& data,
                                    const Centroids& centroids,
                                    double fuzziness) {
    if (!(fuzziness > 1.0)) {
        throw InvalidArgumentError("update_memberships: fuzziness must be > 1");
    }
    if (centroids.dim() != data.dim()) {
        throw InvalidArgumentError("update_memberships: dimension mismatch");
    }
    const std::size_t n = data.size();
    const std::size_t k = centroids.count();
    const double expo = 1.0 / (fuzziness - 1.0);

    std::vector<double> values(n * k, 0.0);
    std::vector<double> dist2(k), weight(k);
    for (std::size_t i = 0; i < n; ++i) {
        const auto x = data.point(i);
        std::size_t zero_count = 0;
        for (std::size_t c = 0; c < k; ++c) {
            dist2[c] = squared_euclidean(x, centroids.center(c));
            if (dist2[c] == 0.0) {
                ++zero_count;
            }
        }
        double* row = values.data() + i * k;
        if (zero_count > 0) {
            // Coincident with one or more centroids: all membership goes
            // there, split equally on ties.
            const double share = 1.0 / static_cast<double>(zero_count);
            for (std::size_t c = 0; c < k; ++c) {
                row[c] = dist2[c] == 0.0 ? share : 0.0;
            }
            continue;
        }
        double sum = 0.0;
        std::size_t overflow_count = 0;
        for (std::size_t c = 0; c < k; ++c) {
            weight[c] = expo == 1.0 ? 1.0 / dist2[c] : std::pow(dist2[c], -expo);
            if (!std::isfinite(weight[c])) {
                ++overflow_count;
            }
            sum += weight[c];
        }
        if (overflow_count > 0 || !std::isfinite(sum)) {
            // A distance so small its reciprocal power overflowed: treat the
            // offending centroids as coincident.
            const double share = 1.0 / static_cast<double>(overflow_count);
            for (std::size_t c = 0; c < k; ++c) {
                row[c] = std::isfinite(weight[c]) ? 0.0 : share;
            }
            continue;
        }
        for (std::size_t c = 0; c < k; ++c) {
            row[c] = weight[c] / sum;
        }
    }
    return MembershipMatrix(std::move(values), n, k);
}

Centroids update_centroids(const Dataset& data,
                           const MembershipMatrix& memberships,
                           double fuzziness) {
    if (memberships.rows() != data.size()) {
        throw InvalidArgumentError("update_centroids: row count mismatch");
    }
    const std::size_t n = data.size();
    const std::size_t k = memberships.clusters();
    const std::size_t d = data.dim();

    std::vector<double> acc(k * d, 0.0);
    std::vector<double> mass(k, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const auto x = data.point(i);
        for (std::size_t c = 0; c < k; ++c) {
            const double w = membership_power(memberships.at(i, c), fuzziness);
            mass[c] += w;
            double* center = acc.data() + c * d;
            for (std::size_t j = 0; j < d; ++j) {
                center[j] += w * x[j];
            }
        }
    }
    for (std::size_t c = 0; c < k; ++c) {
        if (mass[c] <= 0.0) {
            throw EmptyClusterError("update_centroids: cluster " +
                                    std::to_string(c) +
                                    " has zero membership mass");
        }
        for (std::size_t j = 0; j < d; ++j) {
            acc[c * d + j] /= mass[c];
        }
    }
    return Centroids(std::move(acc), d);
}

ClusterModel fit(const Dataset& data, const FcmConfig& config) {
    config.validate();
    if (static_cast<std::size_t>(config.cluster_count) >= data.size()) {
        throw InvalidArgumentError("fit: cluster_count must be below the point count");
    }
    const auto distinct = distinct_point_indices(data);
    if (distinct.size() < static_cast<std::size_t>(config.cluster_count)) {
        throw DegenerateDataError("fit: only " + std::to_string(distinct.size()) +
                                  " distinct points for " +
                                  std::to_string(config.cluster_count) +
                                  " clusters");
    }

    std::optional<RestartResult> best;
    std::string last_failure;
    for (int r = 0; r < config.restarts; ++r) {
        try {
            RestartResult result =
                run_restart(data, distinct, config, config.seed + static_cast<std::uint64_t>(r));
            if (!best || result.fw_trace.back() < best->fw_trace.back()) {
                best = std::move(result);
            }
        } catch (const EmptyClusterError& e) {
            last_failure = e.what();
        }
    }
    if (!best) {
        throw EmptyClusterError("fit: all restarts degenerated (" + last_failure + ")");
    }
    const int iterations = static_cast<int>(best->fw_trace.size());
    return ClusterModel{std::move(best->centroids), std::move(best->memberships),
                        std::move(best->fw_trace), iterations, best->converged};
}

} // namespace fcmlab
