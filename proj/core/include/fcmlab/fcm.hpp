#pragma once

#include <cstdint>
#include <vector>

#include "fcmlab/dataset.hpp"
#include "fcmlab/membership.hpp"

namespace fcmlab {

/// Parameters of a fuzzy C-means fit.
struct FcmConfig {
    int cluster_count = 2;        ///< K; must satisfy 2 <= K < n at fit time
    double fuzziness = 2.0;       ///< m > 1; m -> 1 degenerates to crisp
    double epsilon = 1e-4;        ///< relative objective-change threshold
    int max_iterations = 100;
    int restarts = 10;            ///< independent seeded restarts, best kept
    std::uint64_t seed = 0;       ///< restart r draws its start from seed + r

    /// Throws InvalidArgumentError on out-of-domain parameters.
    void validate() const;
};

/// Converged state of one fuzzy C-means run: the winning restart's centroids
/// and memberships plus the objective value recorded after every iteration.
struct ClusterModel {
    Centroids centroids;
    MembershipMatrix memberships;
    std::vector<double> fw_trace;
    int iterations_run = 0;
    bool converged = false;
};

/// Picks `cluster_count` distinct data points without replacement,
/// deterministically for a given seed. Throws InvalidArgumentError when
/// cluster_count > n and DegenerateDataError when the data holds fewer
/// distinct points than requested.
Centroids initialize_centroids(const Dataset& data, int cluster_count,
                               std::uint64_t seed);

/// One membership update given fixed centroids. A point coinciding with a
/// single centroid gets full membership there; coinciding with several, the
/// membership splits equally among them.
MembershipMatrix update_memberships(const Dataset& data,
                                    const Centroids& centroids,
                                    double fuzziness);

/// One centroid update given fixed memberships: each center becomes the
/// membership^m weighted mean of the data. Throws EmptyClusterError when a
/// cluster's total membership mass is zero.
Centroids update_centroids(const Dataset& data,
                           const MembershipMatrix& memberships,
                           double fuzziness);

/// Full alternating-optimization driver with multiple seeded restarts.
/// Each restart alternates membership and centroid updates until the
/// relative change of the within-inertia objective drops below epsilon or
/// max_iterations is reached; the restart with the smallest final objective
/// wins. Deterministic for fixed (data, config).
ClusterModel fit(const Dataset& data, const FcmConfig& config);

} // namespace fcmlab
