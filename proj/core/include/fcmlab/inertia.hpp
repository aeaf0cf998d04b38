#pragma once

#include <cmath>
#include <cstddef>

#include "fcmlab/dataset.hpp"
#include "fcmlab/fcm.hpp"
#include "fcmlab/membership.hpp"

namespace fcmlab {

inline double membership_power(double u, double m) {
    return m == 2.0 ? u * u : std::pow(u, m);
}

/// Within / between / total fuzzy inertia of a fitted model. The three
/// values are always computed independently from their definitions; fi is
/// never derived as fw + fb.
struct InertiaTriple {
    double fw = 0.0;
    double fb = 0.0;
    double fi = 0.0;
};

/// sum_i sum_k u_ik^m d2(x_i, c_k) -- compactness.
double fuzzy_within(const Dataset& data, const MembershipMatrix& memberships,
                    const Centroids& centroids, double fuzziness);
/// sum_i sum_k u_ik^m d2(c_k, mean) -- separability.
double fuzzy_between(const Dataset& data, const MembershipMatrix& memberships,
                     const Centroids& centroids, double fuzziness);
/// sum_i sum_k u_ik^m d2(x_i, mean) -- total scatter.
double fuzzy_total(const Dataset& data, const MembershipMatrix& memberships,
                   double fuzziness);

InertiaTriple inertia(const Dataset& data, const ClusterModel& model,
                      double fuzziness);

/// Partition coefficient, (1/n) sum u_ik^2. Range [1/K, 1], maximized.
double partition_coefficient(const MembershipMatrix& memberships);

/// Chen-Linkens index: mean max-membership minus mean pairwise overlap.
/// Range [0, 1], maximized.
double chen_linkens(const MembershipMatrix& memberships);

/// Ratio index fb/fw, its Calinski-style penalized variant, and the
/// Fukuyama-Sugeno difference fw - fb.
struct CrispFamily {
    double v_fratio = 0.0; ///< fb/fw, maximized; +inf when fw == 0
    double v_fch = 0.0;    ///< v_fratio * (n-K)/(K-1), maximized
    double v_fs = 0.0;     ///< fw - fb, minimized
};
CrispFamily crisp_and_penalized_family(const InertiaTriple& tri,
                                       std::size_t point_count,
                                       int cluster_count);

/// Xie-Beni index: fuzzy within-inertia over n times the smallest pairwise
/// squared centroid distance. Minimized. Throws DegenerateDataError when two
/// centroids coincide (min squared distance below 1e-12).
double xie_beni(const Dataset& data, const ClusterModel& model,
                double fuzziness);

/// Standardized fuzzy difference family. sfd = (fb-fw)/fi in [-1,1];
/// tsfd = (1+sfd)/2 in [0,1], maximized; psfd = tsfd * (n-K)/(K-1),
/// maximized. Throws DegenerateDataError when fi == 0.
struct SfdFamily {
    double sfd = 0.0;
    double tsfd = 0.0;
    double psfd = 0.0;
};
SfdFamily sfd_family(const InertiaTriple& tri, std::size_t point_count,
                     int cluster_count);

/// All validity indices of one fitted model, evaluated on the same
/// memberships and centroids.
struct IndexReport {
    double v_pc = 0.0;
    double v_cl = 0.0;
    double v_fratio = 0.0;
    double v_fch = 0.0;
    double v_fs = 0.0;
    double v_xb = 0.0;
    double sfd = 0.0;
    double tsfd = 0.0;
    double psfd = 0.0;
    int cluster_count = 0;
    std::size_t point_count = 0;
};

IndexReport compute_indices(const Dataset& data, const ClusterModel& model,
                            double fuzziness, const InertiaTriple& tri);
IndexReport compute_indices(const Dataset& data, const ClusterModel& model,
                            double fuzziness);

} // namespace fcmlab
