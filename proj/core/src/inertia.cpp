#include "fcmlab/inertia.hpp"

#include <limits>
#include <string>

#include "fcmlab/errors.hpp"

namespace fcmlab {

double fuzzy_within(const Dataset& data, const MembershipMatrix& memberships,
                    const Centroids& centroids, double fuzziness) {
    double sum = 0.0;
    for (std::size_t i = 0; i < data.size(); ++i) {
        const auto x = data.point(i);
        for (std::size_t k = 0; k < centroids.count(); ++k) {
            sum += membership_power(memberships.at(i, k), fuzziness) *
                   squared_euclidean(x, centroids.center(k));
        }
    }
    return sum;
}

double fuzzy_between(const Dataset& data, const MembershipMatrix& memberships,
                     const Centroids& centroids, double fuzziness) {
    const auto mean = grand_mean(data);
    const std::span<const double> mean_span(mean);
    double sum = 0.0;
    for (std::size_t i = 0; i < data.size(); ++i) {
        for (std::size_t k = 0; k < centroids.count(); ++k) {
            sum += membership_power(memberships.at(i, k), fuzziness) *
                   squared_euclidean(centroids.center(k), mean_span);
        }
    }
    return sum;
}

double fuzzy_total(const Dataset& data, const MembershipMatrix& memberships,
                   double fuzziness) {
    const auto mean = grand_mean(data);
    const std::span<const double> mean_span(mean);
    double sum = 0.0;
    for (std::size_t i = 0; i < data.size(); ++i) {
        const double d2 = squared_euclidean(data.point(i), mean_span);
        for (std::size_t k = 0; k < memberships.clusters(); ++k) {
            sum += membership_power(memberships.at(i, k), fuzziness) * d2;
        }
    }
    return sum;
}

InertiaTriple inertia(const Dataset& data, const ClusterModel& model,
                      double fuzziness) {
    if (!(fuzziness > 1.0)) {
        throw InvalidArgumentError("inertia: fuzziness must be > 1");
    }
    return InertiaTriple{
        fuzzy_within(data, model.memberships, model.centroids, fuzziness),
        fuzzy_between(data, model.memberships, model.centroids, fuzziness),
        fuzzy_total(data, model.memberships, fuzziness),
    };
}

double partition_coefficient(const MembershipMatrix& memberships) {
    double sum = 0.0;
    for (std::size_t i = 0; i < memberships.rows(); ++i) {
        for (std::size_t k = 0; k < memberships.clusters(); ++k) {
            const double u = memberships.at(i, k);
            sum += u * u;
        }
    }
    return sum / static_cast<double>(memberships.rows());
}

double chen_linkens(const MembershipMatrix& memberships) {
    const std::size_t n = memberships.rows();
    const std::size_t k = memberships.clusters();

    double max_term = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double best = 0.0;
        for (std::size_t c = 0; c < k; ++c) {
            best = std::max(best, memberships.at(i, c));
        }
        max_term += best;
    }
    max_term /= static_cast<double>(n);

    double overlap_term = 0.0;
    for (std::size_t a = 0; a + 1 < k; ++a) {
        for (std::size_t b = a + 1; b < k; ++b) {
            double pair_sum = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                pair_sum += std::min(memberships.at(i, a), memberships.at(i, b));
            }
            overlap_term += pair_sum / static_cast<double>(n);
        }
    }
    const double pair_count = static_cast<double>(k * (k - 1) / 2);
    return max_term - overlap_term / pair_count;
}

CrispFamily crisp_and_penalized_family(const InertiaTriple& tri,
                                       std::size_t point_count,
                                       int cluster_count) {
    if (cluster_count < 2 ||
        static_cast<std::size_t>(cluster_count) >= point_count) {
        throw InvalidArgumentError(
            "crisp_and_penalized_family: need 2 <= K < n");
    }
    CrispFamily out;
    if (tri.fw == 0.0) {
        // Perfect compactness: the ratio forms carry a signaled infinity so a
        // sweep can still rank this K.
        out.v_fratio = std::numeric_limits<double>::infinity();
        out.v_fch = std::numeric_limits<double>::infinity();
    } else {
        out.v_fratio = tri.fb / tri.fw;
        const double penalty =
            static_cast<double>(point_count - static_cast<std::size_t>(cluster_count)) /
            static_cast<double>(cluster_count - 1);
        // FCH is derived from FRatio so the factorization is the exact same
        // floating-point product everywhere it is reported.
        out.v_fch = out.v_fratio * penalty;
    }
    out.v_fs = tri.fw - tri.fb;
    return out;
}

double xie_beni(const Dataset& data, const ClusterModel& model,
                double fuzziness) {
    const Centroids& centroids = model.centroids;
    double min_sep = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a + 1 < centroids.count(); ++a) {
        for (std::size_t b = a + 1; b < centroids.count(); ++b) {
            min_sep = std::min(min_sep, squared_euclidean(centroids.center(a),
                                                          centroids.center(b)));
        }
    }
    if (min_sep < 1e-12) {
        throw DegenerateDataError("xie_beni: coincident centroids "
                                  "(min squared separation below 1e-12)");
    }
    const double numerator =
        fuzzy_within(data, model.memberships, centroids, fuzziness);
    return numerator / (static_cast<double>(data.size()) * min_sep);
}

SfdFamily sfd_family(const InertiaTriple& tri, std::size_t point_count,
                     int cluster_count) {
    if (cluster_count < 2 ||
        static_cast<std::size_t>(cluster_count) >= point_count) {
        throw InvalidArgumentError("sfd_family: need 2 <= K < n");
    }
    if (tri.fi <= 0.0) {
        throw DegenerateDataError(
            "sfd_family: total inertia is zero (all points identical)");
    }
    SfdFamily out;
    out.sfd = (tri.fb - tri.fw) / tri.fi;
    out.tsfd = (1.0 + out.sfd) / 2.0;
    const double penalty =
        static_cast<double>(point_count - static_cast<std::size_t>(cluster_count)) /
        static_cast<double>(cluster_count - 1);
    out.psfd = out.tsfd * penalty;
    return out;
}

IndexReport compute_indices(const Dataset& data, const ClusterModel& model,
                            double fuzziness, const InertiaTriple& tri) {
    const int k = static_cast<int>(model.centroids.count());
    const CrispFamily crisp = crisp_and_penalized_family(tri, data.size(), k);
    const SfdFamily sfd = sfd_family(tri, data.size(), k);
    IndexReport report;
    report.v_pc = partition_coefficient(model.memberships);
    report.v_cl = chen_linkens(model.memberships);
    report.v_fratio = crisp.v_fratio;
    report.v_fch = crisp.v_fch;
    report.v_fs = crisp.v_fs;
    report.v_xb = xie_beni(data, model, fuzziness);
    report.sfd = sfd.sfd;
    report.tsfd = sfd.tsfd;
    report.psfd = sfd.psfd;
    report.cluster_count = k;
    report.point_count = data.size();
    return report;
}

IndexReport compute_indices(const Dataset& data, const ClusterModel& model,
                            double fuzziness) {
    return compute_indices(data, model, fuzziness,
                           inertia(data, model, fuzziness));
}

} // namespace fcmlab
