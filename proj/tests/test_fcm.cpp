#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "fcmlab/datagen.hpp"
#include "fcmlab/errors.hpp"
#include "fcmlab/fcm.hpp"
#include "fcmlab/inertia.hpp"

#include "support/helpers.hpp"
#include "support/oracles.hpp"

using namespace fcmlab;

namespace {

std::set<std::vector<double>> center_set(const Centroids& c) {
    std::set<std::vector<double>> out;
    for (std::size_t k = 0; k < c.count(); ++k) {
        const auto span = c.center(k);
        out.insert(std::vector<double>(span.begin(), span.end()));
    }
    return out;
}

// Health checks shared by every fit in this file: the objective trace never
// rises (beyond relative rounding slack) and the final centroids reproduce
// the weighted-mean condition for the final memberships.
void check_model_health(const Dataset& data, const ClusterModel& model,
                        double m) {
    for (std::size_t t = 1; t < model.fw_trace.size(); ++t) {
        const double prev = model.fw_trace[t - 1];
        const double cur = model.fw_trace[t];
        CHECK(cur <= prev + 1e-7 * std::max(cur, prev));
    }
    const auto expected = oracles::weighted_centroids(
        testutil::rows_of(data), testutil::rows_of(model.memberships), m);
    for (std::size_t k = 0; k < model.centroids.count(); ++k) {
        for (std::size_t j = 0; j < data.dim(); ++j) {
            const double got = model.centroids.center(k)[j];
            const double want = expected[k][j];
            CHECK(std::abs(got - want) <=
                  1e-8 * std::max({std::abs(got), std::abs(want), 1e-9}));
        }
    }
}

} // namespace

TEST_CASE("initialize_centroids returns exactly the points when n == K") {
    const Dataset data = Dataset::from_rows({{0, 0}, {5, 5}, {9, 1}});
    const Centroids c = initialize_centroids(data, 3, 42);
    const auto centers = center_set(c);
    CHECK(centers ==
          std::set<std::vector<double>>{{0, 0}, {5, 5}, {9, 1}});
}

TEST_CASE("initialize_centroids is deterministic per seed") {
    const Dataset ruspini = ruspini_fixture();
    const Centroids a = initialize_centroids(ruspini, 4, 123);
    const Centroids b = initialize_centroids(ruspini, 4, 123);
    CHECK(a.values() == b.values());
    const Centroids other = initialize_centroids(ruspini, 4, 124);
    CHECK(a.values() != other.values());
}

TEST_CASE("initialize_centroids draws distinct rows for 100 seeds") {
    const Dataset ruspini = ruspini_fixture();
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const Centroids c = initialize_centroids(ruspini, 4, seed);
        CHECK(center_set(c).size() == 4);
    }
}

TEST_CASE("initialize_centroids rejects impossible requests") {
    const Dataset tiny = Dataset::from_rows({{0, 0}, {1, 1}});
    CHECK_THROWS_AS(initialize_centroids(tiny, 3, 1), InvalidArgumentError);

    const Dataset dupes = Dataset::from_rows({{0, 0}, {0, 0}, {1, 1}});
    CHECK_THROWS_AS(initialize_centroids(dupes, 3, 1), DegenerateDataError);
}

TEST_CASE("update_memberships: equidistant point splits evenly") {
    const Dataset data = Dataset::from_rows({{0.0, 0.0}});
    const Centroids c({-1.0, 0.0, 1.0, 0.0}, 2);
    const MembershipMatrix u = update_memberships(data, c, 2.0);
    CHECK(u.at(0, 0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(u.at(0, 1) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("update_memberships: 1-D two-centroid case from the formula") {
    // x = 0, centroids at 1 and 3, m = 2: u1 = 1 / (1 + 1/9) = 0.9.
    const Dataset data({0.0}, 1);
    const Centroids c({1.0, 3.0}, 1);
    const MembershipMatrix u = update_memberships(data, c, 2.0);
    CHECK(u.at(0, 0) == doctest::Approx(0.9).epsilon(1e-12));
    CHECK(u.at(0, 1) == doctest::Approx(0.1).epsilon(1e-12));
}

TEST_CASE("update_memberships: coincident point gets full membership") {
    const Dataset data = Dataset::from_rows({{2.0, 2.0}});
    const Centroids one({0.0, 0.0, 2.0, 2.0}, 2);
    const MembershipMatrix u = update_memberships(data, one, 2.0);
    CHECK(u.at(0, 0) == 0.0);
    CHECK(u.at(0, 1) == 1.0);

    const Centroids both({2.0, 2.0, 2.0, 2.0, 9.0, 9.0}, 2);
    const MembershipMatrix v = update_memberships(data, both, 2.0);
    CHECK(v.at(0, 0) == 0.5);
    CHECK(v.at(0, 1) == 0.5);
    CHECK(v.at(0, 2) == 0.0);
}

TEST_CASE("update_memberships rows sum to one on random inputs") {
    std::mt19937 rng(19);
    for (int trial = 0; trial < 20; ++trial) {
        const auto x = oracles::random_rows(rng, 12, 3);
        const auto c = oracles::random_rows(rng, 4, 3);
        const Dataset data = Dataset::from_rows(x);
        std::vector<double> flat;
        for (const auto& row : c) {
            flat.insert(flat.end(), row.begin(), row.end());
        }
        const double m = 1.3 + 0.5 * (trial % 4);
        const MembershipMatrix u =
            update_memberships(data, Centroids(std::move(flat), 3), m);
        for (std::size_t i = 0; i < u.rows(); ++i) {
            double sum = 0.0;
            for (std::size_t k = 0; k < u.clusters(); ++k) {
                sum += u.at(i, k);
            }
            CHECK(std::abs(sum - 1.0) <= 1e-9);
        }
    }
}

TEST_CASE("update_centroids: crisp memberships give plain means") {
    const Dataset data({0.0, 2.0, 10.0, 12.0}, 1);
    const MembershipMatrix u({1, 0, 1, 0, 0, 1, 0, 1}, 4, 2);
    const Centroids c = update_centroids(data, u, 2.0);
    CHECK(c.center(0)[0] == doctest::Approx(1.0));
    CHECK(c.center(1)[0] == doctest::Approx(11.0));
}

TEST_CASE("update_centroids: uniform memberships collapse to the grand mean") {
    std::mt19937 rng(23);
    const auto x = oracles::random_rows(rng, 10, 2);
    const Dataset data = Dataset::from_rows(x);
    const std::size_t k = 4;
    std::vector<double> flat(data.size() * k, 1.0 / k);
    const Centroids c =
        update_centroids(data, MembershipMatrix(std::move(flat), 10, k), 2.0);
    const auto mean = grand_mean(data);
    for (std::size_t cc = 0; cc < k; ++cc) {
        for (std::size_t j = 0; j < 2; ++j) {
            CHECK(c.center(cc)[j] == doctest::Approx(mean[j]).epsilon(1e-12));
        }
    }
}

TEST_CASE("update_centroids matches the scalar weighted-mean computation") {
    // Two 1-D points with memberships (0.9, 0.1) and (0.1, 0.9) at m = 2:
    // c1 = (0.81 x1 + 0.01 x2) / 0.82, c2 mirrored.
    const Dataset data({1.0, 5.0}, 1);
    const MembershipMatrix u({0.9, 0.1, 0.1, 0.9}, 2, 2);
    const Centroids c = update_centroids(data, u, 2.0);
    CHECK(c.center(0)[0] ==
          doctest::Approx((0.81 * 1.0 + 0.01 * 5.0) / 0.82).epsilon(1e-14));
    CHECK(c.center(1)[0] ==
          doctest::Approx((0.01 * 1.0 + 0.81 * 5.0) / 0.82).epsilon(1e-14));
}

TEST_CASE("update_centroids flags empty clusters") {
    const Dataset data({0.0, 1.0}, 1);
    const MembershipMatrix u({1.0, 0.0, 1.0, 0.0}, 2, 2);
    CHECK_THROWS_AS(update_centroids(data, u, 2.0), EmptyClusterError);
}

TEST_CASE("fit: duplicated singleton groups collapse to perfect clusters") {
    // Three distinct locations, each present three times: FW reaches 0.
    oracles::Rows rows;
    const oracles::Rows locations{{0, 0}, {10, 0}, {0, 10}};
    for (const auto& loc : locations) {
        rows.push_back(loc);
        rows.push_back(loc);
        rows.push_back(loc);
    }
    const Dataset data = Dataset::from_rows(rows);
    FcmConfig cfg;
    cfg.cluster_count = 3;
    cfg.seed = 5;
    const ClusterModel model = fit(data, cfg);
    CHECK(model.fw_trace.back() < 1e-6);
    CHECK(model.converged);
    const auto centers = center_set(model.centroids);
    for (const auto& center : centers) {
        double best = 1e30;
        for (const auto& loc : locations) {
            best = std::min(best, oracles::squared_euclidean(center, loc));
        }
        CHECK(best < 1e-12);
    }
    check_model_health(data, model, cfg.fuzziness);
}

TEST_CASE("fit recovers the generator means on separated gaussian clusters") {
    GaussianSpec spec;
    spec.cluster_count = 3;
    spec.seed = 2024;
    const Dataset data = gen_gaussian_clusters(spec);
    FcmConfig cfg;
    cfg.cluster_count = 3;
    cfg.seed = 7;
    const ClusterModel model = fit(data, cfg);
    check_model_health(data, model, cfg.fuzziness);

    for (int i = 1; i <= 3; ++i) {
        const std::vector<double> target{double(i), double(i)};
        double best = 1e30;
        for (std::size_t k = 0; k < model.centroids.count(); ++k) {
            const auto c = model.centroids.center(k);
            best = std::min(best, oracles::squared_euclidean(
                                      {c.begin(), c.end()}, target));
        }
        CHECK(std::sqrt(best) < 0.15);
    }
}

TEST_CASE("fit is deterministic for fixed data and config") {
    const Dataset data = ruspini_fixture();
    FcmConfig cfg;
    cfg.cluster_count = 4;
    cfg.seed = 99;
    const ClusterModel a = fit(data, cfg);
    const ClusterModel b = fit(data, cfg);
    CHECK(a.centroids.values() == b.centroids.values());
    CHECK(a.memberships.values() == b.memberships.values());
    CHECK(a.fw_trace == b.fw_trace);
    CHECK(a.iterations_run == b.iterations_run);
    CHECK(a.converged == b.converged);
}

TEST_CASE("fit objective trace is monotone on assorted datasets") {
    const Dataset ruspini = ruspini_fixture();
    for (int k : {2, 3, 4, 7}) {
        FcmConfig cfg;
        cfg.cluster_count = k;
        cfg.seed = 31;
        const ClusterModel model = fit(ruspini, cfg);
        check_model_health(ruspini, model, cfg.fuzziness);
        CHECK(model.iterations_run ==
              static_cast<int>(model.fw_trace.size()));
    }
}

TEST_CASE("fit rejects K >= n and bad configs") {
    const Dataset tiny = Dataset::from_rows({{0, 0}, {1, 1}, {2, 2}});
    FcmConfig cfg;
    cfg.cluster_count = 3;
    CHECK_THROWS_AS(fit(tiny, cfg), InvalidArgumentError);

    FcmConfig bad;
    bad.cluster_count = 2;
    bad.fuzziness = 1.0;
    CHECK_THROWS_AS(fit(tiny, bad), InvalidArgumentError);

    FcmConfig crisp;
    crisp.cluster_count = 1;
    CHECK_THROWS_AS(crisp.validate(), InvalidArgumentError);
}
