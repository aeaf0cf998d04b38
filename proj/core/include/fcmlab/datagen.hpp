#pragma once

#include <cstdint>
#include <optional>

#include "fcmlab/dataset.hpp"

namespace fcmlab {

/// Isotropic Gaussian cluster generator: cluster i (1-based) draws
/// points_per_cluster points around the mean vector (i, i, ..., i).
struct GaussianSpec {
    int cluster_count = 3;
    int points_per_cluster = 50;
    double sd = 0.3;
    int dimension = 2;
    std::uint64_t seed = 0;

    void validate() const;
};

Dataset gen_gaussian_clusters(const GaussianSpec& spec);

/// Same construction with the standard deviation forced to 0.4, which makes
/// neighboring clusters overlap.
Dataset gen_overlapped(GaussianSpec spec);

/// Positively skewed noising: around each label's gravity center, new points
/// land below/left with probability left_probability and above/right
/// otherwise, at per-coordinate offsets |N(0,1)| * scale.
struct NoiseSpec {
    int points_per_label = 5;
    double left_probability = 0.25;
    /// Per-coordinate offset scale; when unset, twice the label's
    /// per-coordinate standard deviation.
    std::optional<double> offset_scale;
    std::uint64_t seed = 0;

    void validate() const;
};

/// Returns the input dataset with points_per_label noisy points appended per
/// label. Original points keep their order as a prefix. Throws
/// InvalidArgumentError when the dataset has no labels.
Dataset add_skewed_noise(const Dataset& data, const NoiseSpec& spec);

/// The classic Ruspini benchmark: 75 two-dimensional points in four
/// well-separated groups, embedded as a constant fixture with group labels.
Dataset ruspini_fixture();

} // namespace fcmlab
