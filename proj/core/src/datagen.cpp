#include "fcmlab/datagen.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <vector>

#include "fcmlab/csv.hpp"
#include "fcmlab/errors.hpp"
#include "fcmlab/rng.hpp"

namespace fcmlab {

void GaussianSpec::validate() const {
    if (cluster_count < 2) {
        throw InvalidArgumentError("GaussianSpec: cluster_count must be >= 2");
    }
    if (points_per_cluster < 1) {
        throw InvalidArgumentError("GaussianSpec: points_per_cluster must be >= 1");
    }
    if (!(sd > 0.0)) {
        throw InvalidArgumentError("GaussianSpec: sd must be > 0");
    }
    if (dimension < 1) {
        throw InvalidArgumentError("GaussianSpec: dimension must be >= 1");
    }
}

void NoiseSpec::validate() const {
    if (points_per_label < 1) {
        throw InvalidArgumentError("NoiseSpec: points_per_label must be >= 1");
    }
    if (!(left_probability > 0.0 && left_probability < 1.0)) {
        throw InvalidArgumentError("NoiseSpec: left_probability must be in (0,1)");
    }
    if (offset_scale && !(*offset_scale > 0.0)) {
        throw InvalidArgumentError("NoiseSpec: offset_scale must be > 0");
    }
}

Dataset gen_gaussian_clusters(const GaussianSpec& spec) {
    spec.validate();
    Rng rng(spec.seed);
    const std::size_t d = static_cast<std::size_t>(spec.dimension);
    const std::size_t total =
        static_cast<std::size_t>(spec.cluster_count) *
        static_cast<std::size_t>(spec.points_per_cluster);

    std::vector<double> values;
    values.reserve(total * d);
    std::vector<int> labels;
    labels.reserve(total);
    for (int cluster = 1; cluster <= spec.cluster_count; ++cluster) {
        const double mean = static_cast<double>(cluster);
        for (int p = 0; p < spec.points_per_cluster; ++p) {
            for (std::size_t j = 0; j < d; ++j) {
                values.push_back(mean + spec.sd * rng.gaussian());
            }
            labels.push_back(cluster);
        }
    }
    std::ostringstream name;
    name << "gaussian-c" << spec.cluster_count << "-p" << spec.points_per_cluster
         << "-sd" << format_double(spec.sd) << "-d" << spec.dimension
         << "-seed" << spec.seed;
    return Dataset(std::move(values), d, std::move(labels), name.str());
}

Dataset gen_overlapped(GaussianSpec spec) {
    spec.sd = 0.4;
    return gen_gaussian_clusters(spec);
}

Dataset add_skewed_noise(const Dataset& data, const NoiseSpec& spec) {
    spec.validate();
    if (!data.has_labels()) {
        throw InvalidArgumentError("add_skewed_noise: dataset has no labels");
    }
    const std::size_t d = data.dim();

    std::map<int, std::vector<std::size_t>> by_label;
    for (std::size_t i = 0; i < data.size(); ++i) {
        by_label[data.labels()[i]].push_back(i);
    }

    std::vector<double> values = data.values();
    std::vector<int> labels = data.labels();
    Rng rng(spec.seed);

    for (const auto& [label, indices] : by_label) {
        // Gravity center and per-coordinate spread of this label's points.
        std::vector<double> center(d, 0.0), scale(d, 0.0);
        for (std::size_t i : indices) {
            const auto p = data.point(i);
            for (std::size_t j = 0; j < d; ++j) {
                center[j] += p[j];
            }
        }
        for (std::size_t j = 0; j < d; ++j) {
            center[j] /= static_cast<double>(indices.size());
        }
        if (spec.offset_scale) {
            std::fill(scale.begin(), scale.end(), *spec.offset_scale);
        } else {
            for (std::size_t i : indices) {
                const auto p = data.point(i);
                for (std::size_t j = 0; j < d; ++j) {
                    const double diff = p[j] - center[j];
                    scale[j] += diff * diff;
                }
            }
            for (std::size_t j = 0; j < d; ++j) {
                scale[j] = 2.0 * std::sqrt(scale[j] / static_cast<double>(indices.size()));
            }
        }
        for (int p = 0; p < spec.points_per_label; ++p) {
            const double r = rng.uniform01();
            const double side = r <= spec.left_probability ? -1.0 : 1.0;
            for (std::size_t j = 0; j < d; ++j) {
                values.push_back(center[j] +
                                 side * std::abs(rng.gaussian()) * scale[j]);
            }
            labels.push_back(label);
        }
    }
    std::ostringstream name;
    name << (data.name().empty() ? "dataset" : data.name()) << "-noised-ppl"
         << spec.points_per_label << "-seed" << spec.seed;
    return Dataset(std::move(values), d, std::move(labels), name.str());
}

} // namespace fcmlab
