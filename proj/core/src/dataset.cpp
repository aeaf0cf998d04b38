#include "fcmlab/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "fcmlab/errors.hpp"

namespace fcmlab {

double squared_euclidean(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw InvalidArgumentError("squared_euclidean: dimension mismatch (" +
                                   std::to_string(a.size()) + " vs " +
                                   std::to_string(b.size()) + ")");
    }
    double sum = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        const double diff = a[j] - b[j];
        sum += diff * diff;
    }
    return sum;
}

std::vector<double> grand_mean(std::span<const double> values, std::size_t n,
                               std::size_t d) {
    if (n == 0) {
        throw InvalidArgumentError("grand_mean: empty dataset");
    }
    std::vector<double> mean(d, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            mean[j] += values[i * d + j];
        }
    }
    for (double& m : mean) {
        m /= static_cast<double>(n);
    }
    return mean;
}

std::vector<double> grand_mean(const Dataset& data) {
    return grand_mean(data.values(), data.size(), data.dim());
}

Dataset::Dataset(std::vector<double> values, std::size_t dim,
                 std::vector<int> labels, std::string name)
    : values_(std::move(values)),
      labels_(std::move(labels)),
      d_(dim),
      name_(std::move(name)) {
    if (d_ == 0) {
        throw InvalidArgumentError("Dataset: dimension must be positive");
    }
    if (values_.empty() || values_.size() % d_ != 0) {
        throw InvalidArgumentError(
            "Dataset: value count must be a positive multiple of the dimension");
    }
    n_ = values_.size() / d_;
    if (!labels_.empty() && labels_.size() != n_) {
        throw InvalidArgumentError("Dataset: " + std::to_string(labels_.size()) +
                                   " labels for " + std::to_string(n_) +
                                   " points");
    }
    for (double v : values_) {
        if (!std::isfinite(v)) {
            throw InvalidArgumentError("Dataset: coordinates must be finite");
        }
    }
}

Dataset Dataset::from_rows(const std::vector<std::vector<double>>& rows,
                           std::vector<int> labels, std::string name) {
    if (rows.empty()) {
        throw InvalidArgumentError("Dataset: no points");
    }
    const std::size_t d = rows.front().size();
    std::vector<double> flat;
    flat.reserve(rows.size() * d);
    for (const auto& row : rows) {
        if (row.size() != d) {
            throw InvalidArgumentError("Dataset: ragged rows");
        }
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return Dataset(std::move(flat), d, std::move(labels), std::move(name));
}

std::vector<int> Dataset::distinct_labels() const {
    std::set<int> seen(labels_.begin(), labels_.end());
    return {seen.begin(), seen.end()};
}

Centroids::Centroids(std::vector<double> centers, std::size_t dim)
    : values_(std::move(centers)), d_(dim) {
    if (d_ == 0 || values_.size() % d_ != 0) {
        throw InvalidArgumentError(
            "Centroids: value count must be a positive multiple of the dimension");
    }
    k_ = values_.size() / d_;
    if (k_ < 2) {
        throw InvalidArgumentError("Centroids: at least 2 centers required");
    }
    for (double v : values_) {
        if (!std::isfinite(v)) {
            throw InvalidArgumentError("Centroids: coordinates must be finite");
        }
    }
}

} // namespace fcmlab
