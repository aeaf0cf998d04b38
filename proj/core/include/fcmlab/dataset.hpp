#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace fcmlab {

/// Sum of squared coordinate differences. Throws InvalidArgumentError on a
/// dimension mismatch.
double squared_euclidean(std::span<const double> a, std::span<const double> b);

/// Coordinate-wise mean of n points of dimension d stored row-major.
/// Throws InvalidArgumentError when n == 0.
std::vector<double> grand_mean(std::span<const double> values, std::size_t n,
                               std::size_t d);

/// An immutable collection of real-valued feature vectors with optional
/// integer class labels. Points are stored row-major in one contiguous
/// double-precision buffer.
class Dataset {
public:
    /// `values` holds n*d reals, row-major. `labels` is either empty or has
    /// one entry per point. Every coordinate must be finite; n >= 1, d >= 1.
    Dataset(std::vector<double> values, std::size_t dim,
            std::vector<int> labels = {}, std::string name = "");

    static Dataset from_rows(const std::vector<std::vector<double>>& rows,
                             std::vector<int> labels = {},
                             std::string name = "");

    std::size_t size() const { return n_; }
    std::size_t dim() const { return d_; }

    std::span<const double> point(std::size_t i) const {
        return {values_.data() + i * d_, d_};
    }
    const std::vector<double>& values() const { return values_; }

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<int>& labels() const { return labels_; }
    /// Sorted distinct label values; empty when the dataset is unlabeled.
    std::vector<int> distinct_labels() const;

    const std::string& name() const { return name_; }

private:
    std::vector<double> values_;
    std::vector<int> labels_;
    std::size_t n_ = 0;
    std::size_t d_ = 0;
    std::string name_;
};

std::vector<double> grand_mean(const Dataset& data);

/// K cluster centers of equal dimension; K >= 2, all coordinates finite.
class Centroids {
public:
    Centroids(std::vector<double> centers, std::size_t dim);

    std::size_t count() const { return k_; }
    std::size_t dim() const { return d_; }
    std::span<const double> center(std::size_t k) const {
        return {values_.data() + k * d_, d_};
    }
    const std::vector<double>& values() const { return values_; }

private:
    std::vector<double> values_;
    std::size_t k_ = 0;
    std::size_t d_ = 0;
};

} // namespace fcmlab
