#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fcmlab {

/// Row-stochastic n x K matrix of fuzzy membership degrees.
///
/// Construction validates eagerly: every entry must lie in [0, 1], every row
/// must sum to 1 within kRowSumTolerance, and K must be at least 2. Invalid
/// input is rejected with InvalidArgumentError, never silently renormalized.
class MembershipMatrix {
public:
    static constexpr double kRowSumTolerance = 1e-9;

    MembershipMatrix(std::vector<double> values, std::size_t rows,
                     std::size_t clusters);

    std::size_t rows() const { return n_; }
    std::size_t clusters() const { return k_; }

    double at(std::size_t i, std::size_t k) const {
        return values_[i * k_ + k];
    }
    std::span<const double> row(std::size_t i) const {
        return {values_.data() + i * k_, k_};
    }
    const std::vector<double>& values() const { return values_; }

private:
    std::vector<double> values_;
    std::size_t n_ = 0;
    std::size_t k_ = 0;
};

} // namespace fcmlab
