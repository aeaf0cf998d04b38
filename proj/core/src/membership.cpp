#include "fcmlab/membership.hpp"

#include <cmath>
#include <string>

#include "fcmlab/errors.hpp"

namespace fcmlab {

MembershipMatrix::MembershipMatrix(std::vector<double> values,
                                   std::size_t rows, std::size_t clusters)
    : values_(std::move(values)), n_(rows), k_(clusters) {
    if (k_ < 2) {
        throw InvalidArgumentError("MembershipMatrix: at least 2 clusters required");
    }
    if (n_ == 0 || values_.size() != n_ * k_) {
        throw InvalidArgumentError("MembershipMatrix: expected " +
                                   std::to_string(n_ * k_) + " values, got " +
                                   std::to_string(values_.size()));
    }
    for (std::size_t i = 0; i < n_; ++i) {
        double sum = 0.0;
        for (std::size_t k = 0; k < k_; ++k) {
            const double u = values_[i * k_ + k];
            if (!(u >= 0.0 && u <= 1.0)) {
                throw InvalidArgumentError(
                    "MembershipMatrix: entry (" + std::to_string(i) + "," +
                    std::to_string(k) + ") outside [0,1]");
            }
            sum += u;
        }
        if (std::abs(sum - 1.0) > kRowSumTolerance) {
            throw InvalidArgumentError("MembershipMatrix: row " +
                                       std::to_string(i) +
                                       " sums to " + std::to_string(sum));
        }
    }
}

} // namespace fcmlab
