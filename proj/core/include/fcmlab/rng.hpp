#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace fcmlab {

/// Seeded random source shared by every randomized operation in the library.
///
/// The raw stream is std::mt19937_64, whose output sequence is fully
/// specified by the standard, and all derived draws (uniform indices,
/// uniform reals, Gaussians via the Marsaglia polar method) are implemented
/// here instead of with std::*_distribution, whose algorithms are
/// implementation-defined. A fixed seed therefore reproduces bit-identical
/// datasets and fits on any platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform real in [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, bound). Rejection sampling, no modulo bias.
    std::size_t below(std::size_t bound) {
        const std::uint64_t b = static_cast<std::uint64_t>(bound);
        const std::uint64_t threshold = (0 - b) % b;
        for (;;) {
            const std::uint64_t r = engine_();
            if (r >= threshold) {
                return static_cast<std::size_t>(r % b);
            }
        }
    }

    /// Standard Gaussian draw (Marsaglia polar method, spare value cached).
    double gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform01() - 1.0;
            v = 2.0 * uniform01() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        has_spare_ = true;
        return u * f;
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace fcmlab
