#pragma once

#include <cstdint>
#include <random>

namespace fairga {

/// Seedable random source threaded explicitly through every stochastic
/// operation. Two sources built from the same seed produce identical draw
/// sequences, which is what makes whole runs replayable.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }

    /// Uniform real in [lo, hi).
    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(engine_);
    }

    /// Uniform index in [0, n). n must be positive.
    std::size_t index(std::size_t n) {
        return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_);
    }

    /// Normal draw with the given mean and standard deviation.
    double gaussian(double mean, double stddev) {
        return std::normal_distribution<double>(mean, stddev)(engine_);
    }

    /// True with probability p; always consumes exactly one uniform draw.
    bool chance(double p) { return uniform(0.0, 1.0) < p; }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

} // namespace fairga
