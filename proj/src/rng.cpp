#include "ghct/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace ghct {

namespace {

inline std::uint64_t mix64(std::uint64_t x) {
    // splitmix64 finalizer
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace

std::uint64_t CounterRng::bits(std::uint64_t stream, std::uint64_t draw) const {
    std::uint64_t x = mix64(seed_ ^ 0xA5A5A5A55A5A5A5AULL);
    x = mix64(x + stream * 0xC2B2AE3D27D4EB4FULL);
    x = mix64(x + draw * 0x165667B19E3779F9ULL);
    return x;
}

double CounterRng::uniform(std::uint64_t stream, std::uint64_t draw) const {
    return static_cast<double>(bits(stream, draw) >> 11) * 0x1.0p-53;
}

std::uint64_t CounterRng::below(std::uint64_t stream, std::uint64_t draw,
                                std::uint64_t bound) const {
    if (bound == 0) throw std::invalid_argument("CounterRng::below: bound must be >= 1");
    // 128-bit multiply-shift; bias is negligible for desk-scale bounds
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(bits(stream, draw)) * bound) >> 64);
}

bool CounterRng::flip(std::uint64_t stream, std::uint64_t draw, double p) const {
    return uniform(stream, draw) < p;
}

long long CounterRng::poisson(std::uint64_t stream, std::uint64_t draw, double lambda) const {
    if (lambda < 0.0) throw std::invalid_argument("CounterRng::poisson: negative lambda");
    if (lambda == 0.0) return 0;
    constexpr double kChunkLimit = 16.0;
    long long chunks = static_cast<long long>(std::ceil(lambda / kChunkLimit));
    double chunk_lambda = lambda / static_cast<double>(chunks);
    long long total = 0;
    for (long long c = 0; c < chunks; ++c) {
        double u = uniform(stream, draw + static_cast<std::uint64_t>(c));
        double p = std::exp(-chunk_lambda);
        double cdf = p;
        long long k = 0;
        while (u >= cdf && k < 4096) {
            ++k;
            p *= chunk_lambda / static_cast<double>(k);
            cdf += p;
        }
        total += k;
    }
    return total;
}

long long CounterRng::binomial(std::uint64_t stream, std::uint64_t draw, long long trials,
                               double p) const {
    if (trials < 0) throw std::invalid_argument("CounterRng::binomial: negative trial count");
    long long count = 0;
    for (long long t = 0; t < trials; ++t)
        if (flip(stream, draw + static_cast<std::uint64_t>(t), p)) ++count;
    return count;
}

}  // namespace ghct
