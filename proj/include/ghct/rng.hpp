#ifndef GHCT_RNG_HPP
#define GHCT_RNG_HPP

#include <cstdint>

namespace ghct {

/// Counter-based deterministic generator. Every variate is a pure function of
/// (seed, stream, draw), so per-edge draws are order-independent and
/// reproducible across platforms.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t bits(std::uint64_t stream, std::uint64_t draw) const;

    /// Uniform in [0, 1).
    double uniform(std::uint64_t stream, std::uint64_t draw) const;

    /// Uniform integer in [0, bound), bound >= 1.
    std::uint64_t below(std::uint64_t stream, std::uint64_t draw, std::uint64_t bound) const;

    /// Bernoulli(p) using a single draw.
    bool flip(std::uint64_t stream, std::uint64_t draw, double p) const;

    /// Poisson(lambda). Inversion for small lambda; larger lambdas are split
    /// into independent chunks (Poisson additivity), consuming consecutive
    /// draw indices starting at `draw`.
    long long poisson(std::uint64_t stream, std::uint64_t draw, double lambda) const;

    /// Binomial(trials, p) via per-trial flips at draw indices draw..draw+trials-1.
    long long binomial(std::uint64_t stream, std::uint64_t draw, long long trials, double p) const;

    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_;
};

}  // namespace ghct

#endif
