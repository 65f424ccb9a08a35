#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "ghct/rng.hpp"

using namespace ghct;

TEST_SUITE("rng") {

TEST_CASE("variates are pure functions of (seed, stream, draw)") {
    CounterRng a(123);
    CounterRng b(123);
    CounterRng c(124);
    CHECK(a.bits(5, 9) == b.bits(5, 9));
    CHECK(a.uniform(5, 9) == b.uniform(5, 9));
    CHECK(a.bits(5, 9) != c.bits(5, 9));
    CHECK(a.bits(5, 9) != a.bits(6, 9));
    CHECK(a.bits(5, 9) != a.bits(5, 10));
}

TEST_CASE("uniform lies in [0,1) with mean near one half") {
    CounterRng rng(7);
    double sum = 0.0;
    const int trials = 20000;
    for (int i = 0; i < trials; ++i) {
        double u = rng.uniform(0, i);
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        sum += u;
    }
    // SE of the mean is ~0.0020; allow 5 SEs
    CHECK(std::abs(sum / trials - 0.5) < 0.011);
}

TEST_CASE("below respects its bound and is roughly uniform") {
    CounterRng rng(99);
    int counts[5] = {0, 0, 0, 0, 0};
    for (int i = 0; i < 10000; ++i) {
        std::uint64_t v = rng.below(1, i, 5);
        REQUIRE(v < 5);
        ++counts[v];
    }
    for (int c : counts) CHECK(std::abs(c - 2000) < 300);
    CHECK_THROWS_AS(rng.below(0, 0, 0), std::invalid_argument);
}

TEST_CASE("flip matches its probability") {
    CounterRng rng(4);
    CHECK_FALSE(rng.flip(0, 0, 0.0));
    CHECK(rng.flip(0, 0, 1.0));
    int heads = 0;
    for (int i = 0; i < 10000; ++i)
        if (rng.flip(2, i, 0.3)) ++heads;
    CHECK(std::abs(heads - 3000) < 250);  // ~5.5 sigma
}

TEST_CASE("poisson matches its mean and variance") {
    CounterRng rng(31);
    for (double lambda : {0.5, 3.0, 40.0}) {  // 40 exercises the chunked path
        double sum = 0.0;
        double sumsq = 0.0;
        const int trials = 20000;
        for (int i = 0; i < trials; ++i) {
            long long v = rng.poisson(static_cast<std::uint64_t>(lambda * 10), i * 8, lambda);
            sum += static_cast<double>(v);
            sumsq += static_cast<double>(v) * static_cast<double>(v);
        }
        double mean = sum / trials;
        double var = sumsq / trials - mean * mean;
        CHECK(std::abs(mean - lambda) < 6.0 * std::sqrt(lambda / trials) + 0.01);
        CHECK(std::abs(var - lambda) < 0.15 * lambda + 0.05);
    }
    CHECK(rng.poisson(0, 0, 0.0) == 0);
    CHECK_THROWS_AS(rng.poisson(0, 0, -1.0), std::invalid_argument);
}

TEST_CASE("binomial is the sum of per-trial flips") {
    CounterRng rng(8);
    long long direct = rng.binomial(3, 100, 50, 0.4);
    long long manual = 0;
    for (int t = 0; t < 50; ++t)
        if (rng.flip(3, 100 + t, 0.4)) ++manual;
    CHECK(direct == manual);
    CHECK(rng.binomial(0, 0, 0, 0.5) == 0);
    CHECK_THROWS_AS(rng.binomial(0, 0, -1, 0.5), std::invalid_argument);

    double sum = 0.0;
    const int trials = 5000;
    for (int i = 0; i < trials; ++i)
        sum += static_cast<double>(rng.binomial(9, i * 64, 20, 0.25));
    CHECK(std::abs(sum / trials - 5.0) < 0.2);
}

TEST_CASE("draw-order independence") {
    // evaluating the same counters in any order gives identical values
    CounterRng rng(55);
    double later = rng.uniform(17, 3);
    double earlier = rng.uniform(17, 1);
    CounterRng rng2(55);
    CHECK(rng2.uniform(17, 1) == earlier);
    CHECK(rng2.uniform(17, 3) == later);
}

}  // TEST_SUITE
