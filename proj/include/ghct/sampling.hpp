#ifndef GHCT_SAMPLING_HPP
#define GHCT_SAMPLING_HPP

#include <cstdint>
#include <vector>

#include "ghct/graph.hpp"
#include "ghct/strength.hpp"

namespace ghct {

enum class CompressMode {
    UnweightedBernoulli,  // keep edge with p = min(1, rho/k), weight u/p
    IntegerBinomial,      // Binomial(u, min(1, rho/k)) copies of weight k/rho
    RealSimplified,       // keep with min(1, rho*u/k), weight k/rho (default)
    RealPoisson,          // Poisson(rho*u/k) copies of weight k/rho
};

struct SparsifyParams {
    double epsilon = 0.5;
    double d = 1.0;  // failure exponent
    std::uint64_t seed = 0;
    CompressMode mode = CompressMode::RealSimplified;
    bool integer_rounding = false;

    /// Compression factor 3(d+4) ln(n) / epsilon^2, evaluated against the
    /// target graph's vertex count at use time.
    double rho(int n) const;

    void validate() const;  // epsilon in (0,1), d >= 1
};

struct CompressedGraph {
    Graph graph;
    std::vector<double> probabilities;  // per original edge: P(edge survives)
    SparsifyParams params;
};

/// Nonuniform sampling with expectation-preserving reweighting. Kept edges
/// appear in original-index order, aggregated per original edge.
CompressedGraph compress(const Graph& g, const StrengthLabels& labels,
                         const SparsifyParams& params);

struct SmoothedGraph {
    Graph graph;
    std::vector<int> source_edge;  // piece -> original edge index
};

/// Subdivide each edge into ceil(c*u/k) parallel pieces of equal capacity so
/// that every piece satisfies c * capacity <= k. Pieces inherit the parent's
/// strength label.
SmoothedGraph smooth_tracked(const Graph& g, const StrengthLabels& labels, double c);
Graph smooth(const Graph& g, const StrengthLabels& labels, double c);

/// Keep each edge independently with probability p at original capacity.
Graph uniform_sample(const Graph& g, double p, std::uint64_t seed);

/// Assign every edge to exactly one of `groups` graphs uniformly at random.
std::vector<Graph> random_division(const Graph& g, int groups, std::uint64_t seed);

}  // namespace ghct

#endif
