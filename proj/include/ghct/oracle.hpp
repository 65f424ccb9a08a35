#ifndef GHCT_ORACLE_HPP
#define GHCT_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "ghct/graph.hpp"

namespace ghct {

/// Hard limits for the brute-force routines. Exceeding them throws
/// SizeCapError, never silently truncates.
struct OracleCaps {
    static constexpr int strengths = 14;
    static constexpr int cuts = 20;
    static constexpr int harness = 12;
};

/// Exact edge strengths by enumerating vertex-induced subgraphs.
std::vector<double> oracle_strengths(const Graph& g, int cap = OracleCaps::strengths);

/// Minimum value of a cut separating the endpoints of edge `e`.
double oracle_standard_connectivity(const Graph& g, int e, int cap = OracleCaps::strengths);

struct EnumeratedCut {
    std::uint32_t mask;  // side containing vertex 0, bit per vertex
    double value;
};

/// All 2^{n-1}-1 proper bipartitions with exact values.
std::vector<EnumeratedCut> enumerate_cuts(const Graph& g, int cap = OracleCaps::cuts);

struct MinCutResult {
    double value;
    std::vector<bool> side;
};

/// Global minimum cut (graph must have >= 2 vertices).
MinCutResult oracle_min_cut(const Graph& g, int cap = OracleCaps::cuts);

/// Minimum s-t cut by bipartition enumeration.
MinCutResult oracle_min_st_cut(const Graph& g, int s, int t, int cap = OracleCaps::cuts);

struct SparsestCutResult {
    double ratio;  // value / (|S| * |V \ S|)
    std::vector<bool> side;
};

SparsestCutResult oracle_sparsest_cut(const Graph& g, int cap = OracleCaps::cuts);

/// Finite discrete per-edge weight distribution.
struct EdgeDistribution {
    std::vector<double> values;
    std::vector<double> probs;  // same length, sums to 1

    double expectation() const;
    double max_value() const;
};

struct HarnessResult {
    double failure_rate;       // fraction of trials with some cut outside (1 +- eps)
    bool precondition_ok;      // k_e >= 2 m_e ln(n) / eps^2 for every edge
    double worst_margin;       // smallest k_e / (2 m_e ln(n) / eps^2) over edges
    int trials;
};

/// Samples the random-weight graph `trials` times and checks every cut of
/// every trial against its expectation. Trial t draws edge e's weight from
/// stream e, draw t of a CounterRng keyed by `seed`; the two-point
/// distribution {w (prob p), 0} therefore reproduces compress() keep
/// decisions when seed and p match.
HarnessResult appendix_harness(const Graph& expectation_graph,
                               const std::vector<EdgeDistribution>& dists, double epsilon,
                               int trials, std::uint64_t seed, int cap = OracleCaps::harness);

}  // namespace ghct

#endif
