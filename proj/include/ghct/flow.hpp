#ifndef GHCT_FLOW_HPP
#define GHCT_FLOW_HPP

#include <optional>
#include <vector>

#include "ghct/graph.hpp"
#include "ghct/sampling.hpp"

namespace ghct {

/// An s-t flow on an undirected graph. flows[e] is signed: positive means
/// flow from edge(e).u toward edge(e).v.
struct FlowAssignment {
    std::vector<double> flows;
    double value = 0.0;
    int source = -1;
    int sink = -1;
};

struct MaxFlowResult {
    FlowAssignment flow;
    std::vector<bool> source_side;  // residual reachability from s; a min cut
};

/// Exact blocking-flow max flow; undirected edges are modeled as antiparallel
/// residual arc pairs sharing capacity. Augmentations below 1e-12 times the
/// maximum capacity are treated as zero.
MaxFlowResult max_flow_with_cut(const Graph& g, int s, int t);
FlowAssignment max_flow(const Graph& g, int s, int t);

struct CutResult {
    Cut cut;                  // side + value measured in the ORIGINAL graph
    double compressed_value;  // the min cut value seen in the compressed graph
    std::optional<FlowAssignment> certificate;  // flow in the compressed graph
};

/// Approximate s-t min cut: estimate strengths, compress, solve exactly on
/// the compressed graph, report the residual side evaluated against g.
/// epsilon == 0 bypasses compression and returns the exact min cut.
CutResult approx_min_cut(const Graph& g, int s, int t, const SparsifyParams& params);

/// Approximate max flow by smoothing with c = m/n and randomized
/// divide-and-conquer over ceil(1/p) edge groups, p = rho/c. Falls back to
/// the exact solver when p >= 1 or epsilon == 0.
FlowAssignment approx_max_flow(const Graph& g, int s, int t, const SparsifyParams& params);

}  // namespace ghct

#endif
