#ifndef GHCT_CERTIFICATE_HPP
#define GHCT_CERTIFICATE_HPP

#include <vector>

#include "ghct/graph.hpp"

namespace ghct {

/// E' plus the component structure of G - E'.
struct PartitionResult {
    std::vector<int> edges;  // indices into the caller's graph
    Components components;
};

/// Per-edge scan thresholds from a maximum-adjacency forest decomposition.
/// An edge with threshold t crosses no cut of value < t, so the edges with
/// threshold <= k form a sparse k-certificate of total weight <= k(n-1).
std::vector<double> certificate_thresholds(const Graph& g);

/// Sparse k-connectivity certificate: a subgraph of total weight <= k(n-1)
/// containing every edge that crosses a cut of value <= k.
std::vector<int> sparse_certificate(const Graph& g, double k);

/// Sparse k-partition: edge set containing all edges crossing cuts of value
/// <= k, of weight <= 2k(r-1) when its removal leaves r components.
PartitionResult partition(const Graph& g, double k);

/// Superset of all k-weak edges (edges of strength < k). If the output splits
/// g into r components its total weight is <= 4k(r-1).
std::vector<int> weak_edges(const Graph& g, double k);

}  // namespace ghct

#endif
