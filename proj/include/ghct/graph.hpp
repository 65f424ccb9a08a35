#ifndef GHCT_GRAPH_HPP
#define GHCT_GRAPH_HPP

#include <span>
#include <vector>

namespace ghct {

struct Edge {
    int u;
    int v;
    double weight;
};

/// Weighted undirected multigraph over dense vertex ids 0..n-1.
/// Edge identity is positional: parallel edges are distinguishable by index.
/// Self-loops are silently dropped at construction. Immutable once built.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int i) const { return edges_[static_cast<size_t>(i)]; }
    double total_weight() const;
    bool is_unit_weight() const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
};

/// One side of a bipartition together with the crossing weight.
struct Cut {
    std::vector<bool> side;
    double value = 0.0;
};

class UnionFind {
public:
    explicit UnionFind(int n);
    int find(int v);
    /// Returns true if the two elements were in different sets.
    bool unite(int a, int b);
    int component_count() const { return components_; }

private:
    std::vector<int> parent_;
    std::vector<int> rank_;
    int components_;
};

struct Components {
    std::vector<int> label;  // vertex -> component id, ids dense from 0
    int count = 0;
};

struct Contraction {
    Graph graph;
    std::vector<int> vertex_map;  // old vertex -> new vertex
    std::vector<int> edge_map;    // old edge -> new edge index, -1 if it became a loop
};

/// Total weight of edges with exactly one endpoint in `side`.
/// Throws std::invalid_argument if side is empty or the full vertex set.
double cut_value(const Graph& g, const std::vector<bool>& side);

Components connected_components(const Graph& g);

/// Contract every edge whose index appears in `edge_ids`. The result lives on
/// the connected components of (V, edge_ids); loops are dropped, parallel
/// edges kept.
Contraction contract(const Graph& g, const std::vector<int>& edge_ids);

/// Pointwise weight product, one factor per edge.
Graph scale(const Graph& g, std::span<const double> factors);

/// Disjoint union of the edge lists; vertex counts must match.
Graph add(const Graph& g, const Graph& h);

std::vector<bool> complement_side(const std::vector<bool>& side);

}  // namespace ghct

#endif
