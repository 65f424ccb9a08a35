#include "ghct/graph.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace ghct {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    edges_.reserve(edges.size());
    for (const Edge& e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw std::invalid_argument("graph: vertex id out of range");
        if (!(e.weight > 0.0))
            throw std::invalid_argument("graph: edge weight must be positive");
        if (e.u == e.v) continue;  // self-loops affect no cut
        edges_.push_back(e);
    }
}

double Graph::total_weight() const {
    double w = 0.0;
    for (const Edge& e : edges_) w += e.weight;
    return w;
}

bool Graph::is_unit_weight() const {
    for (const Edge& e : edges_)
        if (e.weight != 1.0) return false;
    return true;
}

UnionFind::UnionFind(int n) : parent_(n), rank_(n, 0), components_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
}

int UnionFind::find(int v) {
    while (parent_[v] != v) {
        parent_[v] = parent_[parent_[v]];
        v = parent_[v];
    }
    return v;
}

bool UnionFind::unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    --components_;
    return true;
}

double cut_value(const Graph& g, const std::vector<bool>& side) {
    if (static_cast<int>(side.size()) != g.vertex_count())
        throw std::invalid_argument("cut_value: side size mismatch");
    int in_side = 0;
    for (bool b : side)
        if (b) ++in_side;
    if (in_side == 0 || in_side == g.vertex_count())
        throw std::invalid_argument("cut_value: side must be a proper nonempty subset");
    double value = 0.0;
    for (const Edge& e : g.edges())
        if (side[e.u] != side[e.v]) value += e.weight;
    return value;
}

Components connected_components(const Graph& g) {
    UnionFind uf(g.vertex_count());
    for (const Edge& e : g.edges()) uf.unite(e.u, e.v);
    Components comps;
    comps.label.assign(g.vertex_count(), -1);
    for (int v = 0; v < g.vertex_count(); ++v) {
        int root = uf.find(v);
        if (comps.label[root] < 0) comps.label[root] = comps.count++;
        comps.label[v] = comps.label[root];
    }
    return comps;
}

Contraction contract(const Graph& g, const std::vector<int>& edge_ids) {
    UnionFind uf(g.vertex_count());
    for (int id : edge_ids) {
        if (id < 0 || id >= g.edge_count())
            throw std::invalid_argument("contract: edge index out of range");
        uf.unite(g.edge(id).u, g.edge(id).v);
    }
    Contraction result;
    result.vertex_map.assign(g.vertex_count(), -1);
    std::vector<int> root_id(g.vertex_count(), -1);
    int next = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int root = uf.find(v);
        if (root_id[root] < 0) root_id[root] = next++;
        result.vertex_map[v] = root_id[root];
    }
    std::vector<Edge> edges;
    result.edge_map.assign(g.edge_count(), -1);
    for (int i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edge(i);
        int u = result.vertex_map[e.u];
        int v = result.vertex_map[e.v];
        if (u == v) continue;
        result.edge_map[i] = static_cast<int>(edges.size());
        edges.push_back({u, v, e.weight});
    }
    result.graph = Graph(next, std::move(edges));
    return result;
}

Graph scale(const Graph& g, std::span<const double> factors) {
    if (static_cast<int>(factors.size()) != g.edge_count())
        throw std::invalid_argument("scale: one factor per edge required");
    std::vector<Edge> edges = g.edges();
    for (size_t i = 0; i < edges.size(); ++i) {
        if (!(factors[i] > 0.0)) throw std::invalid_argument("scale: factors must be positive");
        edges[i].weight *= factors[i];
    }
    return Graph(g.vertex_count(), std::move(edges));
}

Graph add(const Graph& g, const Graph& h) {
    if (g.vertex_count() != h.vertex_count())
        throw std::invalid_argument("add: vertex count mismatch");
    std::vector<Edge> edges = g.edges();
    edges.insert(edges.end(), h.edges().begin(), h.edges().end());
    return Graph(g.vertex_count(), std::move(edges));
}

std::vector<bool> complement_side(const std::vector<bool>& side) {
    std::vector<bool> out(side.size());
    for (size_t i = 0; i < side.size(); ++i) out[i] = !side[i];
    return out;
}

}  // namespace ghct
