#include "ghct/certificate.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ghct/errors.hpp"

namespace ghct {

namespace {

constexpr double kRelTol = 1e-12;

bool within(double value, double bound) {
    return value <= bound * (1.0 + kRelTol) + kRelTol;
}

}  // namespace

std::vector<double> certificate_thresholds(const Graph& g) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, edge id)
    for (int i = 0; i < m; ++i) {
        const Edge& e = g.edge(i);
        adj[e.u].emplace_back(e.v, i);
        adj[e.v].emplace_back(e.u, i);
    }
    std::vector<double> r(n, 0.0);
    std::vector<char> scanned(n, 0);
    std::vector<double> threshold(m, 0.0);
    for (int step = 0; step < n; ++step) {
        // maximum-adjacency order: next vertex is the unscanned one most
        // attached to the scanned set
        int u = -1;
        for (int v = 0; v < n; ++v)
            if (!scanned[v] && (u < 0 || r[v] > r[u])) u = v;
        scanned[u] = 1;
        for (auto [v, id] : adj[u]) {
            if (scanned[v]) continue;
            threshold[id] = r[v] + g.edge(id).weight;
            r[v] += g.edge(id).weight;
        }
    }
    return threshold;
}

std::vector<int> sparse_certificate(const Graph& g, double k) {
    if (!(k > 0.0)) throw std::invalid_argument("sparse_certificate: k must be positive");
    std::vector<double> threshold = certificate_thresholds(g);
    std::vector<int> out;
    for (int i = 0; i < g.edge_count(); ++i)
        if (within(threshold[i], k)) out.push_back(i);
    return out;
}

namespace {

// Contract-until-sparse loop on one connected component; returns the selected
// edge ids (indices into `orig`'s value space, i.e. the caller's graph).
std::vector<int> partition_connected(Graph cur, std::vector<int> orig, double k) {
    for (;;) {
        const int nc = cur.vertex_count();
        if (within(cur.total_weight(), 2.0 * k * (nc - 1))) return orig;
        std::vector<int> cert = sparse_certificate(cur, k);
        std::vector<char> keep(cur.edge_count(), 0);
        for (int id : cert) keep[id] = 1;
        std::vector<int> to_contract;
        for (int i = 0; i < cur.edge_count(); ++i)
            if (!keep[i]) to_contract.push_back(i);
        if (to_contract.empty())
            throw InternalError("partition: certificate kept every edge above the base threshold");
        Contraction c = contract(cur, to_contract);
        std::vector<int> next_orig;
        next_orig.reserve(c.graph.edge_count());
        for (int i = 0; i < cur.edge_count(); ++i)
            if (c.edge_map[i] >= 0) next_orig.push_back(orig[i]);
        cur = std::move(c.graph);
        orig = std::move(next_orig);
    }
}

}  // namespace

PartitionResult partition(const Graph& g, double k) {
    if (!(k > 0.0)) throw std::invalid_argument("partition: k must be positive");
    // each connected component is handled independently so the weight bound
    // telescopes across components
    Components comps = connected_components(g);
    std::vector<std::vector<int>> comp_verts(comps.count);
    std::vector<std::vector<int>> comp_edges(comps.count);
    for (int v = 0; v < g.vertex_count(); ++v) comp_verts[comps.label[v]].push_back(v);
    for (int i = 0; i < g.edge_count(); ++i)
        comp_edges[comps.label[g.edge(i).u]].push_back(i);

    PartitionResult result;
    std::vector<int> local_id(g.vertex_count(), -1);
    for (int c = 0; c < comps.count; ++c) {
        if (comp_edges[c].empty()) continue;
        for (size_t i = 0; i < comp_verts[c].size(); ++i)
            local_id[comp_verts[c][i]] = static_cast<int>(i);
        std::vector<Edge> local_edges;
        local_edges.reserve(comp_edges[c].size());
        for (int id : comp_edges[c]) {
            const Edge& e = g.edge(id);
            local_edges.push_back({local_id[e.u], local_id[e.v], e.weight});
        }
        Graph local(static_cast<int>(comp_verts[c].size()), std::move(local_edges));
        std::vector<int> picked = partition_connected(std::move(local), comp_edges[c], k);
        result.edges.insert(result.edges.end(), picked.begin(), picked.end());
    }
    std::sort(result.edges.begin(), result.edges.end());

    // component structure of g with E' removed
    std::vector<char> removed(g.edge_count(), 0);
    for (int id : result.edges) removed[id] = 1;
    std::vector<Edge> rest;
    for (int i = 0; i < g.edge_count(); ++i)
        if (!removed[i]) rest.push_back(g.edge(i));
    result.components = connected_components(Graph(g.vertex_count(), std::move(rest)));
    return result;
}

std::vector<int> weak_edges(const Graph& g, double k) {
    if (!(k > 0.0)) throw std::invalid_argument("weak_edges: k must be positive");
    const int n = g.vertex_count();
    const int m = g.edge_count();
    int iters = 0;
    while ((1LL << iters) < n) ++iters;

    std::vector<char> remaining(m, 1);
    std::vector<int> out;
    int remaining_count = m;
    for (int it = 0; it < iters && remaining_count > 0; ++it) {
        std::vector<Edge> sub_edges;
        std::vector<int> sub_orig;
        for (int i = 0; i < m; ++i) {
            if (!remaining[i]) continue;
            sub_edges.push_back(g.edge(i));
            sub_orig.push_back(i);
        }
        Graph sub(n, std::move(sub_edges));
        PartitionResult p = partition(sub, 2.0 * k);
        if (p.edges.empty()) break;  // graph is already 2k-connected everywhere
        for (int id : p.edges) {
            out.push_back(sub_orig[id]);
            remaining[sub_orig[id]] = 0;
            --remaining_count;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace ghct
