#include "ghct/strength.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "ghct/certificate.hpp"
#include "ghct/errors.hpp"
#include "ghct/oracle.hpp"

namespace ghct {

namespace {

// Recursion state shared across Estimation levels: label slots indexed by the
// caller's original edge ids.
struct Estimator {
    const Graph* g;
    std::vector<double>* labels;

    void run(const std::vector<int>& verts, const std::vector<int>& edge_ids, double k) {
        if (edge_ids.empty()) return;

        std::vector<int> local_id(g->vertex_count(), -1);
        for (size_t i = 0; i < verts.size(); ++i) local_id[verts[i]] = static_cast<int>(i);
        std::vector<Edge> local_edges;
        local_edges.reserve(edge_ids.size());
        double total = 0.0;
        for (int id : edge_ids) {
            const Edge& e = g->edge(id);
            local_edges.push_back({local_id[e.u], local_id[e.v], e.weight});
            total += e.weight;
        }
        if (k > total * (1.0 + 1e-9))
            throw InternalError("estimation: level parameter exceeds component weight");

        Graph h(static_cast<int>(verts.size()), local_edges);
        std::vector<int> weak = weak_edges(h, 2.0 * k);
        std::vector<char> removed(edge_ids.size(), 0);
        for (int id : weak) {
            (*labels)[static_cast<size_t>(edge_ids[id])] = k;
            removed[id] = 1;
        }
        if (weak.size() == edge_ids.size()) return;

        // recurse on the nontrivial components of H - E'
        std::vector<Edge> rest;
        std::vector<int> rest_orig;
        for (size_t i = 0; i < edge_ids.size(); ++i) {
            if (removed[i]) continue;
            rest.push_back(local_edges[i]);
            rest_orig.push_back(edge_ids[i]);
        }
        Graph hr(static_cast<int>(verts.size()), rest);
        Components comps = connected_components(hr);
        std::vector<std::vector<int>> comp_verts(comps.count);
        std::vector<std::vector<int>> comp_edges(comps.count);
        for (size_t i = 0; i < verts.size(); ++i)
            comp_verts[comps.label[i]].push_back(verts[i]);
        for (size_t i = 0; i < rest_orig.size(); ++i) {
            const Edge& e = g->edge(rest_orig[i]);
            comp_edges[comps.label[local_id[e.u]]].push_back(rest_orig[i]);
        }
        for (int c = 0; c < comps.count; ++c)
            if (!comp_edges[c].empty()) run(comp_verts[c], comp_edges[c], 2.0 * k);
    }
};

}  // namespace

StrengthLabels estimation(const Graph& g, double k0) {
    if (!(k0 > 0.0)) throw std::invalid_argument("estimation: k0 must be positive");
    StrengthLabels out;
    out.kind = StrengthLabels::Kind::Estimated;
    out.labels.assign(g.edge_count(), 0.0);
    Components comps = connected_components(g);
    std::vector<std::vector<int>> comp_verts(comps.count);
    std::vector<std::vector<int>> comp_edges(comps.count);
    for (int v = 0; v < g.vertex_count(); ++v) comp_verts[comps.label[v]].push_back(v);
    for (int i = 0; i < g.edge_count(); ++i)
        comp_edges[comps.label[g.edge(i).u]].push_back(i);
    Estimator est{&g, &out.labels};
    for (int c = 0; c < comps.count; ++c)
        if (!comp_edges[c].empty()) est.run(comp_verts[c], comp_edges[c], k0);
    return out;
}

MstBounds mst_bounds(const Graph& g) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.edge(a).weight > g.edge(b).weight; });
    UnionFind uf(n);
    std::vector<std::vector<std::pair<int, double>>> tree(n);
    for (int id : order) {
        const Edge& e = g.edge(id);
        if (uf.unite(e.u, e.v)) {
            tree[e.u].emplace_back(e.v, e.weight);
            tree[e.v].emplace_back(e.u, e.weight);
        }
    }

    MstBounds out;
    out.d.assign(m, 0.0);
    std::vector<double> best(n);
    std::vector<int> stack;
    std::vector<char> seen(n);
    for (int i = 0; i < m; ++i) {
        const Edge& e = g.edge(i);
        // bottleneck weight along the unique forest path
        std::fill(seen.begin(), seen.end(), 0);
        stack.assign(1, e.u);
        seen[e.u] = 1;
        best[e.u] = std::numeric_limits<double>::infinity();
        double found = 0.0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (v == e.v) {
                found = best[v];
                break;
            }
            for (auto [w, wt] : tree[v]) {
                if (seen[w]) continue;
                seen[w] = 1;
                best[w] = std::min(best[v], wt);
                stack.push_back(w);
            }
        }
        if (found == 0.0) throw InternalError("mst_bounds: endpoints not connected in forest");
        out.d[i] = found;
    }
    return out;
}

StrengthLabels window_estimation(const Graph& g) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    StrengthLabels out;
    out.kind = StrengthLabels::Kind::Estimated;
    out.labels.assign(m, 0.0);
    if (m == 0) return out;

    MstBounds mst = mst_bounds(g);
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return mst.d[a] > mst.d[b]; });

    UnionFind uf(n);
    std::vector<int> moved;  // accumulated window graph, original edge ids
    size_t next = 0;
    const double nn = static_cast<double>(n) * static_cast<double>(n);

    while (next < order.size()) {
        double window_top = mst.d[order[next]];
        double floor = window_top / static_cast<double>(n);

        for (int id : moved)
            if (mst.d[id] > nn * window_top) uf.unite(g.edge(id).u, g.edge(id).v);

        std::vector<int> fresh;
        while (next < order.size() && mst.d[order[next]] >= floor) {
            fresh.push_back(order[next]);
            moved.push_back(order[next]);
            ++next;
        }

        // phase graph over contraction classes
        std::vector<int> class_id(n, -1);
        int classes = 0;
        std::vector<Edge> phase_edges;
        std::vector<int> phase_orig;
        for (int id : moved) {
            const Edge& e = g.edge(id);
            int u = uf.find(e.u);
            int v = uf.find(e.v);
            if (class_id[u] < 0) class_id[u] = classes++;
            if (class_id[v] < 0) class_id[v] = classes++;
            if (class_id[u] == class_id[v]) continue;
            phase_edges.push_back({class_id[u], class_id[v], e.weight});
            phase_orig.push_back(id);
        }
        Graph phase(classes, phase_edges);
        StrengthLabels phase_labels = estimation(phase, floor);
        std::vector<double> by_orig(m, 0.0);
        for (size_t i = 0; i < phase_orig.size(); ++i)
            by_orig[static_cast<size_t>(phase_orig[i])] = phase_labels.labels[i];
        for (int id : fresh) {
            double label = by_orig[static_cast<size_t>(id)];
            if (!(label > 0.0))
                throw InternalError("window_estimation: fresh edge collapsed to a loop");
            out.labels[static_cast<size_t>(id)] = label;
        }
    }

    // d_e is itself a valid lower bound on strength; never report less
    for (int i = 0; i < m; ++i) out.labels[i] = std::max(out.labels[i], mst.d[i]);
    return out;
}

StrengthLabels exact_strengths(const Graph& g, int oracle_cap) {
    StrengthLabels out;
    out.kind = StrengthLabels::Kind::Exact;
    out.labels = oracle_strengths(g, oracle_cap);
    return out;
}

}  // namespace ghct
