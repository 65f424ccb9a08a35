#include "ghct/flow.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

#include "ghct/rng.hpp"
#include "ghct/strength.hpp"

namespace ghct {

namespace {

// Dinic over residual arcs. Arc 2i and 2i+1 are the two directions of
// undirected edge i; cap[2i] + cap[2i+1] == 2 * weight(i) throughout.
class Dinic {
public:
    Dinic(const Graph& g, int s, int t) : g_(g), s_(s), t_(t) {
        const int n = g.vertex_count();
        head_.assign(n, std::vector<int>());
        cap_.resize(2 * g.edge_count());
        double max_cap = 0.0;
        for (int i = 0; i < g.edge_count(); ++i) {
            const Edge& e = g.edge(i);
            cap_[2 * i] = e.weight;
            cap_[2 * i + 1] = e.weight;
            head_[e.u].push_back(2 * i);
            head_[e.v].push_back(2 * i + 1);
            max_cap = std::max(max_cap, e.weight);
        }
        floor_ = 1e-12 * max_cap;
        level_.assign(n, 0);
        it_.assign(n, 0);
    }

    double run() {
        double total = 0.0;
        while (bfs()) {
            std::fill(it_.begin(), it_.end(), 0);
            for (;;) {
                double pushed = dfs(s_, std::numeric_limits<double>::infinity());
                if (pushed <= floor_) break;
                total += pushed;
            }
        }
        return total;
    }

    std::vector<bool> source_side() const {
        std::vector<bool> side(g_.vertex_count(), false);
        std::queue<int> q;
        q.push(s_);
        side[s_] = true;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int a : head_[v]) {
                int w = other(a, v);
                if (!side[w] && cap_[a] > floor_) {
                    side[w] = true;
                    q.push(w);
                }
            }
        }
        return side;
    }

    double edge_flow(int i) const {
        // positive means u -> v
        return (cap_[2 * i + 1] - cap_[2 * i]) / 2.0;
    }

private:
    int other(int arc, int v) const {
        const Edge& e = g_.edge(arc / 2);
        return e.u == v ? e.v : e.u;
    }

    bool bfs() {
        std::fill(level_.begin(), level_.end(), -1);
        std::queue<int> q;
        level_[s_] = 0;
        q.push(s_);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int a : head_[v]) {
                int w = other(a, v);
                if (level_[w] < 0 && cap_[a] > floor_) {
                    level_[w] = level_[v] + 1;
                    q.push(w);
                }
            }
        }
        return level_[t_] >= 0;
    }

    double dfs(int v, double limit) {
        if (v == t_) return limit;
        for (int& i = it_[v]; i < static_cast<int>(head_[v].size()); ++i) {
            int a = head_[v][i];
            int w = other(a, v);
            if (level_[w] != level_[v] + 1 || cap_[a] <= floor_) continue;
            double pushed = dfs(w, std::min(limit, cap_[a]));
            if (pushed > floor_) {
                cap_[a] -= pushed;
                cap_[a ^ 1] += pushed;
                return pushed;
            }
        }
        level_[v] = -1;
        return 0.0;
    }

    const Graph& g_;
    int s_;
    int t_;
    double floor_;
    std::vector<std::vector<int>> head_;
    std::vector<double> cap_;
    std::vector<int> level_;
    std::vector<int> it_;
};

FlowAssignment zero_flow(const Graph& g, int s, int t) {
    FlowAssignment f;
    f.flows.assign(g.edge_count(), 0.0);
    f.source = s;
    f.sink = t;
    return f;
}

void check_st(const Graph& g, int s, int t) {
    if (s < 0 || s >= g.vertex_count() || t < 0 || t >= g.vertex_count())
        throw std::invalid_argument("flow: terminal out of range");
    if (s == t) throw std::invalid_argument("flow: source equals sink");
}

}  // namespace

MaxFlowResult max_flow_with_cut(const Graph& g, int s, int t) {
    check_st(g, s, t);
    Dinic dinic(g, s, t);
    MaxFlowResult result;
    result.flow = zero_flow(g, s, t);
    result.flow.value = dinic.run();
    for (int i = 0; i < g.edge_count(); ++i) result.flow.flows[i] = dinic.edge_flow(i);
    result.source_side = dinic.source_side();
    return result;
}

FlowAssignment max_flow(const Graph& g, int s, int t) {
    return max_flow_with_cut(g, s, t).flow;
}

CutResult approx_min_cut(const Graph& g, int s, int t, const SparsifyParams& params) {
    check_st(g, s, t);
    Components comps = connected_components(g);
    if (comps.label[s] != comps.label[t]) {
        CutResult r;
        r.cut.side.assign(g.vertex_count(), false);
        for (int v = 0; v < g.vertex_count(); ++v)
            r.cut.side[v] = comps.label[v] == comps.label[s];
        r.cut.value = 0.0;
        r.compressed_value = 0.0;
        return r;
    }

    if (params.epsilon == 0.0) {  // sentinel: exact
        MaxFlowResult mf = max_flow_with_cut(g, s, t);
        CutResult r;
        r.cut.side = mf.source_side;
        r.cut.value = mf.flow.value;
        r.compressed_value = mf.flow.value;
        r.certificate = std::move(mf.flow);
        return r;
    }

    StrengthLabels labels = window_estimation(g);
    CompressedGraph cg = compress(g, labels, params);
    MaxFlowResult mf = max_flow_with_cut(cg.graph, s, t);
    CutResult r;
    r.cut.side = mf.source_side;
    r.cut.value = cut_value(g, r.cut.side);
    r.compressed_value = mf.flow.value;
    r.certificate = std::move(mf.flow);
    return r;
}

FlowAssignment approx_max_flow(const Graph& g, int s, int t, const SparsifyParams& params) {
    check_st(g, s, t);
    Components comps = connected_components(g);
    if (comps.label[s] != comps.label[t] || g.edge_count() == 0) return zero_flow(g, s, t);
    if (params.epsilon == 0.0) return max_flow(g, s, t);
    params.validate();

    const double c = static_cast<double>(g.edge_count()) / g.vertex_count();
    const double p = params.rho(g.vertex_count()) / c;
    if (p >= 1.0 || g.vertex_count() < 3) return max_flow(g, s, t);

    SmoothedGraph smoothed = smooth_tracked(g, window_estimation(g), c);
    int groups = static_cast<int>(std::ceil(1.0 / p));
    std::vector<Graph> parts = random_division(smoothed.graph, groups, params.seed);

    // map group edges back to smooth-piece ids to reassemble the flow
    CounterRng rng(params.seed);
    std::vector<std::vector<int>> piece_of(groups);
    for (int i = 0; i < smoothed.graph.edge_count(); ++i) {
        auto which = rng.below(static_cast<std::uint64_t>(i), 0,
                               static_cast<std::uint64_t>(groups));
        piece_of[which].push_back(i);
    }

    FlowAssignment total = zero_flow(g, s, t);
    for (int gi = 0; gi < groups; ++gi) {
        if (parts[gi].edge_count() == 0) continue;
        FlowAssignment part = max_flow(parts[gi], s, t);
        total.value += part.value;
        for (int j = 0; j < parts[gi].edge_count(); ++j) {
            int piece = piece_of[gi][j];
            total.flows[smoothed.source_edge[piece]] += part.flows[j];
        }
    }
    return total;
}

}  // namespace ghct
