#include "ghct/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "ghct/errors.hpp"
#include "ghct/rng.hpp"

namespace ghct {

namespace {

void check_cap(const Graph& g, int cap, const char* who) {
    if (g.vertex_count() > cap)
        throw SizeCapError(std::string(who) + ": vertex count " +
                           std::to_string(g.vertex_count()) + " exceeds cap " +
                           std::to_string(cap));
}

struct MaskedEdge {
    std::uint32_t u_bit;
    std::uint32_t v_bit;
    double weight;
};

// Min cut of the subgraph induced by `subset`, or 0 if it is disconnected.
// `side_out`, when non-null, receives the minimizing side (within subset).
double induced_connectivity(const std::vector<MaskedEdge>& edges, std::uint32_t subset,
                            std::uint32_t* side_out = nullptr) {
    std::uint32_t low = subset & (~subset + 1);
    double best = std::numeric_limits<double>::infinity();
    std::uint32_t best_side = 0;
    // enumerate sides containing the lowest vertex of the subset
    std::uint32_t rest = subset & ~low;
    for (std::uint32_t s = rest;; s = (s - 1) & rest) {
        std::uint32_t side = s | low;
        if (side != subset) {
            double value = 0.0;
            for (const MaskedEdge& e : edges)
                if (((side & e.u_bit) != 0) != ((side & e.v_bit) != 0)) value += e.weight;
            if (value < best) {
                best = value;
                best_side = side;
            }
        }
        if (s == 0) break;
    }
    if (side_out) *side_out = best_side;
    return best;
}

}  // namespace

std::vector<double> oracle_strengths(const Graph& g, int cap) {
    check_cap(g, cap, "oracle_strengths");
    const int n = g.vertex_count();
    const int m = g.edge_count();
    std::vector<double> strength(m, 0.0);
    if (n < 2 || m == 0) return strength;

    std::vector<std::uint32_t> edge_bits(m);
    for (int i = 0; i < m; ++i)
        edge_bits[i] = (1u << g.edge(i).u) | (1u << g.edge(i).v);

    const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    for (std::uint32_t w = 0; w <= full; ++w) {
        if (std::popcount(w) < 2) continue;
        std::vector<int> inside;
        std::vector<MaskedEdge> edges;
        std::vector<double> degree(static_cast<size_t>(n), 0.0);
        for (int i = 0; i < m; ++i) {
            if ((edge_bits[i] & w) != edge_bits[i]) continue;
            inside.push_back(i);
            const Edge& e = g.edge(i);
            edges.push_back({1u << e.u, 1u << e.v, e.weight});
            degree[e.u] += e.weight;
            degree[e.v] += e.weight;
        }
        if (inside.empty()) continue;

        // connectivity <= induced min degree, so subsets that cannot improve
        // any contained edge are skipped
        double min_degree = std::numeric_limits<double>::infinity();
        for (int v = 0; v < n; ++v)
            if (w & (1u << v)) min_degree = std::min(min_degree, degree[v]);
        bool useful = false;
        for (int i : inside)
            if (strength[i] < min_degree) {
                useful = true;
                break;
            }
        if (!useful) continue;

        double conn = induced_connectivity(edges, w);
        for (int i : inside) strength[i] = std::max(strength[i], conn);
    }
    return strength;
}

double oracle_standard_connectivity(const Graph& g, int e, int cap) {
    check_cap(g, cap, "oracle_standard_connectivity");
    if (e < 0 || e >= g.edge_count())
        throw std::invalid_argument("oracle_standard_connectivity: bad edge index");
    return oracle_min_st_cut(g, g.edge(e).u, g.edge(e).v, cap).value;
}

std::vector<EnumeratedCut> enumerate_cuts(const Graph& g, int cap) {
    check_cap(g, cap, "enumerate_cuts");
    const int n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("enumerate_cuts: need at least 2 vertices");
    const std::uint32_t full = (1u << n) - 1;
    std::vector<EnumeratedCut> cuts;
    cuts.reserve((1u << (n - 1)) - 1);
    for (std::uint32_t x = 0; x < (1u << (n - 1)); ++x) {
        std::uint32_t mask = (x << 1) | 1u;
        if (mask == full) continue;
        double value = 0.0;
        for (const Edge& e : g.edges())
            if (((mask >> e.u) & 1u) != ((mask >> e.v) & 1u)) value += e.weight;
        cuts.push_back({mask, value});
    }
    return cuts;
}

MinCutResult oracle_min_cut(const Graph& g, int cap) {
    auto cuts = enumerate_cuts(g, cap);
    const EnumeratedCut* best = &cuts.front();
    for (const EnumeratedCut& c : cuts)
        if (c.value < best->value) best = &c;
    MinCutResult out;
    out.value = best->value;
    out.side.assign(g.vertex_count(), false);
    for (int v = 0; v < g.vertex_count(); ++v) out.side[v] = (best->mask >> v) & 1u;
    return out;
}

MinCutResult oracle_min_st_cut(const Graph& g, int s, int t, int cap) {
    check_cap(g, cap, "oracle_min_st_cut");
    if (s == t) throw std::invalid_argument("oracle_min_st_cut: s == t");
    const int n = g.vertex_count();
    MinCutResult out;
    out.value = std::numeric_limits<double>::infinity();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        if (!((mask >> s) & 1u) || ((mask >> t) & 1u)) continue;
        double value = 0.0;
        for (const Edge& e : g.edges())
            if (((mask >> e.u) & 1u) != ((mask >> e.v) & 1u)) value += e.weight;
        if (value < out.value) {
            out.value = value;
            out.side.assign(n, false);
            for (int v = 0; v < n; ++v) out.side[v] = (mask >> v) & 1u;
        }
    }
    return out;
}

SparsestCutResult oracle_sparsest_cut(const Graph& g, int cap) {
    auto cuts = enumerate_cuts(g, cap);
    const int n = g.vertex_count();
    SparsestCutResult out;
    out.ratio = std::numeric_limits<double>::infinity();
    for (const EnumeratedCut& c : cuts) {
        int size = std::popcount(c.mask);
        double ratio = c.value / (static_cast<double>(size) * (n - size));
        if (ratio < out.ratio) {
            out.ratio = ratio;
            out.side.assign(n, false);
            for (int v = 0; v < n; ++v) out.side[v] = (c.mask >> v) & 1u;
        }
    }
    return out;
}

double EdgeDistribution::expectation() const {
    double e = 0.0;
    for (size_t i = 0; i < values.size(); ++i) e += values[i] * probs[i];
    return e;
}

double EdgeDistribution::max_value() const {
    double m = 0.0;
    for (double v : values) m = std::max(m, v);
    return m;
}

HarnessResult appendix_harness(const Graph& expectation_graph,
                               const std::vector<EdgeDistribution>& dists, double epsilon,
                               int trials, std::uint64_t seed, int cap) {
    check_cap(expectation_graph, cap, "appendix_harness");
    const int m = expectation_graph.edge_count();
    if (static_cast<int>(dists.size()) != m)
        throw std::invalid_argument("appendix_harness: one distribution per edge required");
    if (!(epsilon > 0.0)) throw std::invalid_argument("appendix_harness: epsilon must be > 0");
    for (const EdgeDistribution& d : dists) {
        if (d.values.size() != d.probs.size() || d.values.empty())
            throw std::invalid_argument("appendix_harness: malformed distribution");
        double total = 0.0;
        for (double p : d.probs) total += p;
        if (std::abs(total - 1.0) > 1e-9)
            throw std::invalid_argument("appendix_harness: probabilities must sum to 1");
    }

    const int n = expectation_graph.vertex_count();
    std::vector<double> strengths = oracle_strengths(expectation_graph, cap);
    HarnessResult result;
    result.trials = trials;
    result.precondition_ok = true;
    result.worst_margin = std::numeric_limits<double>::infinity();
    const double requirement_scale = 2.0 * std::log(static_cast<double>(n)) / (epsilon * epsilon);
    for (int i = 0; i < m; ++i) {
        double required = dists[i].max_value() * requirement_scale;
        if (required > 0.0)
            result.worst_margin = std::min(result.worst_margin, strengths[i] / required);
        if (strengths[i] + 1e-12 < required) result.precondition_ok = false;
    }

    auto expected_cuts = enumerate_cuts(expectation_graph, cap);
    CounterRng rng(seed);
    std::vector<double> sampled(m);
    int failures = 0;
    for (int t = 0; t < trials; ++t) {
        for (int i = 0; i < m; ++i) {
            double u = rng.uniform(static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(t));
            double cum = 0.0;
            double value = dists[i].values.back();
            for (size_t j = 0; j < dists[i].values.size(); ++j) {
                cum += dists[i].probs[j];
                if (u < cum) {
                    value = dists[i].values[j];
                    break;
                }
            }
            sampled[i] = value;
        }
        bool bad = false;
        for (const EnumeratedCut& c : expected_cuts) {
            double value = 0.0;
            for (int i = 0; i < m; ++i) {
                const Edge& e = expectation_graph.edge(i);
                if (((c.mask >> e.u) & 1u) != ((c.mask >> e.v) & 1u)) value += sampled[i];
            }
            if (std::abs(value - c.value) > epsilon * c.value + 1e-12) {
                bad = true;
                break;
            }
        }
        if (bad) ++failures;
    }
    result.failure_rate = trials > 0 ? static_cast<double>(failures) / trials : 0.0;
    return result;
}

}  // namespace ghct
