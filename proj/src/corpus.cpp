#include "ghct/corpus.hpp"

#include <stdexcept>

#include "ghct/rng.hpp"

namespace ghct {

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
    std::vector<Edge> edges;
    edges.reserve(n);
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, 1.0});
    return Graph(n, std::move(edges));
}

Graph complete_graph(int n) {
    if (n < 2) throw std::invalid_argument("complete_graph: need n >= 2");
    std::vector<Edge> edges;
    edges.reserve(n * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v, 1.0});
    return Graph(n, std::move(edges));
}

Graph bridged_cliques(int k) {
    if (k < 2) throw std::invalid_argument("bridged_cliques: need k >= 2");
    std::vector<Edge> edges;
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) {
            edges.push_back({u, v, 1.0});
            edges.push_back({k + u, k + v, 1.0});
        }
    edges.push_back({0, k, 1.0});
    return Graph(2 * k, std::move(edges));
}

Graph star_st(int spokes) {
    if (spokes < 1) throw std::invalid_argument("star_st: need at least one spoke");
    std::vector<Edge> edges;
    for (int i = 0; i < spokes; ++i) {
        edges.push_back({0, 2 + i, 1.0});
        edges.push_back({2 + i, 1, 1.0});
    }
    return Graph(2 + spokes, std::move(edges));
}

Graph circulant_graph(int n, const std::vector<int>& offsets) {
    if (n < 3) throw std::invalid_argument("circulant_graph: need n >= 3");
    std::vector<Edge> edges;
    for (int o : offsets) {
        if (o < 1 || 2 * o > n)
            throw std::invalid_argument("circulant_graph: offsets must lie in [1, n/2]");
        int count = (2 * o == n) ? n / 2 : n;  // antipodal offset gives each edge once
        for (int i = 0; i < count; ++i) edges.push_back({i, (i + o) % n, 1.0});
    }
    return Graph(n, std::move(edges));
}

namespace {

Graph random_graph(int n, int m, std::uint64_t seed, bool weighted, double w_min,
                   double w_max) {
    if (n < 2 || m < n - 1)
        throw std::invalid_argument("random_connected: need n >= 2 and m >= n-1");
    CounterRng rng(seed);
    std::vector<Edge> edges;
    edges.reserve(m);
    // random spanning tree: attach each vertex to a uniformly random earlier one
    for (int v = 1; v < n; ++v) {
        int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(v), 0,
                                           static_cast<std::uint64_t>(v)));
        edges.push_back({u, v, 1.0});
    }
    for (int j = 0; j < m - (n - 1); ++j) {
        std::uint64_t stream = static_cast<std::uint64_t>(n + j);
        int u = static_cast<int>(rng.below(stream, 0, static_cast<std::uint64_t>(n)));
        int v = u;
        for (std::uint64_t draw = 1; v == u; ++draw)
            v = static_cast<int>(rng.below(stream, draw, static_cast<std::uint64_t>(n)));
        edges.push_back({u, v, 1.0});
    }
    if (weighted)
        for (int i = 0; i < m; ++i)
            edges[i].weight =
                w_min + rng.uniform(0x10000u + static_cast<std::uint64_t>(i), 0) *
                            (w_max - w_min);
    return Graph(n, std::move(edges));
}

}  // namespace

Graph random_connected(int n, int m, std::uint64_t seed) {
    return random_graph(n, m, seed, false, 1.0, 1.0);
}

Graph random_connected_weighted(int n, int m, std::uint64_t seed, double w_min,
                                double w_max) {
    if (!(w_min > 0.0 && w_max >= w_min))
        throw std::invalid_argument("random_connected_weighted: need 0 < w_min <= w_max");
    return random_graph(n, m, seed, true, w_min, w_max);
}

std::vector<CorpusEntry> small_corpus() {
    std::vector<CorpusEntry> out;
    for (int n = 4; n <= 12; ++n)
        out.push_back({"cycle_C" + std::to_string(n), cycle_graph(n), false});
    for (int n = 4; n <= 8; ++n)
        out.push_back({"complete_K" + std::to_string(n), complete_graph(n), false});
    out.push_back({"bridged_K4", bridged_cliques(4), false});
    out.push_back({"bridged_K5", bridged_cliques(5), false});
    out.push_back({"star_st_5", star_st(5), false});
    return out;
}

std::vector<CorpusEntry> full_corpus() {
    std::vector<CorpusEntry> out = small_corpus();
    for (int i = 0; i < 25; ++i) {
        int n = 6 + i % 7;  // 6..12
        out.push_back({"random_unit_" + std::to_string(i),
                       random_connected(n, 2 * n, 1000 + static_cast<std::uint64_t>(i)),
                       false});
    }
    for (int i = 0; i < 25; ++i) {
        int n = 6 + i % 7;
        out.push_back({"random_weighted_" + std::to_string(i),
                       random_connected_weighted(n, 2 * n,
                                                 2000 + static_cast<std::uint64_t>(i), 1.0,
                                                 8.0),
                       true});
    }
    return out;
}

}  // namespace ghct
