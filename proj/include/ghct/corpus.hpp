#ifndef GHCT_CORPUS_HPP
#define GHCT_CORPUS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ghct/graph.hpp"

namespace ghct {

// Deterministic graph generators backing the verification suite. All
// randomness flows through CounterRng so the corpus is identical on every
// platform and run.

Graph cycle_graph(int n);
Graph complete_graph(int n);

/// Two disjoint K_k cliques joined by a single unit bridge (vertex 0 of the
/// first to vertex 0 of the second).
Graph bridged_cliques(int k);

/// The strength pathology: s = 0, t = 1, spokes v_i each joined to both
/// terminals. Every edge has strength 1 while s-t connectivity is `spokes`.
Graph star_st(int spokes);

/// Circulant graph: i ~ i+o (mod n) for every offset o.
Graph circulant_graph(int n, const std::vector<int>& offsets);

/// Connected random multigraph: a random spanning tree plus extra uniformly
/// random chords, m edges total. Unit weights, or weights uniform in
/// [w_min, w_max].
Graph random_connected(int n, int m, std::uint64_t seed);
Graph random_connected_weighted(int n, int m, std::uint64_t seed, double w_min, double w_max);

struct CorpusEntry {
    std::string name;
    Graph graph;
    bool weighted;  // false: every weight is 1
};

/// Small deterministic structures: cycles C_4..C_12, cliques K_4..K_8,
/// bridged cliques, the s-t star.
std::vector<CorpusEntry> small_corpus();

/// small_corpus plus 25 unit and 25 weighted seeded random graphs (n <= 12,
/// m = 2n).
std::vector<CorpusEntry> full_corpus();

}  // namespace ghct

#endif
