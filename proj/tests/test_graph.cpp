#include <doctest.h>

#include <stdexcept>

#include "ghct/corpus.hpp"
#include "ghct/graph.hpp"
#include "ghct/oracle.hpp"
#include "ghct/rng.hpp"

using namespace ghct;

TEST_SUITE("graph") {

TEST_CASE("construction validates and drops self-loops") {
    Graph g(3, {{0, 1, 1.0}, {1, 1, 5.0}, {1, 2, 2.0}});
    CHECK(g.edge_count() == 2);
    CHECK(g.total_weight() == 3.0);
    CHECK_THROWS_AS(Graph(2, {{0, 2, 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{0, -1, 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{0, 1, 0.0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{0, 1, -2.0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(-1, {}), std::invalid_argument);
}

TEST_CASE("unit-weight detection") {
    CHECK(cycle_graph(5).is_unit_weight());
    CHECK_FALSE(Graph(2, {{0, 1, 2.0}}).is_unit_weight());
}

TEST_CASE("cut_value on a unit triangle degree cut") {
    Graph g = complete_graph(3);
    CHECK(cut_value(g, {true, false, false}) == 2.0);
}

TEST_CASE("cut_value on a single weighted edge") {
    Graph g(2, {{0, 1, 7.5}});
    CHECK(cut_value(g, {true, false}) == 7.5);
}

TEST_CASE("cut_value on C4 opposite corners") {
    Graph g = cycle_graph(4);
    CHECK(cut_value(g, {true, false, true, false}) == 4.0);
}

TEST_CASE("cut_value rejects empty and full sides") {
    Graph g = cycle_graph(4);
    CHECK_THROWS_AS(cut_value(g, {false, false, false, false}), std::invalid_argument);
    CHECK_THROWS_AS(cut_value(g, {true, true, true, true}), std::invalid_argument);
    CHECK_THROWS_AS(cut_value(g, {true, false}), std::invalid_argument);
}

TEST_CASE("cut value is symmetric under complement") {
    CounterRng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_connected_weighted(8, 16, 500 + trial, 1.0, 5.0);
        std::vector<bool> side(8, false);
        int count = 0;
        for (int v = 0; v < 8; ++v) {
            side[v] = rng.flip(trial, v, 0.5);
            if (side[v]) ++count;
        }
        if (count == 0 || count == 8) continue;
        CHECK(cut_value(g, side) == doctest::Approx(cut_value(g, complement_side(side))));
    }
}

TEST_CASE("connected_components counts") {
    CHECK(connected_components(Graph(5, {})).count == 5);
    CHECK(connected_components(cycle_graph(4)).count == 1);
    Graph two_triangles(6, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {3, 4, 1}, {4, 5, 1}, {3, 5, 1}});
    Components c = connected_components(two_triangles);
    CHECK(c.count == 2);
    CHECK(c.label[0] == c.label[2]);
    CHECK(c.label[3] == c.label[5]);
    CHECK(c.label[0] != c.label[3]);
}

TEST_CASE("contracting a whole path collapses it") {
    Graph g(3, {{0, 1, 1}, {1, 2, 1}});
    Contraction c = contract(g, {0, 1});
    CHECK(c.graph.vertex_count() == 1);
    CHECK(c.graph.edge_count() == 0);
    CHECK(c.edge_map[0] == -1);
    CHECK(c.edge_map[1] == -1);
}

TEST_CASE("contracting one triangle edge leaves two parallel edges") {
    Graph g = complete_graph(3);
    Contraction c = contract(g, {0});
    CHECK(c.graph.vertex_count() == 2);
    CHECK(c.graph.edge_count() == 2);
    CHECK(c.vertex_map[0] == c.vertex_map[1]);
}

TEST_CASE("contracting opposite C4 edges leaves two parallel edges") {
    Graph g = cycle_graph(4);  // edges (0,1),(1,2),(2,3),(3,0)
    Contraction c = contract(g, {0, 2});
    CHECK(c.graph.vertex_count() == 2);
    CHECK(c.graph.edge_count() == 2);
    for (const Edge& e : c.graph.edges()) CHECK(e.u != e.v);
}

TEST_CASE("contract validates edge indices") {
    CHECK_THROWS_AS(contract(cycle_graph(4), {7}), std::invalid_argument);
}

TEST_CASE("scale by ones is the identity") {
    Graph g = random_connected_weighted(6, 12, 3, 1.0, 4.0);
    std::vector<double> ones(12, 1.0);
    Graph s = scale(g, ones);
    for (int i = 0; i < 12; ++i) CHECK(s.edge(i).weight == g.edge(i).weight);
}

TEST_CASE("scale applies pointwise factors") {
    Graph g = complete_graph(3);  // edges (0,1),(0,2),(1,2)
    std::vector<double> f = {2.0, 3.0, 4.0};
    Graph s = scale(g, f);
    CHECK(cut_value(s, {true, false, false}) == 2.0 + 3.0);
    CHECK_THROWS_AS(scale(g, std::vector<double>{1.0}), std::invalid_argument);
    CHECK_THROWS_AS(scale(g, std::vector<double>{1.0, -1.0, 1.0}), std::invalid_argument);
}

TEST_CASE("add is disjoint union and cuts are linear") {
    Graph g = cycle_graph(5);
    Graph h = complete_graph(5);
    Graph sum = add(g, h);
    CHECK(sum.edge_count() == g.edge_count() + h.edge_count());
    std::vector<bool> side = {true, true, false, false, false};
    CHECK(cut_value(sum, side) ==
          doctest::Approx(cut_value(g, side) + cut_value(h, side)));
    CHECK(add(g, Graph(5, {})).edge_count() == g.edge_count());
    CHECK_THROWS_AS(add(g, complete_graph(4)), std::invalid_argument);
}

TEST_CASE("contraction never increases the minimum cut") {
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = random_connected(8, 16, 700 + trial);
        double before = oracle_min_cut(g).value;
        Contraction c = contract(g, {trial % g.edge_count()});
        if (c.graph.vertex_count() < 2) continue;
        CHECK(oracle_min_cut(c.graph).value >= before - 1e-9);
    }
}

TEST_CASE("union-find merges and counts") {
    UnionFind uf(4);
    CHECK(uf.component_count() == 4);
    CHECK(uf.unite(0, 1));
    CHECK_FALSE(uf.unite(1, 0));
    CHECK(uf.component_count() == 3);
    CHECK(uf.find(0) == uf.find(1));
    CHECK(uf.find(2) != uf.find(3));
}

}  // TEST_SUITE
