#include <doctest.h>

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "symcfg/core.hpp"
#include "symcfg/graph.hpp"

using namespace symcfg;

namespace {

const char* kFano = "013 026 045 124 156 235 346";

// stitched triple of Fano planes; 2-connected
const char* kTwentyOne =
    "026 045 0fh 124 137 156 235 346 79d 7bc 89b 8ae 8cd 9ac abd "
    "egk eij fgi fjk ghj hik";

Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, e);
}

Graph petersen() {
    return Graph::from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                  {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},
                                  {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

bool valid_ham_cycle(const Graph& g, const std::vector<int>& cyc) {
    if ((int)cyc.size() != g.n) return false;
    std::set<int> seen(cyc.begin(), cyc.end());
    if ((int)seen.size() != g.n) return false;
    for (int i = 0; i < g.n; ++i)
        if (!g.has_edge(cyc[i], cyc[(i + 1) % g.n])) return false;
    return true;
}

} // namespace

TEST_CASE("levi graph of the 7-point system is the Heawood graph") {
    Configuration c = parse_config(kFano);
    Graph g = levi_graph(c);
    CHECK(g.n == 14);
    for (int u = 0; u < g.n; ++u) CHECK(g.adj[u].size() == 3);
    REQUIRE(g.side.size() == 14);
    for (int u = 0; u < g.n; ++u) {
        CHECK(g.side[u] == (u < 7 ? 0 : 1));
        for (int w : g.adj[u]) CHECK(g.side[u] != g.side[w]);
    }
    CHECK(girth(g) == 6);
    CHECK(graph_connected(g));
}

TEST_CASE("associated graph of the 7-point system is complete") {
    Configuration c = parse_config(kFano);
    Graph g = associated_graph(c);
    CHECK(g.n == 7);
    for (int u = 0; u < 7; ++u)
        for (int w = 0; w < 7; ++w)
            CHECK(g.has_edge(u, w) == (u != w));
}

TEST_CASE("associated graph is 6-regular for larger systems") {
    Configuration c = parse_config(kTwentyOne);
    Graph g = associated_graph(c);
    CHECK(g.n == 21);
    for (int u = 0; u < g.n; ++u) CHECK(g.adj[u].size() == 6);
}

TEST_CASE("config_from_levi inverts levi_graph") {
    for (const char* text : {kFano, "012 034 056 135 147 246 257 367", kTwentyOne}) {
        Configuration c = parse_config(text);
        CHECK(config_from_levi(levi_graph(c)) == c);
    }
}

TEST_CASE("config_from_levi rejects unusable graphs") {
    Graph no_sides = cycle_graph(6);
    CHECK_THROWS_AS(config_from_levi(no_sides), std::invalid_argument);

    Graph bad = cycle_graph(6);  // 2-regular, so block vertices have degree 2
    bad.side = {0, 1, 0, 1, 0, 1};
    CHECK_THROWS_AS(config_from_levi(bad), std::invalid_argument);
}

TEST_CASE("girth on reference graphs") {
    CHECK(girth(cycle_graph(6)) == 6);
    CHECK(girth(cycle_graph(9)) == 9);
    CHECK(girth(complete_graph(4)) == 3);
    CHECK(girth(petersen()) == 5);

    Graph k33 = Graph::from_edges(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4},
                                      {1, 5}, {2, 3}, {2, 4}, {2, 5}});
    CHECK(girth(k33) == 4);

    Graph path = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(girth(path) == kInfinity);
}

TEST_CASE("induced subgraph keeps edges and sides") {
    Configuration c = parse_config(kFano);
    Graph g = levi_graph(c);
    std::vector<int> keep = {0, 1, 2, 7, 8, 9, 10};
    Graph h = induced_subgraph(g, keep);
    CHECK(h.n == 7);
    REQUIRE(h.side.size() == 7);
    for (int i = 0; i < h.n; ++i) CHECK(h.side[i] == g.side[keep[i]]);
    for (int i = 0; i < h.n; ++i)
        for (int j = 0; j < h.n; ++j)
            CHECK(h.has_edge(i, j) == g.has_edge(keep[i], keep[j]));
}

TEST_CASE("connectivity of configurations") {
    CHECK(config_connectivity(parse_config(kFano)).connectivity == 3);

    ConnectivityResult r = config_connectivity(parse_config(kTwentyOne));
    CHECK(r.connectivity == 2);
    REQUIRE(r.cut.has_value());
    Graph g = levi_graph(parse_config(kTwentyOne));
    std::vector<char> removed(g.n, 0);
    removed[r.cut->first] = 1;
    removed[r.cut->second] = 1;
    CHECK(!graph_connected(g, removed));

    Configuration fano = parse_config(kFano);
    CHECK_THROWS_AS(config_connectivity(disjoint_union(fano, fano)), NotConnected);
}

TEST_CASE("hamiltonicity of reference graphs") {
    auto hw = is_hamiltonian(levi_graph(parse_config(kFano)));
    CHECK(hw.hamiltonian);
    CHECK(valid_ham_cycle(levi_graph(parse_config(kFano)), hw.cycle));

    auto c6 = is_hamiltonian(cycle_graph(6));
    CHECK(c6.hamiltonian);
    CHECK(valid_ham_cycle(cycle_graph(6), c6.cycle));

    CHECK(is_hamiltonian(complete_graph(4)).hamiltonian);
    CHECK(!is_hamiltonian(petersen()).hamiltonian);

    Graph path = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(!is_hamiltonian(path).hamiltonian);

    Graph two_triangles = Graph::from_edges(
        6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK(!is_hamiltonian(two_triangles).hamiltonian);

    CHECK_THROWS_AS(is_hamiltonian(cycle_graph(65)), BoundExceeded);
    CHECK(is_hamiltonian(cycle_graph(65), 65).hamiltonian);
}

TEST_CASE("hamiltonian paths with fixed endpoints") {
    Graph c6 = cycle_graph(6);
    CHECK(hamiltonian_path_between(c6, 0, 1));
    CHECK(!hamiltonian_path_between(c6, 0, 2));
    CHECK(!hamiltonian_path_between(c6, 0, 3));
    CHECK_THROWS_AS(hamiltonian_path_between(c6, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(hamiltonian_path_between(c6, 0, 6), std::invalid_argument);

    // agreement with the naive backtracker on every vertex pair
    for (const Graph& g : {c6, petersen(), levi_graph(parse_config(kFano))})
        for (int u = 0; u < g.n; ++u)
            for (int w = u + 1; w < g.n; ++w)
                CHECK(hamiltonian_path_between(g, u, w) ==
                      hamiltonian_path_direct(g, u, w));
}

TEST_CASE("edge three-colouring splits a cubic bipartite graph into matchings") {
    Graph g = levi_graph(parse_config(kFano));
    auto classes = edge_three_colouring(g);
    std::set<std::pair<int, int>> all;
    for (const auto& cls : classes) {
        CHECK(cls.size() == 7);
        std::set<int> touched;
        for (auto [u, w] : cls) {
            CHECK(g.has_edge(u, w));
            CHECK(touched.insert(u).second);
            CHECK(touched.insert(w).second);
            all.insert(std::minmax(u, w));
        }
    }
    CHECK(all.size() == 21);

    CHECK_THROWS_AS(edge_three_colouring(cycle_graph(6)), std::invalid_argument);
    Graph labelled_c6 = cycle_graph(6);
    labelled_c6.side = {0, 1, 0, 1, 0, 1};
    CHECK_THROWS_AS(edge_three_colouring(labelled_c6), std::invalid_argument);
}

TEST_CASE("3K2 decomposition partitions the Heawood edge set") {
    Graph g = levi_graph(parse_config(kFano));
    auto triples = three_k2_decomposition(g);
    CHECK(triples.size() == 7);
    std::set<std::pair<int, int>> all;
    for (const EdgeTriple& t : triples) {
        std::set<int> touched;
        for (auto [u, w] : t) {
            CHECK(g.has_edge(u, w));
            CHECK(touched.insert(u).second);
            CHECK(touched.insert(w).second);
            CHECK(all.insert(std::minmax(u, w)).second);
        }
    }
    CHECK(all.size() == 21);
}

TEST_CASE("3K2 decomposition works on every small levi graph") {
    for (const char* text : {"012 034 056 135 147 246 257 367",
                             "012 034 056 135 147 248 267 368 578", kTwentyOne}) {
        Configuration c = parse_config(text);
        auto triples = three_k2_decomposition(levi_graph(c));
        CHECK((int)triples.size() == c.v);
    }
}
