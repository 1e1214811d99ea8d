#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "symcfg/canonical.hpp"
#include "symcfg/enumeration.hpp"

using namespace symcfg;

namespace {

const char* kFano = "013 026 045 124 156 235 346";
const char* kEight = "012 034 056 135 147 246 257 367";
const char* kCyclic13 = "013 02c 0ab 124 1bc 235 346 457 568 679 78a 89b 9ac";

Configuration apply_perm(const Configuration& c, const std::vector<int>& perm) {
    std::vector<Block> blocks;
    blocks.reserve(c.blocks.size());
    for (const Block& b : c.blocks)
        blocks.push_back(make_block(perm[b[0]], perm[b[1]], perm[b[2]]));
    return Configuration::from_blocks(c.v, std::move(blocks));
}

std::vector<int> random_perm(int v, std::mt19937& rng) {
    std::vector<int> p(v);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

// Exhaustive oracles over all v! point bijections; keep v <= 9.
bool perm_maps_onto(const Configuration& a, const Configuration& b,
                    const std::vector<int>& perm) {
    std::vector<Block> mapped;
    mapped.reserve(a.blocks.size());
    for (const Block& blk : a.blocks)
        mapped.push_back(make_block(perm[blk[0]], perm[blk[1]], perm[blk[2]]));
    std::sort(mapped.begin(), mapped.end());
    return mapped == b.blocks;
}

bool brute_isomorphic(const Configuration& a, const Configuration& b) {
    if (a.v != b.v) return false;
    std::vector<int> perm(a.v);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (perm_maps_onto(a, b, perm)) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

long long brute_automorphism_count(const Configuration& c) {
    std::vector<int> perm(c.v);
    std::iota(perm.begin(), perm.end(), 0);
    long long n = 0;
    do {
        if (perm_maps_onto(c, c, perm)) ++n;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return n;
}

} // namespace

TEST_CASE("canonicalize is idempotent and relabelling-invariant") {
    std::mt19937 rng(20240901);
    for (const char* text : {kFano, kEight, kCyclic13}) {
        Configuration c = parse_config(text);
        Configuration canon = canonicalize(c);
        CHECK(validate(canon.v, canon.blocks).ok);
        CHECK(canonicalize(canon) == canon);
        for (int trial = 0; trial < 20; ++trial) {
            Configuration shuffled = apply_perm(c, random_perm(c.v, rng));
            CHECK(canonicalize(shuffled) == canon);
        }
    }
}

TEST_CASE("canonicalize returns an isomorphic copy") {
    for (const char* text : {kFano, kEight}) {
        Configuration c = parse_config(text);
        CHECK(brute_isomorphic(c, canonicalize(c)));
    }
}

TEST_CASE("isomorphism test agrees with the exhaustive oracle at v=9") {
    auto classes = enumerate_configs(9);
    REQUIRE(classes.size() == 3);
    for (size_t i = 0; i < classes.size(); ++i)
        for (size_t j = i; j < classes.size(); ++j) {
            bool fast = are_isomorphic(classes[i], classes[j]);
            CHECK(fast == (i == j));
            CHECK(fast == brute_isomorphic(classes[i], classes[j]));
        }

    std::mt19937 rng(7);
    for (const Configuration& c : classes) {
        Configuration shuffled = apply_perm(c, random_perm(c.v, rng));
        CHECK(are_isomorphic(c, shuffled));
    }
    CHECK(!are_isomorphic(parse_config(kFano), parse_config(kEight)));
}

TEST_CASE("canonical forms separate the three 9-point classes") {
    auto classes = enumerate_configs(9);
    REQUIRE(classes.size() == 3);
    std::set<std::string> bytes, digests;
    for (const Configuration& c : classes) {
        CanonicalForm f = canonical_form(c);
        bytes.insert(f.bytes);
        digests.insert(f.digest());
        CHECK(parse_config(f.bytes) == canonicalize(c));
    }
    CHECK(bytes.size() == 3);
    CHECK(digests.size() == 3);
}

TEST_CASE("point automorphisms are exactly the block-preserving bijections") {
    for (const char* text : {kFano, kEight}) {
        Configuration c = parse_config(text);
        auto autos = all_point_automorphisms(c);
        std::set<std::vector<int>> distinct(autos.begin(), autos.end());
        CHECK(distinct.size() == autos.size());
        for (const auto& sigma : autos) CHECK(perm_maps_onto(c, c, sigma));
        CHECK((long long)autos.size() == brute_automorphism_count(c));
    }
}

TEST_CASE("automorphism group of the 7-point system has order 168") {
    Configuration c = parse_config(kFano);
    AutomorphismGroup g = automorphism_group(c);
    CHECK(g.order == 168);
    CHECK(detail::subgroup_order(7, g.generators) == 168);
}

TEST_CASE("automorphism group generators generate the whole group") {
    for (const char* text : {kEight, kCyclic13}) {
        Configuration c = parse_config(text);
        AutomorphismGroup g = automorphism_group(c);
        CHECK(detail::subgroup_order(c.v, g.generators) == g.order);
    }
}

TEST_CASE("subgroup_order on known permutation groups") {
    CHECK(detail::subgroup_order(3, {}) == 1);
    CHECK(detail::subgroup_order(3, {{1, 0, 2}}) == 2);
    CHECK(detail::subgroup_order(3, {{1, 0, 2}, {1, 2, 0}}) == 6);
    CHECK(detail::subgroup_order(4, {{1, 2, 3, 0}}) == 4);
}

TEST_CASE("symmetry profile of the 7-point system") {
    SymmetryProfile sp = symmetry_profile(parse_config(kFano));
    CHECK(sp.aut_order == 168);
    CHECK(sp.full_order == 336);
    CHECK(sp.self_dual);
    CHECK(sp.self_polar);
    CHECK(sp.point_transitive);
    CHECK(sp.flag_transitive);
    CHECK(sp.weakly_flag_transitive);
    CHECK(sp.cyclic);
}

TEST_CASE("symmetry profile is consistent with the brute-force count at v=9") {
    auto classes = enumerate_configs(9);
    REQUIRE(classes.size() == 3);
    Configuration c = classes.front();
    SymmetryProfile sp = symmetry_profile(c);
    CHECK(sp.aut_order == brute_automorphism_count(c));
    CHECK(sp.full_order >= sp.aut_order);
    CHECK(sp.self_dual == (sp.full_order > sp.aut_order));
    CHECK(sp.aut_order == automorphism_group(c).order);
}

TEST_CASE("graph certificates ignore vertex labels") {
    Graph heawood = levi_graph(parse_config(kFano));
    std::mt19937 rng(99);
    std::vector<int> perm = random_perm(heawood.n, rng);
    std::vector<std::pair<int, int>> edges;
    for (auto [u, w] : heawood.edges()) edges.emplace_back(perm[u], perm[w]);
    Graph relabelled = Graph::from_edges(heawood.n, edges);
    CHECK(graphs_isomorphic(heawood, relabelled));
    CHECK(graph_certificate(heawood) == graph_certificate(relabelled));
}

TEST_CASE("graph certificates separate non-isomorphic cubic graphs") {
    // cube graph vs. the Moebius ladder on 8 vertices: both cubic, the
    // former bipartite, the latter not
    std::vector<std::pair<int, int>> cube, ladder;
    for (int i = 0; i < 8; ++i) ladder.emplace_back(i, (i + 1) % 8);
    for (int i = 0; i < 4; ++i) ladder.emplace_back(i, i + 4);
    cube = {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4},
            {0, 4}, {1, 5}, {2, 6}, {3, 7}};
    Graph qa = Graph::from_edges(8, cube);
    Graph qb = Graph::from_edges(8, ladder);
    CHECK(!graphs_isomorphic(qa, qb));
    CHECK(graphs_isomorphic(qa, qa));

    // degree sequences differ
    CHECK(!graphs_isomorphic(qa, levi_graph(parse_config(kEight))));
}

TEST_CASE("levi graphs of a configuration and its dual are isomorphic") {
    for (const char* text : {kFano, kEight, kCyclic13}) {
        Configuration c = parse_config(text);
        CHECK(graphs_isomorphic(levi_graph(c), levi_graph(dual(c))));
    }
}
