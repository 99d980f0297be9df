#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "c5/canon.hpp"
#include "c5/graph.hpp"
#include "oracles.hpp"

using namespace c5;

namespace {

Perm random_perm(int n, std::mt19937& rng) {
    Perm p = identity_perm(n);
    for (int i = n - 1; i > 0; --i) std::swap(p[i], p[rng() % (i + 1)]);
    return p;
}

}  // namespace

TEST_CASE("canonical form is relabeling invariant") {
    std::mt19937 rng(8001);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 1 + static_cast<int>(rng() % 9);
        Graph g = oracle::random_triangle_free(n, rng);
        CanonicalLabel base = canonical_form(g);
        for (int rep = 0; rep < 100; ++rep) {
            Graph h = relabel(g, random_perm(n, rng));
            CHECK(canonical_form(h).bytes == base.bytes);
        }
    }
}

TEST_CASE("equal bytes exactly for isomorphic graphs (all graphs on 4 vertices)") {
    // 64 labeled graphs, classes checked against raw permutation search
    std::vector<Graph> graphs;
    for (uint32_t mask = 0; mask < 64; ++mask) graphs.push_back(oracle::from_mask(4, mask));
    for (size_t a = 0; a < graphs.size(); ++a)
        for (size_t b = a + 1; b < graphs.size(); ++b) {
            bool same_bytes =
                canonical_form(graphs[a]).bytes == canonical_form(graphs[b]).bytes;
            CHECK(same_bytes == oracle::isomorphic(graphs[a], graphs[b]));
        }
}

TEST_CASE("automorphism counts") {
    CHECK(canonical_form(pentagon()).aut_count == 10);
    CHECK(canonical_form(pentagon_plus()).aut_count == oracle::aut_count(pentagon_plus()));
    CHECK(canonical_form(pentagon_plus()).aut_count == 4);
    CHECK(canonical_form(mobius_ladder_8()).aut_count == oracle::aut_count(mobius_ladder_8()));
    CHECK(canonical_form(mobius_ladder_8()).aut_count == 16);
    Graph empty10;
    empty10.n = 10;
    CHECK(canonical_form(empty10).aut_count == 3628800);
    CHECK(canonical_form(oracle::petersen()).aut_count == 120);
}

TEST_CASE("automorphism counts match brute force on random small graphs") {
    std::mt19937 rng(8002);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        Graph g = oracle::from_mask(n, rng() % (1u << (n * (n - 1) / 2)));
        CHECK(canonical_form(g).aut_count == static_cast<uint64_t>(oracle::aut_count(g)));
    }
}

TEST_CASE("aut_count divides n!") {
    std::mt19937 rng(8003);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 1 + static_cast<int>(rng() % 8);
        Graph g = oracle::random_triangle_free(n, rng);
        uint64_t fact = 1;
        for (int i = 2; i <= n; ++i) fact *= i;
        CHECK(fact % canonical_form(g).aut_count == 0);
    }
}

TEST_CASE("canonical_full exposes a consistent labeling and orbits") {
    Graph g = pentagon_plus();
    CanonResult res = canonical_full(g);
    CHECK(relabel(g, res.labeling) == res.canonical);
    // the duplicated pair {0,1} of the blow-up is one orbit
    CHECK(res.orbit[0] == res.orbit[1]);
    // generators actually are automorphisms
    for (const Perm& p : res.generators) CHECK(relabel(g, p) == g);
}

TEST_CASE("flag canonical form respects roots") {
    // path a-b-c rooted at an end vs rooted at the center
    Graph path = make_graph(3, {{0, 1}, {1, 2}});
    CHECK(canonical_flag(path, {0}) == canonical_flag(path, {2}));
    CHECK(canonical_flag(path, {0}) != canonical_flag(path, {1}));
    // root order matters
    CHECK(canonical_flag(path, {0, 1}) != canonical_flag(path, {1, 0}));

    std::mt19937 rng(8004);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 3 + static_cast<int>(rng() % 4);
        Graph g = oracle::random_triangle_free(n, rng);
        Graph h = oracle::random_triangle_free(n, rng);
        int k = 1 + static_cast<int>(rng() % 2);
        std::vector<int> gr, hr;
        for (int v = 0; v < n && static_cast<int>(gr.size()) < k; ++v) gr.push_back(v);
        for (int v = n - 1; v >= 0 && static_cast<int>(hr.size()) < k; --v) hr.push_back(v);
        bool same = canonical_flag(g, gr) == canonical_flag(h, hr);
        CHECK(same == oracle::flag_isomorphic(g, gr, h, hr));
    }
}

TEST_CASE("group order from generators") {
    // full symmetric group from a transposition and a cycle
    Perm t = identity_perm(6);
    std::swap(t[0], t[1]);
    Perm c{};
    for (int i = 0; i < 6; ++i) c[i] = static_cast<uint8_t>((i + 1) % 6);
    CHECK(group_order({t, c}, 6) == 720);
    CHECK(group_order({}, 5) == 1);
    CHECK(group_order({t}, 6) == 2);
}

TEST_CASE("mask orbits under the automorphism group") {
    CanonResult res = canonical_full(pentagon());
    std::vector<uint16_t> singles;
    for (int v = 0; v < 5; ++v) singles.push_back(static_cast<uint16_t>(1u << v));
    std::vector<uint16_t> reps = mask_orbit_reps(singles, res.generators, 5);
    for (uint16_t r : reps) CHECK(r == reps[0]);  // vertex-transitive
}
