#include <doctest.h>

#include <random>

#include "c5/canon.hpp"
#include "c5/graph.hpp"
#include "c5/graph6.hpp"
#include "oracles.hpp"

using namespace c5;

TEST_CASE("make_graph basics and guards") {
    Graph g = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CHECK(g == pentagon());
    CHECK(g.edge_count() == 5);
    CHECK(make_graph(0, {}).n == 0);
    CHECK(make_graph(3, {{0, 1}, {1, 2}, {0, 2}}).edge_count() == 3);
    CHECK_THROWS(make_graph(3, {{0, 3}}));
    CHECK_THROWS(make_graph(3, {{1, 1}}));
    CHECK_THROWS(make_graph(17, {}));
    CHECK_THROWS(make_graph(3, {{0, 1}, {1, 0}}));
}

TEST_CASE("triangle detection") {
    CHECK(is_triangle_free(pentagon()));
    CHECK_FALSE(is_triangle_free(make_graph(3, {{0, 1}, {1, 2}, {0, 2}})));
    // ML8 via the brute-force triple loop
    Graph ml8 = mobius_ladder_8();
    bool any_triangle = false;
    for (int a = 0; a < 8; ++a)
        for (int b = a + 1; b < 8; ++b)
            for (int c = b + 1; c < 8; ++c)
                if (ml8.has_edge(a, b) && ml8.has_edge(b, c) && ml8.has_edge(a, c))
                    any_triangle = true;
    CHECK_FALSE(any_triangle);
    CHECK(is_triangle_free(ml8));
}

TEST_CASE("pentagon counting") {
    CHECK(count_c5(pentagon()) == 1);
    CHECK(count_c5(balanced_blowup_c5(10)) == 32);
    CHECK(count_c5(mobius_ladder_8()) == 8);
    CHECK(count_c5(mobius_ladder_8()) == count_c5(balanced_blowup_c5(8)));
    CHECK(count_c5(oracle::petersen()) == 12);
    // K5 hosts 4!/2 distinct pentagons on one vertex set
    Graph k5 = make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4},
                              {2, 3}, {2, 4}, {3, 4}});
    CHECK(count_c5(k5) == 12);
}

TEST_CASE("pentagon count equals tr(A^5)/10 on triangle-free graphs") {
    std::mt19937 rng(7001);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = oracle::random_triangle_free(5 + static_cast<int>(rng() % 6), rng);
        CHECK(10 * count_c5(g) == oracle::trace_a5(g));
    }
}

TEST_CASE("induced subgraph counting") {
    CHECK(count_induced(pentagon(), make_graph(2, {{0, 1}})) == 5);
    // exhaustive 6-subset count in the balanced blow-up on 10 vertices:
    // the two points of one part plus one point of each other part
    CHECK(count_induced(balanced_blowup_c5(10), pentagon_plus()) == 80);
    Graph k3 = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    std::mt19937 rng(7002);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = oracle::random_triangle_free(7, rng);
        CHECK(count_induced(g, k3) == 0);
    }
    CHECK(count_induced(make_graph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}), k3) == 1);
}

TEST_CASE("sum of induced counts over all k-classes is C(n,k)") {
    std::mt19937 rng(7003);
    for (int k = 2; k <= 5; ++k) {
        std::vector<Graph> classes = oracle::all_classes(k);
        for (int trial = 0; trial < 4; ++trial) {
            int n = k + 1 + static_cast<int>(rng() % (9 - k));
            Graph g = oracle::random_triangle_free(n, rng);
            long total = 0;
            for (const Graph& h : classes) total += count_induced(g, h);
            CHECK(total == binomial(n, k).get_si());
        }
    }
}

TEST_CASE("blow-up structure") {
    CHECK(blowup({pentagon(), {1, 1, 1, 1, 1}}) == pentagon());
    CHECK(count_c5(blowup({pentagon(), {2, 2, 2, 1, 1}})) == 8);
    CHECK(canonical_form(blowup({pentagon(), {2, 1, 1, 1, 1}})).bytes ==
          canonical_form(pentagon_plus()).bytes);
    CHECK_THROWS(blowup({pentagon(), {4, 4, 4, 4, 4}}));
    CHECK_THROWS(blowup({pentagon(), {1, 1}}));

    // parts are independent, joined parts complete bipartite
    Graph g = blowup({pentagon(), {3, 2, 1, 2, 3}});
    CHECK(is_triangle_free(g));
    CHECK(g.n == 11);
    CHECK(g.edge_count() == 3 * 2 + 2 * 1 + 1 * 2 + 2 * 3 + 3 * 3);
}

TEST_CASE("pentagon count of a C5 blow-up is the product of part sizes") {
    // exhaustive over all size vectors with small total, sampled above
    std::vector<int> sizes(5);
    std::function<void(int, int)> rec = [&](int pos, int remaining) {
        if (pos == 5) {
            long prod = 1;
            for (int s : sizes) prod *= s;
            CHECK(count_c5(blowup({pentagon(), sizes})) == prod);
            return;
        }
        for (int s = 0; s <= remaining; ++s) {
            sizes[pos] = s;
            rec(pos + 1, remaining - s);
        }
    };
    rec(0, 9);
    std::mt19937 rng(7004);
    for (int trial = 0; trial < 100; ++trial) {
        int left = 16;
        for (int i = 0; i < 5; ++i) {
            sizes[i] = static_cast<int>(rng() % (left + 1));
            left -= sizes[i];
        }
        long prod = 1;
        for (int s : sizes) prod *= s;
        CHECK(count_c5(blowup({pentagon(), sizes})) == prod);
    }
}

TEST_CASE("balanced blow-up formula") {
    for (int n = 0; n <= 16; ++n) {
        Graph g = balanced_blowup_c5(n);
        CHECK(g.n == n);
        long want = 1;
        for (int i = 0; i < 5; ++i) want *= (n + i) / 5;
        CHECK(count_c5(g) == want);
    }
    CHECK(count_c5(balanced_blowup_c5(8)) == 8);
    CHECK(count_c5(balanced_blowup_c5(9)) == 16);
    CHECK(balanced_blowup_c5(5) == pentagon());
}

TEST_CASE("mobius ladder") {
    Graph ml8 = mobius_ladder_8();
    for (int v = 0; v < 8; ++v) CHECK(ml8.degree(v) == 3);
    CHECK(count_c5(ml8) == 8);
    CHECK(is_triangle_free(ml8));
}

TEST_CASE("graph6 round trip and interchange") {
    std::mt19937 rng(7005);
    for (int trial = 0; trial < 50; ++trial) {
        int n = static_cast<int>(rng() % 12);
        Graph g = oracle::random_triangle_free(std::max(n, 1), rng);
        CHECK(graph6_decode(graph6_encode(g)) == g);
    }
    // fixed encodings computed by hand from the format definition
    CHECK(graph6_encode(make_graph(0, {})) == "?");
    CHECK(graph6_encode(make_graph(1, {})) == "@");
    CHECK(graph6_encode(make_graph(2, {{0, 1}})) == "A_");
    CHECK(graph6_encode(pentagon()) == "Dhc");
    CHECK(graph6_decode("A_").edge_count() == 1);
    CHECK_THROWS(graph6_decode(""));
    CHECK_THROWS(graph6_decode("A"));    // missing data bytes
    CHECK_THROWS(graph6_decode("A`"));   // nonzero padding
    CHECK_THROWS(graph6_decode("q???")); // order 50 beyond the supported cap
}

TEST_CASE("every 5-cycle in a triangle-free graph is induced") {
    std::mt19937 rng(7006);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = oracle::random_triangle_free(6 + static_cast<int>(rng() % 4), rng);
        CHECK(count_c5(g) == count_induced(g, pentagon()));
    }
}
