#include <doctest.h>

#include <random>

#include "c5/densities.hpp"
#include "c5/enumerate.hpp"
#include "c5/flags.hpp"
#include "c5/graph6.hpp"
#include "oracles.hpp"

using namespace c5;

TEST_CASE("exact density constants of the extremal graphon") {
    Graphon b{pentagon(), {}};
    CHECK(graphon_density(b, pentagon()) == make_rational(24, 625));
    CHECK(graphon_density(b, pentagon_plus()) == make_rational(72, 625));
    CHECK(graphon_density(b, pentagon()) == parse_rational("0.0384"));
    CHECK(graphon_density(b, pentagon_plus()) == parse_rational("0.1152"));
    // single-part graphon has no edges to see
    Graphon point{make_graph(1, {}), {}};
    CHECK(graphon_density(point, make_graph(2, {{0, 1}})) == 0);
}

TEST_CASE("density agrees with the direct all-maps oracle") {
    std::mt19937 rng(9001);
    for (int trial = 0; trial < 12; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        int h = 2 + static_cast<int>(rng() % 4);
        Graph src = oracle::random_triangle_free(n, rng);
        Graph pat = oracle::random_triangle_free(h, rng);
        CHECK(graphon_density({src, {}}, pat) == oracle::direct_density(src, pat));
    }
}

TEST_CASE("densities over one order sum to 1") {
    std::mt19937 rng(9002);
    for (int k = 2; k <= 4; ++k) {
        std::vector<Graph> classes = oracle::all_classes(k);
        for (int trial = 0; trial < 3; ++trial) {
            Graph src = oracle::random_triangle_free(3 + static_cast<int>(rng() % 6), rng);
            Rational total = 0;
            for (const Graph& h : classes) total += graphon_density({src, {}}, h);
            CHECK(total == 1);
        }
    }
}

TEST_CASE("flag densities at a rooted pentagon graphon") {
    Type vertex{make_graph(1, {})};
    std::vector<Flag> flags = enumerate_flags(vertex, 2);
    REQUIRE(flags.size() == 2);
    Graphon rooted{pentagon(), {0}};
    Rational total = 0;
    for (const Flag& f : flags) {
        Rational d = flag_density(rooted, f);
        bool adjacent = f.graph.edge_count() == 1;
        CHECK(d == (adjacent ? make_rational(2, 5) : make_rational(3, 5)));
        total += d;
    }
    CHECK(total == 1);
}

TEST_CASE("rooted cherry-complement density matches an exhaustive count") {
    // root plus two mutually non-adjacent non-neighbors of the root:
    // count all 25 maps of the two free points into the parts of C5
    Graph g = make_graph(3, {});
    Flag f{g, {0}};
    Graphon rooted{pentagon(), {0}};
    long hits = 0;
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b) {
            bool root_a = pentagon().has_edge(0, a), root_b = pentagon().has_edge(0, b);
            bool ab = pentagon().has_edge(a, b);
            if (!root_a && !root_b && !ab) ++hits;
        }
    CHECK(flag_density(rooted, f) == make_rational(hits, 25));
    CHECK(flag_density(rooted, f) == flag_density_at(pentagon(), {0}, f));
}

TEST_CASE("flag density guards") {
    Type vertex{make_graph(1, {})};
    Flag f = enumerate_flags(vertex, 2)[0];
    CHECK_THROWS(flag_density({pentagon(), {0, 0}}, f));   // repeated root
    CHECK_THROWS(flag_density({pentagon(), {0, 1}}, f));   // root arity mismatch
    Type edge{make_graph(2, {{0, 1}})};
    Flag ef = enumerate_flags(edge, 3)[0];
    CHECK_THROWS(flag_density({pentagon(), {0, 2}}, ef));  // roots do not induce the type
}

TEST_CASE("closed form for the balanced blow-up density") {
    CHECK(balanced_blowup_c5_density(10) == make_rational(24, 625));
    CHECK(balanced_blowup_c5_density(5) == make_rational(24, 625));
    CHECK(balanced_blowup_c5_density(11) == Rational(5760, 161051));
    for (int n = 5; n <= 16; ++n)
        CHECK(balanced_blowup_c5_density(n) ==
              graphon_density({balanced_blowup_c5(n), {}}, pentagon()));
    CHECK_THROWS(balanced_blowup_c5_density(4));
}

TEST_CASE("density in growing balanced blow-ups of the source stays exact") {
    // the graphon of blowup(source, m..m) equals the graphon of source
    std::mt19937 rng(9003);
    for (int trial = 0; trial < 6; ++trial) {
        Graph src = oracle::random_triangle_free(3 + static_cast<int>(rng() % 3), rng);
        Graph pat = oracle::random_triangle_free(3, rng);
        Rational base = graphon_density({src, {}}, pat);
        for (int m = 2; m * src.n <= 16; ++m) {
            BlowupSpec spec{src, std::vector<int>(src.n, m)};
            CHECK(graphon_density({blowup(spec), {}}, pat) == base);
        }
    }
}

TEST_CASE("small-n ratio check: full range with positive exact margins") {
    for (int n = 10; n < 100; ++n) {
        SmallNCheck c = small_n_ratio_check(n);
        CHECK(c.holds);
        CHECK(c.margin > 0);
    }
}

TEST_CASE("small-n ratio check at n=10 is razor thin below 1") {
    // d_10 = 0.0384 makes the numerator come within 7.6e-8 of 3*d_10; this
    // rules out any floating-point shortcut in the evaluation
    SmallNCheck c = small_n_ratio_check(10);
    CHECK(c.lhs < 1);
    Rational one_minus = 1 - c.lhs;
    CHECK(one_minus > 0);
    CHECK(one_minus < Rational(1, 1000000));
    CHECK(c.margin == c.lhs - Rational(9, 10));
}

TEST_CASE("small-n ratio check guards") {
    CHECK_THROWS(small_n_ratio_check(9));
    CHECK_THROWS(small_n_ratio_check(100));
    // a line anchored above d_n must be refused, not evaluated
    BoundLine high{parse_rational("0.039"), make_rational(1), make_rational(0)};
    CHECK_THROWS(small_n_ratio_check(11, high));
}

TEST_CASE("asymptotic residue-class polynomial test") {
    for (int i = 0; i < 5; ++i) CHECK(asymptotic_check(i, 20));
    CHECK_THROWS(asymptotic_check(5, 20));
    CHECK_THROWS(asymptotic_check(0, 19));
}

TEST_CASE("direct asymptotic inequality on a sample range") {
    for (int n = 100; n <= 1500; ++n) CHECK(asymptotic_direct(n));
}

TEST_CASE("final chain check") {
    FinalChainCheck at100 = final_chain_check(100);
    CHECK(at100.holds);
    CHECK(at100.last_margin == 0);  // 1 - 100/n^2 == 1 - 1/n exactly here
    FinalChainCheck at101 = final_chain_check(101);
    CHECK(at101.holds);
    CHECK(at101.last_margin > 0);
    FinalChainCheck big = final_chain_check(1000000);
    CHECK(big.holds);
    CHECK_THROWS(final_chain_check(99));
}
