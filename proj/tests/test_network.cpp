#include "doctest.h"

#include "snprkit/enewick.hpp"
#include "snprkit/generate.hpp"
#include "snprkit/network.hpp"
#include "test_support.hpp"

using namespace snprkit;

TEST_CASE("cherry parses and round-trips") {
    Network n = parse_enewick("((1,2));");
    CHECK(n.leaf_count() == 2);
    CHECK(n.reticulation_count() == 0);
    CHECK(n.edge_count() == 3);
    CHECK(write_enewick(n) == "((1,2));");
    CHECK(write_enewick(parse_enewick("((2,1));")) == "((1,2));");
}

TEST_CASE("hybrid tags merge into one reticulation") {
    Network n = parse_enewick("((((1)#H1,2),(#H1,3)));");
    CHECK(n.vertex_count() == 8);  // root, three inner, one reticulation, three leaves
    CHECK(n.leaf_count() == 3);
    CHECK(n.reticulation_count() == 1);
    int leaf1 = n.leaf_with_label(1);
    REQUIRE(leaf1 >= 0);
    CHECK(n.kind(n.parents(leaf1)[0]) == VertexKind::reticulation);
}

TEST_CASE("parallel pair is expressible and breaks tree-child") {
    Network n = parse_enewick("(((1)#H1,#H1));");
    CHECK(n.reticulation_count() == 1);
    CHECK(n.leaf_count() == 1);
    CHECK(has_parallel_edges(n));
    CHECK_FALSE(is_tree_child(n));
    CHECK(is_reticulation_visible(n));  // the single leaf sits below the reticulation
    CHECK(is_tree_based(n));
    Network back = parse_enewick(write_enewick(n));
    CHECK(is_isomorphic(n, back));
}

TEST_CASE("syntax errors carry positions") {
    CHECK_THROWS_AS(parse_enewick("((1,2)"), parse_error);
    CHECK_THROWS_AS(parse_enewick("((1,2))"), parse_error);
    CHECK_THROWS_AS(parse_enewick("((1,x));"), parse_error);
}

TEST_CASE("validate reports degree, cycle and duplicate-label violations") {
    CHECK(validate(parse_enewick_draft("((1,2));")).empty());

    // in-degree 2, out-degree 2 vertex
    GraphDraft d;
    int rho = d.add_vertex();
    int a = d.add_vertex();
    int b = d.add_vertex();
    int bad = d.add_vertex();
    int l1 = d.add_vertex(1), l2 = d.add_vertex(2);
    d.add_edge(rho, a);
    d.add_edge(a, b);
    d.add_edge(a, bad);
    d.add_edge(b, bad);
    d.add_edge(bad, l1);
    d.add_edge(bad, l2);
    auto v = validate(d);
    bool degree = false;
    for (const auto& x : v) degree |= x.rule == "degree";
    CHECK(degree);

    // two-vertex directed cycle
    GraphDraft c;
    int r2 = c.add_vertex();
    int p = c.add_vertex();
    int q = c.add_vertex();
    int l = c.add_vertex(1);
    c.add_edge(r2, p);
    c.add_edge(p, q);
    c.add_edge(q, p);
    c.add_edge(q, l);
    bool acyclic = false;
    for (const auto& x : validate(c)) acyclic |= x.rule == "acyclic";
    CHECK(acyclic);

    bool dup = false;
    for (const auto& x : validate(parse_enewick_draft("((1,1));"))) dup |= x.rule == "duplicate-label";
    CHECK(dup);

    CHECK_THROWS_AS(parse_enewick("((1,1));"), invalid_network_error);
}

TEST_CASE("isomorphism is label-aware and agrees with canonical form") {
    Network a = parse_enewick("(((1,2),3));");
    Network b = parse_enewick("((3,(2,1)));");
    CHECK(is_isomorphic(a, b));
    Network c = parse_enewick("(((1,3),2));");
    CHECK_FALSE(is_isomorphic(a, c));
    CHECK_THROWS_AS(is_isomorphic(a, parse_enewick("(((1,2),4));")), std::invalid_argument);

    std::mt19937_64 rng(7);
    for (int it = 0; it < 60; ++it) {
        Network n = random_network(rng, 2 + static_cast<int>(rng() % 5),
                                   static_cast<int>(rng() % 3));
        Network shuf = testing::shuffled_copy(n, rng);
        CHECK(is_isomorphic(n, shuf));
        CHECK(n.canonical_form() == shuf.canonical_form());
    }
    // canonical equality iff isomorphic, on a small pool of comparable networks
    std::vector<Network> pool;
    for (int it = 0; it < 12; ++it) pool.push_back(random_network(rng, 4, 1));
    for (const auto& x : pool)
        for (const auto& y : pool)
            CHECK(is_isomorphic(x, y) == (x.canonical_form() == y.canonical_form()));
}

TEST_CASE("edge count is 2n + 3r - 1 and classes are nested") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 80; ++it) {
        int n = 2 + static_cast<int>(rng() % 5);
        int r = static_cast<int>(rng() % 4);
        Network net = random_network(rng, n, r);
        CHECK(net.edge_count() == 2 * n + 3 * r - 1);
        if (is_tree_child(net)) CHECK(is_reticulation_visible(net));
        if (is_reticulation_visible(net)) CHECK(is_tree_based(net));
        Network back = parse_enewick(write_enewick(net));
        CHECK(back.canonical_form() == net.canonical_form());
    }
}

TEST_CASE("trees are tree-child, reticulation-visible and tree-based") {
    for (const auto& t : all_trees(4)) {
        CHECK(is_tree_child(t));
        CHECK(is_reticulation_visible(t));
        CHECK(is_tree_based(t));
    }
    CHECK(all_trees(2).size() == 1);
    CHECK(all_trees(3).size() == 3);
    CHECK(all_trees(4).size() == 15);
    CHECK(all_trees(5).size() == 105);
}
