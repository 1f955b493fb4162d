#include <doctest.h>

#include <random>

#include "ising/gadgets.hpp"

using namespace ising;

TEST_CASE("ladder gadget") {
    const GadgetGraph l0 = build_L(0);
    CHECK(l0.graph.vertex_count() == 3);
    CHECK(l0.graph.edge_count() == 2);
    // The h = 0 ladder is the path tr1 - hd - tr2.
    CHECK(l0.graph.degree(l0.mark("hd")) == 2);
    CHECK(l0.graph.degree(l0.mark("tr1")) == 1);
    CHECK(l0.graph.degree(l0.mark("tr2")) == 1);

    const GadgetGraph l1 = build_L(1);
    CHECK(l1.graph.vertex_count() == 4);
    CHECK(l1.graph.edge_count() == 5);

    const GadgetGraph l5 = build_L(5);
    CHECK(l5.graph.vertex_count() == 8);
    CHECK(l5.graph.edge_count() == 17);
    // Apexes see every path vertex.
    CHECK(l5.graph.degree(l5.mark("tr1")) == 6);
    CHECK(l5.graph.degree(l5.mark("tr2")) == 6);

    CHECK_THROWS_AS(build_L(-1), UsageError);
}

TEST_CASE("phi gadget") {
    const GadgetGraph phi = build_Phi({1, 3, 4});
    CHECK(phi.graph.vertex_count() == 2 + 2 + 4 + 5);
    CHECK(phi.mark("tr1") != phi.mark("tr2"));

    CHECK(build_Phi({1}).graph.vertex_count() == 4);

    const GadgetGraph empty = build_Phi({});
    CHECK(empty.graph.vertex_count() == 2);
    CHECK(empty.graph.edge_count() == 0);

    CHECK_THROWS_AS(build_Phi({0}), UsageError);
    CHECK_THROWS_AS(build_Phi({2, 2}), UsageError);
}

TEST_CASE("edge replacement by phi copies") {
    // On a single edge the result is the phi graph itself.
    const Graph one = build_otimes(Graph::complete(2), {1});
    CHECK(one.vertex_count() == 4);
    CHECK(one.edge_count() == 5);

    const Graph two = build_otimes(Graph::path(3), {1});
    CHECK(two.vertex_count() == 7);
    CHECK(two.edge_count() == 10);

    // No edges, nothing changes.
    const Graph none = build_otimes(Graph::empty(3), {1, 2});
    CHECK(none.vertex_count() == 3);
    CHECK(none.edge_count() == 0);

    // The original vertices stay in place; original edges disappear.
    const Graph k3 = build_otimes(Graph::complete(3), {1});
    CHECK(k3.vertex_count() == 3 + 3 * 2);
    CHECK(!k3.has_edge(0, 1));
    CHECK(!k3.has_edge(0, 2));
    CHECK(!k3.has_edge(1, 2));

    // Empty H empties the edge set.
    const Graph hollow = build_otimes(Graph::complete(3), {});
    CHECK(hollow.vertex_count() == 3);
    CHECK(hollow.edge_count() == 0);
}

TEST_CASE("pendant gadget") {
    CHECK(build_pendant(Graph::complete(1)) == Graph::complete(2));
    CHECK(build_pendant(Graph::complete(2)).vertex_count() == 4);
    CHECK(build_pendant(Graph::empty(2)).edge_count() == 2);
}

TEST_CASE("star-of-stars gadget") {
    const GadgetGraph s = build_S_H({2, 3, 5});
    CHECK(s.graph.vertex_count() == 1 + 3 + 4 + 6);
    CHECK(s.graph.degree(s.mark("cent")) == 3);

    // S_{}(G) is G.
    CHECK(build_S_H_of(Graph::cycle(4), {}) == Graph::cycle(4));

    // Rooted product on a single vertex with H = {1} is the 3-path.
    const Graph p3 = build_S_H_of(Graph::complete(1), {1});
    CHECK(p3.vertex_count() == 3);
    CHECK(p3.edge_count() == 2);
    CHECK(p3.degree(0) == 1);

    const Graph big = build_S_H_of(Graph::complete(2), {1, 2});
    CHECK(big.vertex_count() == 2 * (1 + 2 + 3));
    CHECK(big.has_edge(0, 1));
}

TEST_CASE("simple thickening") {
    const SThGraph t1 = build_STh(Graph::complete(2), 1);
    CHECK(t1.graph.vertex_count() == 6);
    CHECK(t1.graph.edge_count() == 8);
    CHECK(!t1.graph.has_edge(0, 1));

    const SThGraph t2 = build_STh(Graph::complete(2), 2);
    CHECK(t2.graph.vertex_count() == 10);
    CHECK(t2.graph.edge_count() == 16);

    const GadgetGraph nplus = t1.n_plus(0);
    CHECK(nplus.graph.vertex_count() == 6);
    CHECK(nplus.graph.edge_count() == 8);
    CHECK(nplus.graph.degree(nplus.mark("m1")) == 2);
    CHECK_THROWS_AS(t1.n_plus(1), UsageError);

    // Midpoints of distinct edges are disjoint.
    const SThGraph p3 = build_STh(Graph::path(3), 1);
    CHECK(p3.graph.vertex_count() == 3 + 8);
    CHECK(p3.n_plus(0).graph.vertex_count() == 6);
    CHECK(p3.n_plus(1).graph.vertex_count() == 6);
}

TEST_CASE("two-parameter thickening R") {
    // The worked example: one edge, l = 1, q = 2.
    const Graph r12 = build_R(Graph::complete(2), 1, 2);
    CHECK(r12.vertex_count() == 46);
    CHECK(r12.edge_count() == 72);

    const Graph r_k1 = build_R(Graph::complete(1), 1, 1);
    CHECK(r_k1.vertex_count() == 11);
    CHECK(r_k1.edge_count() == 16);

    const Graph r_k2 = build_R(Graph::complete(2), 1, 1);
    CHECK(r_k2.vertex_count() == 26);
    CHECK(r_k2.edge_count() == 40);

    CHECK_THROWS_AS(build_R(Graph::complete(2), 0, 1), UsageError);
}

TEST_CASE("gadget counts match their closed forms, randomized") {
    std::mt19937 rng(31);
    std::bernoulli_distribution flip(0.5);
    for (int trial = 0; trial < 12; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (flip(rng)) edges.emplace_back(u, v);
        const Graph g(n, edges);
        const int m = g.edge_count();

        const int l = 1 + static_cast<int>(rng() % 3);
        const int q = 1 + static_cast<int>(rng() % 3);
        const Graph r = build_R(g, l, q);
        CHECK(r.vertex_count() == n * (1 + 2 * q * (1 + 4 * l)) + 4 * l * m);
        CHECK(r.edge_count() == 8 * l * m + 16 * l * q * n);

        const SThGraph sth = build_STh(g, l);
        CHECK(sth.graph.vertex_count() == n + 4 * l * m);
        CHECK(sth.graph.edge_count() == 8 * l * m);

        std::vector<int> H;
        for (int h = 1; h <= 4; ++h)
            if (flip(rng)) H.push_back(h);
        int weight = 0;
        for (int h : H) weight += h + 1;
        CHECK(build_Phi(H).graph.vertex_count() == 2 + weight);
        CHECK(build_otimes(g, H).vertex_count() == n + m * weight);
        CHECK(build_S_H(H).graph.vertex_count() == 1 + weight);
        CHECK(build_S_H_of(g, H).vertex_count() == n * (1 + weight));
    }
}
