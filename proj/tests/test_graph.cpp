#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "ising/graph.hpp"
#include "ising/io.hpp"
#include "ising/poly.hpp"

using namespace ising;

namespace {
Graph random_graph(std::mt19937& rng, int n) {
    std::vector<std::pair<int, int>> edges;
    std::bernoulli_distribution flip(0.5);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (flip(rng)) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}
}  // namespace

TEST_CASE("graph construction rejects bad input") {
    CHECK_THROWS_AS(Graph(2, {{0, 0}}), ConstructionError);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), ConstructionError);
    CHECK_THROWS_AS(Graph(2, {}, {"a"}), ConstructionError);
    CHECK_THROWS_AS(Graph(1, {}, {}, {0}), ConstructionError);
    // Duplicate edges collapse.
    CHECK(Graph(2, {{0, 1}, {1, 0}}).edge_count() == 1);
}

TEST_CASE("induced edge count") {
    const Graph k2 = Graph::complete(2);
    CHECK(induced_edge_count(k2, VertexSet::full(2)) == 1);
    CHECK(induced_edge_count(k2, VertexSet(2)) == 0);
    const Graph p3 = Graph::path(3);
    CHECK(induced_edge_count(p3, VertexSet::of(3, {0, 2})) == 0);
    CHECK_THROWS_AS(induced_edge_count(k2, VertexSet(3)), UsageError);
}

TEST_CASE("cut size") {
    CHECK(cut_size(Graph::complete(2), VertexSet::of(2, {0})) == 1);
    CHECK(cut_size(Graph::complete(3), VertexSet::of(3, {0})) == 2);
    CHECK(cut_size(Graph::complete(3), VertexSet(3)) == 0);
}

TEST_CASE("edge partition identity, randomized") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 25; ++trial) {
        const Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 8));
        VertexSet s(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v)
            if (rng() & 1u) s.set(v);
        CHECK(induced_edge_count(g, s) + induced_edge_count(g, s.complement()) +
                  cut_size(g, s) ==
              g.edge_count());
    }
}

TEST_CASE("disjoint union") {
    const Graph a = disjoint_union(Graph::complete(1), Graph::complete(1));
    CHECK(a.vertex_count() == 2);
    CHECK(a.edge_count() == 0);
    const Graph b = disjoint_union(Graph::complete(2), Graph::complete(2));
    CHECK(b.edges() == std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});
    const Graph c = disjoint_union(Graph::path(3), Graph::complete(1));
    CHECK(c.vertex_count() == 4);
    CHECK(c.edge_count() == 2);
}

TEST_CASE("disjoint union is associative under the shift renumbering") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 10; ++trial) {
        const Graph a = random_graph(rng, 1 + static_cast<int>(rng() % 4));
        const Graph b = random_graph(rng, 1 + static_cast<int>(rng() % 4));
        const Graph c = random_graph(rng, 1 + static_cast<int>(rng() % 4));
        CHECK(disjoint_union(disjoint_union(a, b), c) ==
              disjoint_union(a, disjoint_union(b, c)));
    }
}

TEST_CASE("vertex identification") {
    // Two disjoint edges glued at one endpoint give a path.
    const Graph two_k2(4, {{0, 1}, {2, 3}});
    const auto [p3, mapping] = identify_vertices(two_k2, {{1, 2}});
    CHECK(p3.vertex_count() == 3);
    CHECK(p3.edge_count() == 2);
    CHECK(mapping[1] == mapping[2]);

    const auto [same, id_map] = identify_vertices(two_k2, {});
    CHECK(same == two_k2);

    CHECK_THROWS_AS(identify_vertices(Graph::complete(2), {{0, 1}}), ConstructionError);
}

TEST_CASE("identification merges parallels and stays simple") {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 10; ++trial) {
        const Graph g = random_graph(rng, 4 + static_cast<int>(rng() % 4));
        // Identify two non-adjacent vertices.
        int a = -1, b = -1;
        for (int u = 0; u < g.vertex_count() && a < 0; ++u)
            for (int v = u + 1; v < g.vertex_count() && a < 0; ++v)
                if (!g.has_edge(u, v)) {
                    a = u;
                    b = v;
                }
        if (a < 0) continue;  // complete graph, nothing to glue
        const auto [q, mapping] = identify_vertices(g, {{a, b}});
        CHECK(q.vertex_count() == g.vertex_count() - 1);
        // Edge count drops by exactly the number of merged parallels.
        std::set<std::pair<int, int>> mapped;
        for (const auto& [u, v] : g.edges()) {
            auto e = std::minmax(mapping[u], mapping[v]);
            mapped.insert({e.first, e.second});
        }
        CHECK(q.edge_count() == static_cast<int>(mapped.size()));
    }
}

TEST_CASE("pendant extension") {
    CHECK(pendant_extension(Graph::complete(1)) == Graph::complete(2));
    // On an edge, the result is a 4-path (degree sequence 1,1,2,2, connected).
    const Graph p = pendant_extension(Graph::complete(2));
    CHECK(p.vertex_count() == 4);
    CHECK(p.edge_count() == 3);
    auto degs = p.degrees();
    std::sort(degs.begin(), degs.end());
    CHECK(degs == std::vector<int>{1, 1, 2, 2});
    CHECK(connected_components(p).size() == 1);

    const Graph two = pendant_extension(Graph::empty(2));
    CHECK(two.vertex_count() == 4);
    CHECK(two.edge_count() == 2);
    CHECK(connected_components(two).size() == 2);
}

TEST_CASE("basic constructors") {
    CHECK(Graph::path(4).edge_count() == 3);
    CHECK(Graph::star(5).vertex_count() == 6);
    CHECK(Graph::star(5).degree(0) == 5);
    CHECK(Graph::complete(5).edge_count() == 10);
    CHECK(Graph::cycle(5).edge_count() == 5);
    CHECK(Graph::complete(4).regular_degree() == 3);
    CHECK(!Graph::path(3).regular_degree().has_value());
}

TEST_CASE("components and bipartitions") {
    const Graph g(5, {{0, 1}, {1, 2}, {3, 4}});
    const auto comps = connected_components(g);
    CHECK(comps.size() == 2);
    const auto parts = bipartition_of_component(g, comps[0]);
    REQUIRE(parts.has_value());
    CHECK(parts->first.size() + parts->second.size() == 3);
    CHECK(!bipartition_of_component(Graph::complete(3), {0, 1, 2}).has_value());
}

TEST_CASE("induced subgraph") {
    const Graph g = Graph::cycle(5);
    const Graph sub = induced_subgraph(g, {0, 1, 2});
    CHECK(sub.vertex_count() == 3);
    CHECK(sub.edge_count() == 2);
    CHECK_THROWS_AS(induced_subgraph(g, {0, 0}), UsageError);
}

TEST_CASE("graph json round trip") {
    const Graph g(3, {{2, 0}, {0, 1}}, {"a", "b", "c"}, {1, 2, 1});
    const std::string text = graph_to_json(g);
    // Edges normalized and sorted.
    CHECK(text == R"({"n":3,"edges":[[0,1],[0,2]],"names":["a","b","c"],"labels":[1,2,1]})");
    const Graph back = graph_from_json(text);
    CHECK(back == g);
    CHECK(back.names() == g.names());
    CHECK(back.labels() == g.labels());
    CHECK_THROWS_AS(graph_from_json("{"), UsageError);
    CHECK_THROWS_AS(graph_from_json(R"({"n":1})"), UsageError);
    CHECK_THROWS_AS(graph_from_json(R"({"n":1,"edges":[[0]]})"), UsageError);
}

TEST_CASE("polynomial json round trip") {
    Poly p(2);
    p.add_term({1, 0}, rat(1));
    p.add_term({0, 1}, rat(-3, 7));
    p.add_term({2, 2}, rat(5));
    const std::string text = poly_to_json(p, {"t", "y"});
    CHECK(text == R"({"vars":["t","y"],"terms":[[[1,0],"1"],[[0,1],"-3/7"],[[2,2],"5"]]})");
    CHECK(poly_from_json(text) == p);
    CHECK_THROWS_AS(poly_to_json(p, {"t"}), UsageError);
    CHECK_THROWS_AS(poly_from_json(R"({"vars":["t"]})"), UsageError);
}

TEST_CASE("vertex sets") {
    VertexSet s(70);
    s.set(0);
    s.set(69);
    CHECK(s.count() == 2);
    CHECK(s.complement().count() == 68);
    CHECK(!s.intersects(VertexSet::of(70, {5})));
    CHECK(s.intersects(VertexSet::of(70, {69})));
    CHECK(s.to_vector() == std::vector<int>{0, 69});
    CHECK_THROWS_AS(s.set(70), UsageError);
}
