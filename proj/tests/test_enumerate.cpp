#include <doctest.h>

#include <random>

#include "ising/enumerate.hpp"
#include "ising/gadgets.hpp"

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

Poly poly2(std::initializer_list<std::pair<std::vector<int>, long>> terms) {
    Poly p(2);
    for (const auto& [e, c] : terms) p.add_term(e, rat(c));
    return p;
}

Poly poly3(std::initializer_list<std::pair<std::vector<int>, long>> terms) {
    Poly p(3);
    for (const auto& [e, c] : terms) p.add_term(e, rat(c));
    return p;
}

}  // namespace

TEST_CASE("trivariate brute force on tiny graphs") {
    CHECK(z_trivariate(Graph::complete(1)) == poly3({{{0, 0, 0}, 1}, {{0, 1, 0}, 1}}));
    CHECK(z_trivariate(Graph::complete(2)) ==
          poly3({{{0, 0, 1}, 1}, {{0, 1, 0}, 2}, {{1, 2, 0}, 1}}));
    // P3: z^2 + (1+2z) y + (1+2x) y^2 + x^2 y^3.
    CHECK(z_trivariate(Graph::path(3)) ==
          poly3({{{0, 0, 2}, 1},
                 {{0, 1, 0}, 1},
                 {{0, 1, 1}, 2},
                 {{0, 2, 0}, 1},
                 {{1, 2, 0}, 2},
                 {{2, 3, 0}, 1}}));
}

TEST_CASE("bivariate brute force and the substitution chain") {
    CHECK(z_bivariate(Graph::complete(2)) ==
          poly2({{{1, 0}, 1}, {{0, 1}, 2}, {{1, 2}, 1}}));
    CHECK(z_bivariate(Graph::path(3)) ==
          poly2({{{2, 0}, 1}, {{0, 1}, 1}, {{1, 1}, 2}, {{0, 2}, 1}, {{1, 2}, 2}, {{2, 3}, 1}}));

    std::mt19937 rng(21);
    for (int trial = 0; trial < 10; ++trial) {
        const Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 7));
        // x := z then rename (z, y) -> (t, y).
        const Poly chained =
            z_trivariate(g).substitute(0, Poly::var(3, 2)).remap_vars(2, {-1, 1, 0});
        CHECK(chained == z_bivariate(g));
        // The y-free part is t^m.
        CHECK(z_bivariate(g).coefficient({g.edge_count(), 0}) == 1);
    }
}

TEST_CASE("cut-form identity") {
    std::mt19937 rng(22);
    for (int trial = 0; trial < 10; ++trial) {
        const Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 7));
        const int m = g.edge_count();
        Poly cut_form(2);
        const std::uint64_t total = std::uint64_t{1} << g.vertex_count();
        for (std::uint64_t bits = 0; bits < total; ++bits) {
            VertexSet s(g.vertex_count());
            for (int v = 0; v < g.vertex_count(); ++v)
                if ((bits >> v) & 1u) s.set(v);
            cut_form.add_term({m - cut_size(g, s), s.count()}, rat(1));
        }
        CHECK(cut_form == z_bivariate(g));
    }
}

TEST_CASE("constrained sums on the smallest ladder") {
    const GadgetGraph L0 = build_L(0);
    const int n = L0.graph.vertex_count();
    const auto set_of = [&](std::initializer_list<const char*> names) {
        std::vector<int> v;
        for (const char* s : names) v.push_back(L0.mark(s));
        return VertexSet::of(n, v);
    };
    // Unconstrained matches the bivariate sum.
    CHECK(z_constrained(L0.graph, VertexSet(n), VertexSet(n)) == z_bivariate(L0.graph));
    // Forced head and one apex: t y^2 (value t at y = 1).
    CHECK(z_constrained(L0.graph, set_of({"tr1", "hd"}), set_of({"tr2"})) ==
          poly2({{{1, 2}, 1}}));
    // All three forced: t^2 y^3 under the full-subset convention.
    CHECK(z_constrained(L0.graph, set_of({"tr1", "tr2", "hd"}), VertexSet(n)) ==
          poly2({{{2, 3}, 1}}));
    // Same under the exclude-B convention: t^2.
    CHECK(z_constrained(L0.graph, set_of({"tr1", "tr2", "hd"}), VertexSet(n),
                        YConvention::ExcludeConstrained) == poly2({{{2, 0}, 1}}));
    CHECK_THROWS_AS(z_constrained(L0.graph, set_of({"hd"}), set_of({"hd"})), UsageError);
}

TEST_CASE("multivariate constrained sum on an edge") {
    const Graph k2 = Graph::complete(2);
    // Variable order: x_01, y_0, y_1, z_01.
    const VertexSet none(2);
    Poly expected(4);
    expected.add_term({0, 0, 0, 1}, rat(1));
    expected.add_term({0, 1, 0, 0}, rat(1));
    expected.add_term({0, 0, 1, 0}, rat(1));
    expected.add_term({1, 1, 1, 0}, rat(1));
    CHECK(z_multivariate(k2, none, none) == expected);

    // B = {0}: y-product skips vertex 0.
    Poly constrained(4);
    constrained.add_term({0, 0, 0, 0}, rat(1));  // A = {0}
    constrained.add_term({1, 0, 1, 0}, rat(1));  // A = {0,1}
    CHECK(z_multivariate(k2, VertexSet::of(2, {0}), none) == constrained);

    // B = V: a single term, every edge inside.
    CHECK(z_multivariate(k2, VertexSet::full(2), none) ==
          Poly::monomial({1, 0, 0, 0}, rat(1)));
}

TEST_CASE("constrained walker agrees with a naive subset filter") {
    std::mt19937 rng(53);
    for (int trial = 0; trial < 10; ++trial) {
        const Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 6));
        const int n = g.vertex_count();
        VertexSet B(n), C(n);
        for (int v = 0; v < n; ++v) {
            const int roll = static_cast<int>(rng() % 4);
            if (roll == 0) B.set(v);
            if (roll == 1) C.set(v);
        }
        // Independent route: loop over all subsets, filter, and count edges
        // through the graph-level set operations.
        Poly naive(2);
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
            VertexSet s(n);
            for (int v = 0; v < n; ++v)
                if ((bits >> v) & 1u) s.set(v);
            bool admissible = !s.intersects(C);
            for (int v : B.to_vector()) admissible = admissible && s.test(v);
            if (!admissible) continue;
            const int inside = induced_edge_count(g, s);
            const int outside = induced_edge_count(g, s.complement());
            naive.add_term({inside + outside, s.count()}, rat(1));
        }
        CHECK(naive == z_constrained(g, B, C));
    }
}

TEST_CASE("multivariate specializes to the constrained trivariate sum") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 8; ++trial) {
        const Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 4));
        const int n = g.vertex_count(), m = g.edge_count();
        VertexSet B(n), C(n);
        for (int v = 0; v < n; ++v) {
            const int roll = static_cast<int>(rng() % 3);
            if (roll == 0) B.set(v);
            if (roll == 1) C.set(v);
        }
        // Collapse x_e -> x, y_u -> y, z_e -> z.
        std::vector<int> mapping(2 * m + n);
        for (int e = 0; e < m; ++e) mapping[e] = 0;
        for (int v = 0; v < n; ++v) mapping[m + v] = 1;
        for (int e = 0; e < m; ++e) mapping[m + n + e] = 2;
        CHECK(z_multivariate(g, B, C).remap_vars(3, mapping) ==
              z_constrained_trivariate(g, B, C, YConvention::ExcludeConstrained));
    }
}

TEST_CASE("labeled polynomial specializes to the trivariate sum") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> color(1, 3);
    for (int trial = 0; trial < 8; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        std::vector<int> labels(n);
        for (int& c : labels) c = color(rng);
        Graph g = random_graph(rng, n).with_labels(labels);
        const int k = g.max_label();
        const int pairs = k * (k + 1) / 2;
        std::vector<int> mapping(k + 2 * pairs);
        for (int i = 0; i < k; ++i) mapping[i] = 1;
        for (int i = 0; i < pairs; ++i) {
            mapping[k + i] = 0;
            mapping[k + pairs + i] = 2;
        }
        CHECK(z_labeled(g).remap_vars(3, mapping) == z_trivariate(g.without_labels()));
    }
}

TEST_CASE("labeled polynomial brute force") {
    // K2 with labels (1, 2): variables y1, y2, x11, x12, x22, z11, z12, z22.
    const Graph k2 = Graph::complete(2).with_labels({1, 2});
    Poly expected(8);
    expected.add_term({0, 0, 0, 0, 0, 0, 1, 0}, rat(1));  // z12
    expected.add_term({1, 0, 0, 0, 0, 0, 0, 0}, rat(1));  // y1
    expected.add_term({0, 1, 0, 0, 0, 0, 0, 0}, rat(1));  // y2
    expected.add_term({1, 1, 0, 1, 0, 0, 0, 0}, rat(1));  // x12 y1 y2
    CHECK(z_labeled(k2) == expected);

    // A singleton labeled 3 lives in the k = 3 space: 1 + y3.
    const Graph k1 = Graph::complete(1).with_labels({3});
    const Poly z1 = z_labeled(k1);
    CHECK(z1.arity() == 3 + 2 * 6);
    CHECK(z1.terms().size() == 2);
    std::vector<int> y3(15, 0);
    y3[2] = 1;
    CHECK(z1.coefficient(y3) == 1);

    // Two isolated vertices, both labeled 1: (1 + y1)^2.
    const Graph two = Graph::empty(2).with_labels({1, 1});
    Poly sq(3);
    sq.add_term({0, 0, 0}, rat(1));
    sq.add_term({1, 0, 0}, rat(2));
    sq.add_term({2, 0, 0}, rat(1));
    CHECK(z_labeled(two) == sq);

    CHECK_THROWS_AS(z_labeled(Graph::complete(2)), UsageError);
}

TEST_CASE("numeric point evaluation") {
    CHECK(z_eval_point(Graph::complete(2), rat(2), rat(3), rat(5)) == 29);
    std::mt19937 rng(23);
    for (int trial = 0; trial < 8; ++trial) {
        const Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 9));
        // All-ones weight counts subsets.
        CHECK(z_eval_point(g, rat(1), rat(1), rat(1)) ==
              rat_pow(rat(2), g.vertex_count()));
        // y = 0 keeps only the empty subset.
        CHECK(z_eval_point(g, rat(7), rat(0), rat(5)) == rat_pow(rat(5), g.edge_count()));
        // Agreement with the symbolic polynomial.
        const std::vector<Rat> pt{rat(2, 3), rat(-3), rat(5, 7)};
        CHECK(z_eval_point(g, pt[0], pt[1], pt[2]) == z_trivariate(g).eval(pt));
        // Deterministic across thread counts.
        CHECK(z_eval_point(g, pt[0], pt[1], pt[2], 30, 1) ==
              z_eval_point(g, pt[0], pt[1], pt[2], 30, 3));
    }
}

TEST_CASE("chunked evaluation agrees at scale") {
    // A 20-vertex thickening, evaluated across several chunkings.
    const Graph g = build_R(Graph::complete(1), 1, 1);
    const Graph big = disjoint_union(g, Graph::cycle(9));
    REQUIRE(big.vertex_count() == 20);
    const Rat base = z_eval_point(big, rat(2), rat(-3, 2), rat(5), 30, 1);
    for (int threads : {2, 5, 8})
        CHECK(z_eval_point(big, rat(2), rat(-3, 2), rat(5), 30, threads) == base);
    // Disjoint union multiplies the partition sums.
    CHECK(base == z_eval_point(g, rat(2), rat(-3, 2), rat(5)) *
                      z_eval_point(Graph::cycle(9), rat(2), rat(-3, 2), rat(5)));
}

TEST_CASE("coefficientwise nonnegativity of the trivariate sum") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 8; ++trial) {
        const Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 7));
        const Poly z = z_trivariate(g);
        Rat total = 0;
        for (const auto& [e, coeff] : z.terms()) {
            CHECK(coeff > 0);
            total += coeff;
        }
        CHECK(total == rat_pow(rat(2), g.vertex_count()));
    }
}

TEST_CASE("capacity caps") {
    CHECK_THROWS_AS(z_trivariate(Graph::empty(23)), CapacityError);
    CHECK(z_trivariate(Graph::empty(23), 24).coefficient({0, 0, 0}) == 1);
    CHECK_THROWS_AS(z_eval_point(Graph::empty(31), rat(1), rat(1), rat(1)), CapacityError);
}

TEST_CASE("combinatorial counters") {
    CHECK(count_perfect_matchings(Graph::complete(4)) == 3);
    CHECK(count_perfect_matchings(Graph::path(4)) == 1);
    CHECK(count_perfect_matchings(Graph::cycle(4)) == 2);
    CHECK(count_perfect_matchings(Graph::complete(3)) == 0);
    CHECK(count_perfect_matchings(Graph::empty(0)) == 1);

    const auto [mc, cnt] = count_max_cuts(Graph::complete(3));
    CHECK(mc == 2);
    CHECK(cnt == 6);
    const auto [mc2, cnt2] = count_max_cuts(Graph::path(3));
    CHECK(mc2 == 2);
    CHECK(cnt2 == 2);

    Poly is_p3(1);
    is_p3.add_term({0}, rat(1));
    is_p3.add_term({1}, rat(3));
    is_p3.add_term({2}, rat(1));
    CHECK(independent_set_polynomial(Graph::path(3)) == is_p3);

    CHECK(vertex_cover_count(Graph::complete(2)) == 3);
    CHECK(vertex_cover_count(Graph::complete(3)) == 4);
}
