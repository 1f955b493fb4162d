#include "ising/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

namespace ising {

// ---------------------------------------------------------------- VertexSet

VertexSet::VertexSet(int n) : n_(n) {
    if (n < 0) throw UsageError("negative vertex-set universe");
    words_.assign((n + 63) / 64, 0);
}

VertexSet VertexSet::of(int n, const std::vector<int>& vertices) {
    VertexSet s(n);
    for (int v : vertices) s.set(v);
    return s;
}

VertexSet VertexSet::full(int n) {
    VertexSet s(n);
    for (int v = 0; v < n; ++v) s.set(v);
    return s;
}

void VertexSet::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw UsageError("vertex out of range");
}

bool VertexSet::test(int v) const {
    check_vertex(v);
    return (words_[v / 64] >> (v % 64)) & 1u;
}

void VertexSet::set(int v) {
    check_vertex(v);
    words_[v / 64] |= std::uint64_t{1} << (v % 64);
}

void VertexSet::reset(int v) {
    check_vertex(v);
    words_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
}

int VertexSet::count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
}

VertexSet VertexSet::complement() const {
    VertexSet s(n_);
    for (size_t i = 0; i < words_.size(); ++i) s.words_[i] = ~words_[i];
    // Clear bits above n-1.
    if (n_ % 64 != 0 && !s.words_.empty())
        s.words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
    return s;
}

bool VertexSet::intersects(const VertexSet& o) const {
    if (n_ != o.n_) throw UsageError("vertex sets over different universes");
    for (size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & o.words_[i]) return true;
    return false;
}

std::vector<int> VertexSet::to_vector() const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
        if (test(v)) out.push_back(v);
    return out;
}

// -------------------------------------------------------------------- Graph

Graph::Graph(int n, std::vector<std::pair<int, int>> edges,
             std::vector<std::string> names, std::vector<int> labels)
    : n_(n), names_(std::move(names)), labels_(std::move(labels)) {
    if (n < 0) throw ConstructionError("negative vertex count");
    if (!names_.empty() && static_cast<int>(names_.size()) != n)
        throw ConstructionError("name list length does not match vertex count");
    if (!labels_.empty()) {
        if (static_cast<int>(labels_.size()) != n)
            throw ConstructionError("label list length does not match vertex count");
        for (int c : labels_)
            if (c < 1) throw ConstructionError("vertex labels must be >= 1");
    }
    for (auto& [u, v] : edges) {
        if (u == v) throw ConstructionError("self-loop");
        if (u < 0 || v < 0 || u >= n || v >= n) throw ConstructionError("edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
}

Graph Graph::empty(int n) { return Graph(n, {}); }

Graph Graph::path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, std::move(e));
}

Graph Graph::star(int leaves) {
    std::vector<std::pair<int, int>> e;
    std::vector<std::string> names{"cent"};
    for (int i = 1; i <= leaves; ++i) {
        e.emplace_back(0, i);
        names.push_back("leaf" + std::to_string(i));
    }
    return Graph(leaves + 1, std::move(e), std::move(names));
}

Graph Graph::complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, std::move(e));
}

Graph Graph::cycle(int n) {
    if (n < 3) throw ConstructionError("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(e));
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

const std::string& Graph::name(int v) const {
    if (!has_names()) throw UsageError("graph has no names");
    if (v < 0 || v >= n_) throw UsageError("vertex out of range");
    return names_[v];
}

int Graph::label(int v) const {
    if (!has_labels()) throw UsageError("graph has no labels");
    if (v < 0 || v >= n_) throw UsageError("vertex out of range");
    return labels_[v];
}

int Graph::max_label() const {
    int k = 0;
    for (int c : labels_) k = std::max(k, c);
    return k;
}

int Graph::degree(int v) const {
    if (v < 0 || v >= n_) throw UsageError("vertex out of range");
    int d = 0;
    for (const auto& [a, b] : edges_)
        if (a == v || b == v) ++d;
    return d;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(n_, 0);
    for (const auto& [a, b] : edges_) {
        ++d[a];
        ++d[b];
    }
    return d;
}

std::optional<int> Graph::regular_degree() const {
    if (n_ == 0) return 0;
    auto d = degrees();
    for (int x : d)
        if (x != d[0]) return std::nullopt;
    return d[0];
}

std::vector<std::uint64_t> Graph::adjacency_masks() const {
    if (n_ > 64) throw CapacityError("adjacency masks need n <= 64");
    std::vector<std::uint64_t> adj(n_, 0);
    for (const auto& [u, v] : edges_) {
        adj[u] |= std::uint64_t{1} << v;
        adj[v] |= std::uint64_t{1} << u;
    }
    return adj;
}

Graph Graph::with_labels(std::vector<int> labels) const {
    return Graph(n_, edges_, names_, std::move(labels));
}

Graph Graph::without_labels() const { return Graph(n_, edges_, names_); }

// --------------------------------------------------------------- operations

namespace {
void check_set_for_graph(const Graph& g, const VertexSet& s) {
    if (s.universe_size() != g.vertex_count())
        throw UsageError("vertex set universe does not match graph");
}
}  // namespace

int induced_edge_count(const Graph& g, const VertexSet& s) {
    check_set_for_graph(g, s);
    int c = 0;
    for (const auto& [u, v] : g.edges())
        if (s.test(u) && s.test(v)) ++c;
    return c;
}

int cut_size(const Graph& g, const VertexSet& s) {
    check_set_for_graph(g, s);
    int c = 0;
    for (const auto& [u, v] : g.edges())
        if (s.test(u) != s.test(v)) ++c;
    return c;
}

Graph disjoint_union(const Graph& g1, const Graph& g2,
                     const std::string& prefix1, const std::string& prefix2) {
    const int n1 = g1.vertex_count();
    std::vector<std::pair<int, int>> edges = g1.edges();
    for (const auto& [u, v] : g2.edges()) edges.emplace_back(u + n1, v + n1);

    std::vector<std::string> names;
    if (g1.has_names() || g2.has_names() || !prefix1.empty() || !prefix2.empty()) {
        for (int v = 0; v < n1; ++v)
            names.push_back(prefix1 + (g1.has_names() ? g1.name(v) : std::to_string(v)));
        for (int v = 0; v < g2.vertex_count(); ++v)
            names.push_back(prefix2 + (g2.has_names() ? g2.name(v) : std::to_string(v)));
    }

    std::vector<int> labels;
    if (g1.has_labels() && g2.has_labels()) {
        labels = g1.labels();
        labels.insert(labels.end(), g2.labels().begin(), g2.labels().end());
    }
    return Graph(n1 + g2.vertex_count(), std::move(edges), std::move(names), std::move(labels));
}

std::pair<Graph, std::vector<int>> identify_vertices(
    const Graph& g, const std::vector<std::pair<int, int>>& pairs) {
    const int n = g.vertex_count();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& [a, b] : pairs) {
        if (a < 0 || b < 0 || a >= n || b >= n) throw UsageError("identification vertex out of range");
        int ra = find(a), rb = find(b);
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }

    // Dense renumbering in order of class representatives.
    std::vector<int> mapping(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (find(v) == v) mapping[v] = next++;
    for (int v = 0; v < n; ++v) mapping[v] = mapping[find(v)];

    std::vector<std::pair<int, int>> edges;
    for (const auto& [u, v] : g.edges()) {
        const int nu = mapping[u], nv = mapping[v];
        if (nu == nv)
            throw ConstructionError("identification creates a self-loop on edge (" +
                                    std::to_string(u) + "," + std::to_string(v) + ")");
        edges.emplace_back(nu, nv);
    }

    std::vector<std::string> names;
    if (g.has_names()) {
        names.assign(next, "");
        for (int v = n - 1; v >= 0; --v) names[mapping[v]] = g.name(v);
        // Representative (smallest old id) wins, hence the reverse sweep.
    }
    return {Graph(next, std::move(edges), std::move(names)), std::move(mapping)};
}

Graph pendant_extension(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> edges = g.edges();
    for (int v = 0; v < n; ++v) edges.emplace_back(v, n + v);
    std::vector<std::string> names;
    if (g.has_names()) {
        names = g.names();
        for (int v = 0; v < n; ++v) names.push_back(g.name(v) + "'");
    }
    return Graph(2 * n, std::move(edges), std::move(names));
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    const int n = g.vertex_count();
    std::vector<int> where(n, -1);
    for (size_t i = 0; i < vertices.size(); ++i) {
        const int v = vertices[i];
        if (v < 0 || v >= n) throw UsageError("vertex out of range");
        if (where[v] != -1) throw UsageError("duplicate vertex in induced-subgraph list");
        where[v] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& [u, v] : g.edges())
        if (where[u] != -1 && where[v] != -1) edges.emplace_back(where[u], where[v]);
    std::vector<std::string> names;
    if (g.has_names())
        for (int v : vertices) names.push_back(g.name(v));
    return Graph(static_cast<int>(vertices.size()), std::move(edges), std::move(names));
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> adj(n);
    for (const auto& [u, v] : g.edges()) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        std::vector<int> stack{s}, members;
        comp[s] = static_cast<int>(out.size());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (int w : adj[v])
                if (comp[w] == -1) {
                    comp[w] = comp[s];
                    stack.push_back(w);
                }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition_of_component(
    const Graph& g, const std::vector<int>& component) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> adj(n);
    for (const auto& [u, v] : g.edges()) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<int> side(n, -1);
    if (component.empty()) return std::make_pair(std::vector<int>{}, std::vector<int>{});
    std::vector<int> stack{component[0]};
    side[component[0]] = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v]) {
            if (side[w] == -1) {
                side[w] = 1 - side[v];
                stack.push_back(w);
            } else if (side[w] == side[v]) {
                return std::nullopt;
            }
        }
    }
    std::pair<std::vector<int>, std::vector<int>> parts;
    for (int v : component)
        (side[v] == 0 ? parts.first : parts.second).push_back(v);
    return parts;
}

}  // namespace ising
