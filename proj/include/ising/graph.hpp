#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ising/errors.hpp"

namespace ising {

// Subset of the vertices of a graph on n vertices, stored as a word vector.
// Bits above n-1 stay zero.
class VertexSet {
public:
    explicit VertexSet(int n);
    static VertexSet of(int n, const std::vector<int>& vertices);
    static VertexSet full(int n);

    int universe_size() const { return n_; }
    bool test(int v) const;
    void set(int v);
    void reset(int v);
    int count() const;
    bool empty() const { return count() == 0; }
    VertexSet complement() const;
    bool intersects(const VertexSet& o) const;
    std::vector<int> to_vector() const;

    bool operator==(const VertexSet& o) const { return n_ == o.n_ && words_ == o.words_; }

private:
    int n_;
    std::vector<std::uint64_t> words_;

    void check_vertex(int v) const;
};

// Immutable simple undirected graph.  Vertices are 0..n-1; optional string
// names record gadget provenance; optional labels are colors in [k] used by
// the clique-width machinery.
class Graph {
public:
    Graph(int n, std::vector<std::pair<int, int>> edges,
          std::vector<std::string> names = {}, std::vector<int> labels = {});

    static Graph empty(int n);
    static Graph path(int n);
    // Star S_n with n leaves; the center is vertex 0.
    static Graph star(int leaves);
    static Graph complete(int n);
    static Graph cycle(int n);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    // Sorted, normalized (u < v) edge list.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    bool has_edge(int u, int v) const;

    bool has_names() const { return !names_.empty(); }
    const std::string& name(int v) const;
    const std::vector<std::string>& names() const { return names_; }

    bool has_labels() const { return !labels_.empty(); }
    int label(int v) const;
    const std::vector<int>& labels() const { return labels_; }
    int max_label() const;

    int degree(int v) const;
    std::vector<int> degrees() const;
    // Degree if regular, nullopt otherwise.
    std::optional<int> regular_degree() const;

    // One adjacency bitmask word per vertex; requires n <= 64.
    std::vector<std::uint64_t> adjacency_masks() const;

    Graph with_labels(std::vector<int> labels) const;
    Graph without_labels() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::string> names_;
    std::vector<int> labels_;
};

// |E(S)|: edges with both endpoints in s.
int induced_edge_count(const Graph& g, const VertexSet& s);
// |[S,S_bar]|: edges with exactly one endpoint in s.
int cut_size(const Graph& g, const VertexSet& s);

// Vertices of g2 are shifted by g1's count.  Names survive, optionally
// prefixed for provenance.
Graph disjoint_union(const Graph& g1, const Graph& g2,
                     const std::string& prefix1 = "", const std::string& prefix2 = "");

// Quotient by the equivalence closure of the given pairs.  Parallel edges
// merge; an identification that creates a self-loop is a ConstructionError.
// Also returns the old-vertex -> new-vertex map.
std::pair<Graph, std::vector<int>> identify_vertices(
    const Graph& g, const std::vector<std::pair<int, int>>& pairs);

// One new pendant neighbor per vertex; doubles the vertex count.
Graph pendant_extension(const Graph& g);

// Subgraph induced by `vertices`, renumbered in the given order.
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

// Connected components as vertex lists.
std::vector<std::vector<int>> connected_components(const Graph& g);

// Two-coloring of one component (side lists), nullopt if odd cycle found.
std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition_of_component(
    const Graph& g, const std::vector<int>& component);

}  // namespace ising
