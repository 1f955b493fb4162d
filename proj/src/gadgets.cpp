#include "ising/gadgets.hpp"

#include <algorithm>
#include <set>

namespace ising {

int GadgetGraph::mark(const std::string& name) const {
    auto it = marks.find(name);
    if (it == marks.end()) throw UsageError("no mark named " + name);
    return it->second;
}

std::vector<int> normalize_h_set(const std::vector<int>& H) {
    std::vector<int> out = H;
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end())
        throw UsageError("H contains a repeated element");
    if (!out.empty() && out.front() < 1) throw UsageError("H elements must be positive");
    return out;
}

GadgetGraph build_L(int h) {
    if (h < 0) throw UsageError("L_h needs h >= 0");
    // 0..h: path; h+1, h+2: apexes.
    const int tr1 = h + 1, tr2 = h + 2;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> names;
    for (int i = 0; i < h; ++i) edges.emplace_back(i, i + 1);
    for (int i = 0; i <= h; ++i) {
        edges.emplace_back(i, tr1);
        edges.emplace_back(i, tr2);
        names.push_back("hd" + std::to_string(i));
    }
    names.push_back("tr1");
    names.push_back("tr2");
    GadgetGraph out{Graph(h + 3, std::move(edges), std::move(names)), {}};
    out.marks = {{"tr1", tr1}, {"tr2", tr2}, {"hd", h}};
    return out;
}

GadgetGraph build_Phi(const std::vector<int>& H_in) {
    const auto H = normalize_h_set(H_in);
    if (H.empty()) {
        GadgetGraph out{Graph(2, {}, {"tr1", "tr2"}), {}};
        out.marks = {{"tr1", 0}, {"tr2", 1}};
        return out;
    }
    // Apexes first, then the path vertices of each ladder.
    const int tr1 = 0, tr2 = 1;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> names{"tr1", "tr2"};
    int next = 2;
    for (int h : H) {
        const int start = next;
        for (int i = 0; i <= h; ++i) {
            if (i > 0) edges.emplace_back(start + i - 1, start + i);
            edges.emplace_back(tr1, start + i);
            edges.emplace_back(tr2, start + i);
            names.push_back("L" + std::to_string(h) + "/hd" + std::to_string(i));
        }
        next += h + 1;
    }
    GadgetGraph out{Graph(next, std::move(edges), std::move(names)), {}};
    out.marks = {{"tr1", tr1}, {"tr2", tr2}};
    return out;
}

Graph build_otimes(const Graph& g, const std::vector<int>& H_in) {
    const auto H = normalize_h_set(H_in);
    const GadgetGraph phi = build_Phi(H);
    const int phi_n = phi.graph.vertex_count();
    const int tr1 = phi.mark("tr1"), tr2 = phi.mark("tr2");

    const int n_g = g.vertex_count();
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> names;
    for (int v = 0; v < n_g; ++v)
        names.push_back(g.has_names() ? g.name(v) : "v" + std::to_string(v));

    int next = n_g;
    for (int e = 0; e < g.edge_count(); ++e) {
        // tr1 lands on the smaller endpoint id; the alignment is a free
        // choice, fixed for reproducibility.
        const auto& [u1, u2] = g.edges()[e];
        std::vector<int> where(phi_n, -1);
        where[tr1] = u1;
        where[tr2] = u2;
        for (int v = 0; v < phi_n; ++v) {
            if (where[v] != -1) continue;
            where[v] = next++;
            names.push_back("e" + std::to_string(e) + "/" + phi.graph.name(v));
        }
        for (const auto& [a, b] : phi.graph.edges()) edges.emplace_back(where[a], where[b]);
    }
    return Graph(next, std::move(edges), std::move(names));
}

Graph build_pendant(const Graph& g) { return pendant_extension(g); }

GadgetGraph build_S_H(const std::vector<int>& H_in) {
    const auto H = normalize_h_set(H_in);
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> names{"cent"};
    int next = 1;
    for (int h : H) {
        const int star_center = next++;
        names.push_back("S" + std::to_string(h) + "/cent");
        edges.emplace_back(0, star_center);
        for (int leaf = 0; leaf < h; ++leaf) {
            edges.emplace_back(star_center, next);
            names.push_back("S" + std::to_string(h) + "/leaf" + std::to_string(leaf));
            ++next;
        }
    }
    GadgetGraph out{Graph(next, std::move(edges), std::move(names)), {}};
    out.marks = {{"cent", 0}};
    return out;
}

Graph build_S_H_of(const Graph& g, const std::vector<int>& H_in) {
    const auto H = normalize_h_set(H_in);
    const GadgetGraph sh = build_S_H(H);
    const int sh_n = sh.graph.vertex_count();
    const int n_g = g.vertex_count();

    std::vector<std::pair<int, int>> edges = g.edges();
    std::vector<std::string> names;
    for (int v = 0; v < n_g; ++v)
        names.push_back(g.has_names() ? g.name(v) : "v" + std::to_string(v));

    int next = n_g;
    for (int v = 0; v < n_g; ++v) {
        // Vertex v plays the center of its own copy.
        std::vector<int> where(sh_n, -1);
        where[0] = v;
        for (int w = 1; w < sh_n; ++w) {
            where[w] = next++;
            names.push_back(names[v] + "/" + sh.graph.name(w));
        }
        for (const auto& [a, b] : sh.graph.edges()) edges.emplace_back(where[a], where[b]);
    }
    return Graph(next, std::move(edges), std::move(names));
}

namespace {
// Keeps the assembled sizes inside int range with headroom.
void check_output_size(long vertices) {
    if (vertices > 10'000'000) throw CapacityError("gadget output too large");
}
}  // namespace

SThGraph build_STh(const Graph& g, int l) {
    if (l < 1) throw UsageError("simple thickening needs l >= 1");
    check_output_size(g.vertex_count() + 4L * l * g.edge_count());
    const int n_g = g.vertex_count();
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> names;
    for (int v = 0; v < n_g; ++v)
        names.push_back(g.has_names() ? g.name(v) : "v" + std::to_string(v));

    int next = n_g;
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& [u, w] = g.edges()[e];
        for (int i = 1; i <= 4 * l; ++i) {
            edges.emplace_back(u, next);
            edges.emplace_back(w, next);
            names.push_back("e" + std::to_string(e) + "/m" + std::to_string(i));
            ++next;
        }
    }
    SThGraph out;
    out.graph = Graph(next, std::move(edges), std::move(names));
    out.l = l;
    out.base_n = n_g;
    out.base_edges = g.edges();
    return out;
}

GadgetGraph SThGraph::n_plus(int edge_index) const {
    if (edge_index < 0 || edge_index >= static_cast<int>(base_edges.size()))
        throw UsageError("edge index out of range");
    const auto& [u, w] = base_edges[edge_index];
    std::vector<int> verts{u, w};
    const int first_mid = base_n + 4 * l * edge_index;
    for (int i = 0; i < 4 * l; ++i) verts.push_back(first_mid + i);
    GadgetGraph out{induced_subgraph(graph, verts), {}};
    out.marks["u"] = 0;
    out.marks["w"] = 1;
    for (int i = 0; i < 4 * l; ++i) out.marks["m" + std::to_string(i + 1)] = 2 + i;
    return out;
}

Graph build_R(const Graph& g, int l, int q) {
    if (l < 1 || q < 1) throw UsageError("R^{l,q} needs l, q >= 1");
    check_output_size(g.vertex_count() * (1 + 2L * q * (1 + 4L * l)) +
                      4L * l * g.edge_count());
    const int n_g = g.vertex_count();
    // Attach 2q pendants to every vertex, then thicken everything.
    std::vector<std::pair<int, int>> edges = g.edges();
    std::vector<std::string> names;
    for (int v = 0; v < n_g; ++v)
        names.push_back(g.has_names() ? g.name(v) : "v" + std::to_string(v));
    int next = n_g;
    for (int v = 0; v < n_g; ++v)
        for (int i = 0; i < 2 * q; ++i) {
            edges.emplace_back(v, next);
            names.push_back(names[v] + "/p" + std::to_string(i));
            ++next;
        }
    Graph attached(next, std::move(edges), std::move(names));
    return build_STh(attached, l).graph;
}

}  // namespace ising
