#pragma once

#include <map>
#include <string>
#include <vector>

#include "ising/graph.hpp"

namespace ising {

// A constructed graph together with its distinguished vertices.
struct GadgetGraph {
    Graph graph;
    std::map<std::string, int> marks;

    int mark(const std::string& name) const;
};

// Ladder gadget: path hd0-..-hdh plus two apexes tr1, tr2 adjacent to every
// path vertex.  Marks tr1, tr2 and hd (the newest path endpoint).
// n = h+3, m = 3h+2; the h = 0 case degenerates to the path tr1-hd-tr2.
GadgetGraph build_L(int h);

// Apex-identified union of the ladders L_h over h in H.  Marks tr1, tr2.
// n = 2 + sum of (h+1).  An empty H leaves two isolated marked vertices.
GadgetGraph build_Phi(const std::vector<int>& H);

// Every edge of g replaced by a fresh Phi_H copy glued at the apexes
// (tr1 onto the smaller endpoint id); the original edges disappear.
Graph build_otimes(const Graph& g, const std::vector<int>& H);

// One pendant neighbor per vertex (alias of pendant_extension).
Graph build_pendant(const Graph& g);

// Star-of-stars: a center joined to the centers of stars S_h, h in H.
// Marks cent.  n = 1 + sum of (h+1).
GadgetGraph build_S_H(const std::vector<int>& H);

// Rooted product of g with (S_H, cent): every vertex of g becomes the
// center of its own S_H copy.  n = n_g * (1 + sum of (h+1)).
Graph build_S_H_of(const Graph& g, const std::vector<int>& H);

// Simple thickening: every edge replaced by 4l internally disjoint 2-paths.
// Layout: original vertices first, then the 4l midpoints of edge j at
// base_n + 4l*j ... base_n + 4l*(j+1) - 1.
struct SThGraph {
    Graph graph = Graph::empty(0);
    int l = 0;
    int base_n = 0;
    std::vector<std::pair<int, int>> base_edges;

    // Induced subgraph on the 4l midpoints of base edge j plus its two
    // endpoints; marks u, w (endpoints) and m1..m4l.
    GadgetGraph n_plus(int edge_index) const;
};
SThGraph build_STh(const Graph& g, int l);

// Attach 2q pendant vertices to every vertex of g, then thicken.
// n = n_g (1 + 2q(1+4l)) + 4l m_g, m = 8l m_g + 16l q n_g.
Graph build_R(const Graph& g, int l, int q);

// Validated copy of a gadget parameter set: positive, distinct, sorted.
std::vector<int> normalize_h_set(const std::vector<int>& H);

}  // namespace ising
