#pragma once

#include <map>
#include <vector>

#include "ising/kexpr.hpp"
#include "ising/poly.hpp"

namespace ising {

// Sparse coefficient table of the labeled polynomial: maps each exponent
// triple (a-bar over colors, b-bar and c-bar over color pairs) to its
// big-integer coefficient.  Color populations d_i ride along because the
// edge-completion step needs the complement counts.
struct CoeffTable {
    int k = 0;
    std::vector<int> color_counts;           // d_i, 1-based colors at i-1
    std::map<std::vector<int>, Int> entries;  // key = [a | b upper-tri | c upper-tri]

    int pair_slots() const { return k * (k + 1) / 2; }
    int key_size() const { return k + 2 * pair_slots(); }

    int vertex_total() const;  // sum of color_counts
    // Every stored triple valid: sum a_i <= n, all b/c entries <= m, none zero.
    bool triples_valid(int n, int m) const;

    // The labeled polynomial, variables y_1..y_k then x then z pair blocks
    // (same order as the brute-force labeled enumeration).
    Poly to_poly() const;
};

// Dynamic program over the expression tree; the result projects exactly to
// the trivariate polynomial of the evaluated graph.
CoeffTable dp_z_labeled(const KExpr& e);

// Substitute every x/y/z family member by one variable each: (x, y, z).
Poly project_trivariate(const CoeffTable& table);

}  // namespace ising
