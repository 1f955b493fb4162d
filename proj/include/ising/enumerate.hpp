#pragma once

#include "ising/graph.hpp"
#include "ising/poly.hpp"

namespace ising {

// Default enumeration caps; every entry point takes an override.
inline constexpr int kSymbolicCap = 22;
inline constexpr int kNumericCap = 30;

// The constrained sums come in two y-exponent conventions: one counts the
// whole iteration subset S, the other leaves the forced vertices B out of
// the product.  Each call site pins the convention it needs.
enum class YConvention {
    IncludeConstrained,  // weight y^|S|
    ExcludeConstrained,  // weight y^|S \ B|
};

// Sum over all S of x^|E(S)| y^|S| z^|E(S_bar)|, variables (x, y, z).
Poly z_trivariate(const Graph& g, int cap = kSymbolicCap);

// The specialization x = z = t, variables (t, y).
Poly z_bivariate(const Graph& g, int cap = kSymbolicCap);

// Sum over B <= S <= V\C in variables (t, y).  B and C must be disjoint.
Poly z_constrained(const Graph& g, const VertexSet& B, const VertexSet& C,
                   YConvention conv = YConvention::IncludeConstrained,
                   int cap = kSymbolicCap);

// Same constrained sum without collapsing x and z, variables (x, y, z).
Poly z_constrained_trivariate(const Graph& g, const VertexSet& B, const VertexSet& C,
                              YConvention conv = YConvention::IncludeConstrained,
                              int cap = kSymbolicCap);

// Fully multivariate constrained sum: one variable per edge and per vertex.
// Variable order: x_e over sorted edges, then y_u over vertices, then z_e.
// The y-product runs over A \ B.
Poly z_multivariate(const Graph& g, const VertexSet& B, const VertexSet& C, int cap = 16);

// Canonical variable index of the color pair {i,j} (1-based, i <= j) in the
// upper-triangle row-major layout used by the labeled polynomial.
int color_pair_index(int k, int i, int j);

// Labeled refinement for a colored graph: variables y_1..y_k, then
// x_{1,1}..x_{k,k} (upper triangle), then z likewise.
Poly z_labeled(const Graph& g, int cap = 20);

// Numeric evaluation of the trivariate sum without building the polynomial;
// enumerates subsets in parallel chunks with incremental edge counting.
// threads = 0 picks ISING_THREADS or the hardware count.
Rat z_eval_point(const Graph& g, const Rat& x, const Rat& y, const Rat& z,
                 int cap = kNumericCap, int threads = 0);

// ------------------------------------------------------------------------
// Independent combinatorial counters, used as test oracles only.

Int count_perfect_matchings(const Graph& g);
// (maximum cut size, number of subsets S attaining it).
std::pair<int, Int> count_max_cuts(const Graph& g);
Poly independent_set_polynomial(const Graph& g);  // univariate in y
Int vertex_cover_count(const Graph& g);

}  // namespace ising
