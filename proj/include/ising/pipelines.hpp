#pragma once

#include <atomic>
#include <functional>
#include <optional>
#include <vector>

#include "ising/closed_forms.hpp"
#include "ising/gadgets.hpp"
#include "ising/graph.hpp"
#include "ising/poly.hpp"

namespace ising {

// A point evaluation of Z handed to a reduction as a black box.  Tracks how
// often and how large it was queried; the callable must be pure.
class EvalOracle {
public:
    explicit EvalOracle(std::function<Rat(const Graph&)> fn) : fn_(std::move(fn)) {}

    // Brute-force enumeration at (gamma, delta), i.e. x = z = gamma.
    static EvalOracle brute_force(const Rat& gamma, const Rat& delta, int cap = 30);
    static EvalOracle brute_force_trivariate(const Rat& gamma, const Rat& delta,
                                             const Rat& epsilon, int cap = 30);

    Rat operator()(const Graph& g) const;

    long call_count() const { return calls_.load(); }
    int max_queried_vertices() const { return max_vertices_.load(); }

private:
    std::function<Rat(const Graph&)> fn_;
    mutable std::atomic<long> calls_{0};
    mutable std::atomic<int> max_vertices_{0};
};

// ------------------------------------------------------------------------
// Families of gadget parameter sets with equal element sums.

struct HFamily {
    std::vector<std::vector<int>> sets;
    long sigma = 0;  // the shared sum
    int qprime = 0, m0 = 0, delta = 0;
    long q = 0;
    int ell = 0;          // floor(log2 q)
    int ceil_log_q = 0;   // ceil(log2 q)
};

struct HFamilyCertificate {
    bool distinct_sets = false;
    bool equal_cardinality = false;
    bool equal_sigma = false;
    bool elements_even = false;
    bool elements_in_range = false;
    bool gap_ok = false;
    bool sigma_bounded = false;

    bool all() const {
        return distinct_sets && equal_cardinality && equal_sigma && elements_even &&
               elements_in_range && gap_ok && sigma_bounded;
    }
};

// Digit-indexed candidate sets {m0 + delta ceil(log q) (2j + bit_j(i))},
// filtered to a maximum subfamily of equal element sum.  m0 and delta must
// be positive even integers, qprime >= 2.
HFamily build_h_family(int qprime, int m0, int delta);

// Recomputes the structural certificate.  sigma_bound_constant = 0 uses
// 5*m0 + 100*delta, which dominates the construction for all parameters.
HFamilyCertificate certify_h_family(const HFamily& f, long sigma_bound_constant = 0);

// ------------------------------------------------------------------------
// Interpolation stages.

struct InterpolationReport {
    std::vector<std::vector<int>> families;
    std::vector<Rat> nodes;
    std::vector<Rat> prefactors;
    std::vector<int> query_sizes;
};

// Recovers Z(g; gamma, y) from oracle values at (gamma, delta) on the
// rooted products S_H(g).  Needs at least n_g + 1 families whose shifted
// y-arguments are pairwise distinct (checked, as are the prefactors).
Poly interpolate_y(const EvalOracle& oracle, const Rat& gamma, const Rat& delta,
                   const Graph& g, const std::vector<std::vector<int>>& families,
                   InterpolationReport* report = nullptr);

// Recovers Z(g; t, 1) from precomputed values Z(g (x) H_k; gamma, 1), one
// per family.  Nodes are the shifted t-arguments f_t; distinctness and
// nonzero prefactors are runtime-checked.
Poly interpolate_t(const std::vector<Rat>& values_at_y1,
                   const std::vector<std::vector<int>>& families, const Rat& gamma,
                   const Graph& g, InterpolationReport* report = nullptr);

// Z(g; gamma, 1) via the pendant identity, querying an oracle at
// (gamma, -1): queries g with one pendant per vertex, scales by
// (gamma-1)^{-n}.
Rat minus_one_transform(const EvalOracle& oracle_at_minus1, const Rat& gamma,
                        const Graph& g);

// Z(g; gamma, -delta^2) via the single-star rooted product, querying an
// oracle at (gamma, delta) with gamma = -delta.
Rat shift_gamma_eq_minus_delta(const EvalOracle& oracle, const Rat& gamma,
                               const Rat& delta, const Graph& g);

// Closed-form evaluation on the polynomial-time locus:
//   delta = 0, gamma = 1, gamma = 0 (bipartition product), gamma = -1
//   (rank-one product over vertex degrees, computed in Gaussian rationals).
// Anywhere else is a UsageError.
Rat special_case_eval(const Graph& g, const Rat& gamma, const Rat& delta);

// Maximum cut size and the number of subsets attaining it, extracted from
// the t-exponent range of Z(g; t, 1).
std::pair<int, Int> max_cut_count(const Graph& g, int cap = 30);

// ------------------------------------------------------------------------
// Grid interpolation for the trivariate polynomial on regular graphs.

struct GridReport {
    std::vector<int> ls, qs;
    std::vector<Rat> t_nodes;
    std::vector<std::vector<Rat>> y_nodes;  // per chosen l
    long oracle_calls = 0;
    int max_query_vertices = 0;
};

// Recovers Z(g; t, y) for a regular graph from oracle values at
// (gamma, delta, epsilon) on the thickened graphs R^{l,q}(g).  The point
// must pass all six admissibility conditions; thickening levels are
// certified (nonzero prefactor, usable y-node spread) before use.
Poly grid_interpolate_trivariate(const EvalOracle& oracle, const Rat& gamma,
                                 const Rat& delta, const Rat& epsilon, const Graph& g,
                                 int l_lo, int l_hi, int q_lo, int q_hi,
                                 GridReport* report = nullptr);

// ------------------------------------------------------------------------
// Runtime-certified family selection for desk-scale pipelines: smallest
// candidates first, keeping only those whose node is fresh, whose
// prefactor is nonzero and whose oracle query fits the vertex budget.

std::vector<std::vector<int>> select_y_families(const Rat& gamma, const Rat& delta,
                                                const Graph& g, int max_query_vertices,
                                                int count);
std::vector<std::vector<int>> select_t_families(const Rat& gamma, const Graph& g,
                                                int max_query_vertices,
                                                bool pendant_doubling, int count);

}  // namespace ising
