#include "ising/pipelines.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "ising/enumerate.hpp"
#include "ising/quadext.hpp"

namespace ising {

EvalOracle EvalOracle::brute_force(const Rat& gamma, const Rat& delta, int cap) {
    return EvalOracle(
        [gamma, delta, cap](const Graph& g) { return z_eval_point(g, gamma, delta, gamma, cap); });
}

EvalOracle EvalOracle::brute_force_trivariate(const Rat& gamma, const Rat& delta,
                                              const Rat& epsilon, int cap) {
    return EvalOracle(
        [gamma, delta, epsilon, cap](const Graph& g) { return z_eval_point(g, gamma, delta, epsilon, cap); });
}

Rat EvalOracle::operator()(const Graph& g) const {
    calls_.fetch_add(1);
    int seen = max_vertices_.load();
    while (g.vertex_count() > seen &&
           !max_vertices_.compare_exchange_weak(seen, g.vertex_count())) {
    }
    return fn_(g);
}

// ------------------------------------------------------------------- family

namespace {
int floor_log2(long x) {
    return static_cast<int>(std::bit_width(static_cast<unsigned long>(x))) - 1;
}
int ceil_log2(long x) {
    return x <= 1 ? 0 : static_cast<int>(std::bit_width(static_cast<unsigned long>(x - 1)));
}
}  // namespace

HFamily build_h_family(int qprime, int m0, int delta) {
    if (qprime < 2) throw UsageError("h-family needs qprime >= 2");
    if (m0 < 2 || m0 % 2 != 0) throw UsageError("m0 must be a positive even integer");
    if (delta < 2 || delta % 2 != 0) throw UsageError("delta must be a positive even integer");

    const int lg = std::max(1, ceil_log2(qprime));
    const long q = static_cast<long>(qprime) * lg * lg * lg;
    const int ell = floor_log2(q);
    const int L = ceil_log2(q);
    const int step = delta * std::max(1, L);

    // Candidates indexed by their binary digits; the element sum depends on
    // the index only through its popcount, so the largest equal-sum
    // subfamily is the largest popcount class.
    std::map<int, std::vector<long>> by_popcount;
    for (long i = 0; i <= q; ++i)
        by_popcount[std::popcount(static_cast<unsigned long>(i))].push_back(i);
    int best = -1;
    for (const auto& [pc, members] : by_popcount)
        if (best == -1 || members.size() > by_popcount[best].size()) best = pc;

    HFamily f;
    f.qprime = qprime;
    f.m0 = m0;
    f.delta = delta;
    f.q = q;
    f.ell = ell;
    f.ceil_log_q = L;
    for (long i : by_popcount[best]) {
        std::vector<int> set;
        for (int j = 0; j <= ell; ++j) {
            const int bit = static_cast<int>((static_cast<unsigned long>(i) >> j) & 1u);
            set.push_back(m0 + step * (2 * j + bit));
        }
        f.sets.push_back(std::move(set));
    }
    f.sigma = 0;
    for (int h : f.sets.front()) f.sigma += h;
    return f;
}

HFamilyCertificate certify_h_family(const HFamily& f, long sigma_bound_constant) {
    HFamilyCertificate c;
    if (f.sets.empty()) return c;

    std::set<std::vector<int>> uniq(f.sets.begin(), f.sets.end());
    c.distinct_sets = uniq.size() == f.sets.size();

    const size_t cardinality = f.sets.front().size();
    c.equal_cardinality = true;
    c.equal_sigma = true;
    c.elements_even = true;
    c.elements_in_range = true;
    const int step = f.delta * std::max(1, f.ceil_log_q);
    const long max_element = f.m0 + static_cast<long>(step) * (2L * f.ell + 1);
    for (const auto& set : f.sets) {
        if (set.size() != cardinality) c.equal_cardinality = false;
        long sigma = 0;
        for (int h : set) {
            sigma += h;
            if (h % 2 != 0) c.elements_even = false;
            if (h < f.m0 || h > max_element) c.elements_in_range = false;
        }
        if (sigma != f.sigma) c.equal_sigma = false;
    }

    // Distinct values across the whole family differ by at least one step.
    std::set<int> values;
    for (const auto& set : f.sets) values.insert(set.begin(), set.end());
    c.gap_ok = true;
    int prev = -1;
    for (int v : values) {
        if (prev != -1 && v - prev < step) c.gap_ok = false;
        prev = v;
    }

    if (sigma_bound_constant <= 0)
        sigma_bound_constant = 5L * f.m0 + 100L * f.delta;
    const long lg = std::max(1, ceil_log2(f.qprime));
    c.sigma_bounded = f.sigma <= sigma_bound_constant * lg * lg * lg;
    return c;
}

// ------------------------------------------------------------- y / t stages

namespace {
void require_distinct(const std::vector<Rat>& nodes, const char* what) {
    std::set<Rat> seen;
    for (const auto& n : nodes)
        if (!seen.insert(n).second)
            throw InterpolationError(std::string(what) + ": node collision at " + to_string(n));
}
}  // namespace

Poly interpolate_y(const EvalOracle& oracle, const Rat& gamma, const Rat& delta,
                   const Graph& g, const std::vector<std::vector<int>>& families,
                   InterpolationReport* report) {
    auto bad = [](const Rat& v) { return v == 0 || v == 1 || v == -1; };
    if (bad(gamma) || bad(delta) || gamma == -delta)
        throw UsageError("inadmissible point for the y-stage: needs gamma, delta outside "
                         "{-1,0,1} and gamma != -delta");
    const int n = g.vertex_count();
    if (static_cast<int>(families.size()) < n + 1)
        throw UsageError("y-stage needs at least n+1 families");

    std::vector<Rat> nodes, prefactors;
    std::vector<std::pair<Rat, Rat>> points;
    std::vector<int> query_sizes;
    for (const auto& H : families) {
        const Rat node = g_y_H(gamma, delta, H);
        const Rat pref = g_p_H(gamma, delta, H, n);
        if (pref == 0) throw DegeneratePointError("zero rooted-product prefactor");
        const Graph query = build_S_H_of(g, H);
        const Rat value = oracle(query) / pref;
        nodes.push_back(node);
        prefactors.push_back(pref);
        points.emplace_back(node, value);
        query_sizes.push_back(query.vertex_count());
    }
    require_distinct(nodes, "y-stage");
    if (report) *report = {families, nodes, prefactors, query_sizes};
    return lagrange_interpolate(points, n);
}

Poly interpolate_t(const std::vector<Rat>& values_at_y1,
                   const std::vector<std::vector<int>>& families, const Rat& gamma,
                   const Graph& g, InterpolationReport* report) {
    if (values_at_y1.size() != families.size())
        throw UsageError("one value per family required");
    const int m = g.edge_count();
    if (static_cast<int>(families.size()) < m + 1)
        throw UsageError("t-stage needs at least m+1 families");

    const ReductionConstants rc = ReductionConstants::at_gamma(gamma);
    std::vector<Rat> nodes, prefactors;
    std::vector<std::pair<Rat, Rat>> points;
    for (size_t i = 0; i < families.size(); ++i) {
        const Rat node = f_t_H(rc, families[i]);
        const Rat pref = f_p_H(gamma, families[i], m);
        if (pref == 0) throw DegeneratePointError("zero edge-gadget prefactor");
        nodes.push_back(node);
        prefactors.push_back(pref);
        points.emplace_back(node, values_at_y1[i] / pref);
    }
    require_distinct(nodes, "t-stage");
    if (report) *report = {families, nodes, prefactors, {}};
    return lagrange_interpolate(points, m);
}

Rat minus_one_transform(const EvalOracle& oracle_at_minus1, const Rat& gamma,
                        const Graph& g) {
    if (gamma == 1) throw UsageError("pendant identity undefined at gamma = 1");
    const Rat scale = rat_pow(gamma - 1, -g.vertex_count());
    return scale * oracle_at_minus1(build_pendant(g));
}

Rat shift_gamma_eq_minus_delta(const EvalOracle& oracle, const Rat& gamma,
                               const Rat& delta, const Graph& g) {
    if (delta == 0 || delta == 1 || delta == -1)
        throw UsageError("shift needs delta outside {-1,0,1}");
    if (gamma != -delta) throw UsageError("shift only applies on the gamma = -delta locus");
    const Rat pref = rat_pow(delta * (1 - delta * delta), g.vertex_count());
    return oracle(build_S_H_of(g, {1})) / pref;
}

Rat special_case_eval(const Graph& g, const Rat& gamma, const Rat& delta) {
    const int n = g.vertex_count();
    if (delta == 0) {
        // Only S = empty survives, leaving every edge on the complement side.
        return rat_pow(gamma, g.edge_count());
    }
    if (gamma == 1) return rat_pow(1 + delta, n);
    if (gamma == 0) {
        // Admissible subsets are exactly the proper two-colorings.
        Rat product = 1;
        for (const auto& comp : connected_components(g)) {
            const auto parts = bipartition_of_component(g, comp);
            if (!parts) return Rat(0);
            product *= rat_pow(delta, static_cast<long>(parts->first.size())) +
                       rat_pow(delta, static_cast<long>(parts->second.size()));
        }
        return product;
    }
    if (gamma == -1) {
        // Rank-one edge weights factor through vertex degrees: the edge
        // matrix is the outer square of (i, -i).
        GaussRat product(Rat(1), Rat(0));
        const GaussRat i = GaussRat::i();
        const GaussRat minus_i(Rat(0), Rat(-1));
        for (int v = 0; v < n; ++v) {
            const unsigned d = static_cast<unsigned>(g.degree(v));
            product = product * (GaussRat(delta, Rat(0)) * i.pow(d) + minus_i.pow(d));
        }
        return product.real_part();
    }
    throw UsageError("point outside the polynomial-time locus: gamma not in {-1,0,1} "
                     "and delta != 0");
}

std::pair<int, Int> max_cut_count(const Graph& g, int cap) {
    // Z(g; t, 1) written through the cut identity: the exponent of t on a
    // subset S is m - cut(S), so the smallest exponent marks the maximum cut.
    const Poly z_t1 =
        z_bivariate(g, cap).substitute(1, Poly::constant(2, Rat(1))).remap_vars(1, {0, -1});
    int min_exp = -1;
    for (const auto& [e, c] : z_t1.terms())
        if (min_exp < 0 || e[0] < min_exp) min_exp = e[0];
    if (min_exp < 0) throw ConsistencyError("empty bivariate polynomial");
    const Rat count = z_t1.coefficient({min_exp});
    return {g.edge_count() - min_exp, count.get_num()};
}

// --------------------------------------------------------------------- grid

Poly grid_interpolate_trivariate(const EvalOracle& oracle, const Rat& gamma,
                                 const Rat& delta, const Rat& epsilon, const Graph& g,
                                 int l_lo, int l_hi, int q_lo, int q_hi,
                                 GridReport* report) {
    if (const auto violation = grid_point_violation(gamma, delta, epsilon))
        throw DegeneratePointError(std::string("inadmissible grid point: ") +
                                   grid_condition_name(*violation));
    const auto d = g.regular_degree();
    if (!d) throw UsageError("grid interpolation needs a regular graph");
    const int n = g.vertex_count();
    const int m = g.edge_count();
    if (l_lo < 1 || l_lo > l_hi || q_lo < 1 || q_lo > q_hi) throw UsageError("bad l/q ranges");
    if (q_hi - q_lo < n) throw UsageError("q range too small for the y-degree bound");

    std::vector<int> qs(n + 1);
    for (int i = 0; i <= n; ++i) qs[i] = q_lo + i;

    // Certify thickening levels: prefactor nonzero and the q-powered node
    // base outside {-1,0,1} so the y-nodes spread.
    std::vector<int> ls;
    for (int l = l_lo; l <= l_hi && static_cast<int>(ls.size()) < m + 1; ++l) {
        try {
            const EConstants ec = E_constants(gamma, delta, epsilon, l);
            if (ec.e_y2_l == 0 || ec.e_y2_l == 1 || ec.e_y2_l == -1) continue;
            const RConstants rc = f_R_constants(gamma, delta, epsilon, l, 1, *d, n, m);
            if (rc.f_p == 0) continue;
        } catch (const DegeneratePointError&) {
            continue;
        }
        ls.push_back(l);
    }
    if (static_cast<int>(ls.size()) < m + 1)
        throw DegeneratePointError("could not certify enough thickening levels in range");

    std::vector<Rat> t_nodes;
    std::vector<std::vector<Rat>> all_y_nodes;
    // Per certified l, the y-interpolated slice is the cut-form sum
    // sum_S f_t(l)^{cut(S)} f_y^{|S|}; its y^j coefficient is the reversed
    // coefficient polynomial of Z evaluated at f_t(l).
    std::vector<Poly> slices;
    for (int l : ls) {
        std::vector<std::pair<Rat, Rat>> points;
        std::vector<Rat> y_nodes;
        Rat t_node;
        for (int q : qs) {
            const RConstants rc = f_R_constants(gamma, delta, epsilon, l, q, *d, n, m);
            if (rc.f_p == 0) throw DegeneratePointError("zero thickening prefactor");
            const Rat value = oracle(build_R(g, l, q)) / rc.f_p;
            points.emplace_back(rc.f_y, value);
            y_nodes.push_back(rc.f_y);
            t_node = rc.f_t;
        }
        require_distinct(y_nodes, "grid y-stage");
        slices.push_back(lagrange_interpolate(points, n));
        t_nodes.push_back(t_node);
        all_y_nodes.push_back(std::move(y_nodes));
    }
    require_distinct(t_nodes, "grid t-stage");

    Poly result(2);
    for (int j = 0; j <= n; ++j) {
        std::vector<std::pair<Rat, Rat>> points;
        for (size_t i = 0; i < ls.size(); ++i)
            points.emplace_back(t_nodes[i], slices[i].coefficient({j}));
        // Degree-m fit of t^m c_j(1/t); undo the reversal when assembling.
        const Poly c_j_reversed = lagrange_interpolate(points, m);
        for (const auto& [e, coeff] : c_j_reversed.terms())
            result.add_term({m - e[0], j}, coeff);
    }
    if (report) {
        report->ls = ls;
        report->qs = qs;
        report->t_nodes = t_nodes;
        report->y_nodes = all_y_nodes;
        report->oracle_calls = oracle.call_count();
        report->max_query_vertices = oracle.max_queried_vertices();
    }
    return result;
}

// ---------------------------------------------------------------- selectors

namespace {
// Small parameter sets ordered by gadget weight sum(h+1), then content.
std::vector<std::vector<int>> candidate_pool() {
    std::vector<std::vector<int>> pool{{}};
    std::vector<std::pair<long, std::vector<int>>> weighted;
    constexpr int kMax = 9;
    for (unsigned bits = 1; bits < (1u << kMax); ++bits) {
        if (std::popcount(bits) > 3) continue;
        std::vector<int> set;
        long weight = 0;
        for (int h = 1; h <= kMax; ++h)
            if ((bits >> (h - 1)) & 1u) {
                set.push_back(h);
                weight += h + 1;
            }
        weighted.emplace_back(weight, std::move(set));
    }
    std::sort(weighted.begin(), weighted.end());
    for (auto& [w, set] : weighted) pool.push_back(std::move(set));
    return pool;
}
}  // namespace

std::vector<std::vector<int>> select_y_families(const Rat& gamma, const Rat& delta,
                                                const Graph& g, int max_query_vertices,
                                                int count) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> chosen;
    std::set<Rat> nodes;
    for (const auto& H : candidate_pool()) {
        if (static_cast<int>(chosen.size()) == count) break;
        long weight = 1;
        for (int h : H) weight += h + 1;
        if (static_cast<long>(n) * weight > max_query_vertices) continue;
        try {
            const Rat node = g_y_H(gamma, delta, H);
            if (g_p_H(gamma, delta, H, n) == 0) continue;
            if (!nodes.insert(node).second) continue;
        } catch (const DegeneratePointError&) {
            continue;
        }
        chosen.push_back(H);
    }
    if (static_cast<int>(chosen.size()) < count)
        throw DegeneratePointError("could not certify enough y-stage families under the budget");
    return chosen;
}

std::vector<std::vector<int>> select_t_families(const Rat& gamma, const Graph& g,
                                                int max_query_vertices,
                                                bool pendant_doubling, int count) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    const ReductionConstants rc = ReductionConstants::at_gamma(gamma);
    std::vector<std::vector<int>> chosen;
    std::set<Rat> nodes;
    for (const auto& H : candidate_pool()) {
        if (static_cast<int>(chosen.size()) == count) break;
        long weight = 0;
        for (int h : H) weight += h + 1;
        long size = n + static_cast<long>(m) * weight;
        if (pendant_doubling) size *= 2;
        if (size > max_query_vertices) continue;
        try {
            const Rat node = f_t_H(rc, H);
            if (f_p_H(gamma, H, m) == 0) continue;
            if (!nodes.insert(node).second) continue;
        } catch (const DegeneratePointError&) {
            continue;
        }
        chosen.push_back(H);
    }
    if (static_cast<int>(chosen.size()) < count)
        throw DegeneratePointError("could not certify enough t-stage families under the budget");
    return chosen;
}

}  // namespace ising
