#include "ising/enumerate.hpp"

#include <atomic>
#include <bit>
#include <cstdlib>
#include <thread>
#include <tuple>
#include <unordered_map>

namespace ising {

namespace {

struct MaskView {
    std::vector<std::uint64_t> adj;
    std::vector<int> deg;
};

MaskView masks_of(const Graph& g) {
    MaskView m;
    m.adj = g.adjacency_masks();
    m.deg.assign(g.vertex_count(), 0);
    for (int v = 0; v < g.vertex_count(); ++v) m.deg[v] = std::popcount(m.adj[v]);
    return m;
}

int edges_inside(const MaskView& m, std::uint64_t s) {
    int c = 0;
    for (int v = 0; v < static_cast<int>(m.adj.size()); ++v)
        if ((s >> v) & 1u) c += std::popcount(m.adj[v] & s);
    return c / 2;
}

// Visits every S with base <= S <= base u free via a Gray-code walk,
// maintaining |E(S)| and |E(S_bar)| incrementally.  visit(e_in, e_out, |S|).
template <typename Visit>
void walk_subsets(const Graph& g, std::uint64_t base, const std::vector<int>& free,
                  Visit&& visit) {
    const MaskView m = masks_of(g);
    std::uint64_t s = base;
    int e_in = edges_inside(m, s);
    int e_out = edges_inside(m, ~s);
    int size = std::popcount(s);
    visit(e_in, e_out, size);
    const std::uint64_t total = std::uint64_t{1} << free.size();
    for (std::uint64_t i = 1; i < total; ++i) {
        const int v = free[std::countr_zero(i)];
        const std::uint64_t bit = std::uint64_t{1} << v;
        const int k = std::popcount(m.adj[v] & s & ~bit);
        if (s & bit) {
            s &= ~bit;
            e_in -= k;
            e_out += m.deg[v] - k;
            --size;
        } else {
            s |= bit;
            e_in += k;
            e_out -= m.deg[v] - k;
            ++size;
        }
        visit(e_in, e_out, size);
    }
}

void check_cap(const Graph& g, int cap, const char* what) {
    if (g.vertex_count() > cap)
        throw CapacityError(std::string(what) + ": graph has " +
                            std::to_string(g.vertex_count()) + " vertices, cap is " +
                            std::to_string(cap));
    if (g.vertex_count() > 62) throw CapacityError(std::string(what) + ": cap above 62 unsupported");
}

std::vector<int> all_vertices(const Graph& g) {
    std::vector<int> v(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) v[i] = i;
    return v;
}

void check_constraint_sets(const Graph& g, const VertexSet& B, const VertexSet& C) {
    if (B.universe_size() != g.vertex_count() || C.universe_size() != g.vertex_count())
        throw UsageError("constraint sets over a different universe than the graph");
    if (B.intersects(C)) throw UsageError("constraint sets B and C overlap");
}

std::uint64_t mask_of(const VertexSet& s) {
    std::uint64_t m = 0;
    for (int v : s.to_vector()) m |= std::uint64_t{1} << v;
    return m;
}

}  // namespace

Poly z_trivariate(const Graph& g, int cap) {
    check_cap(g, cap, "z_trivariate");
    std::map<std::tuple<int, int, int>, std::uint64_t> counts;
    walk_subsets(g, 0, all_vertices(g),
                 [&](int e_in, int e_out, int size) { ++counts[{e_in, size, e_out}]; });
    Poly p(3);
    for (const auto& [key, c] : counts) {
        const auto& [e_in, size, e_out] = key;
        p.add_term({e_in, size, e_out}, Rat(Int(c)));
    }
    return p;
}

Poly z_bivariate(const Graph& g, int cap) {
    check_cap(g, cap, "z_bivariate");
    std::map<std::pair<int, int>, std::uint64_t> counts;
    walk_subsets(g, 0, all_vertices(g),
                 [&](int e_in, int e_out, int size) { ++counts[{e_in + e_out, size}]; });
    Poly p(2);
    for (const auto& [key, c] : counts) p.add_term({key.first, key.second}, Rat(Int(c)));
    return p;
}

namespace {
Poly constrained_impl(const Graph& g, const VertexSet& B, const VertexSet& C,
                      YConvention conv, int cap, bool trivariate, const char* what) {
    check_cap(g, cap, what);
    check_constraint_sets(g, B, C);
    std::vector<int> free;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!B.test(v) && !C.test(v)) free.push_back(v);
    const int y_shift = conv == YConvention::ExcludeConstrained ? B.count() : 0;

    std::map<std::tuple<int, int, int>, std::uint64_t> counts;
    walk_subsets(g, mask_of(B), free,
                 [&](int e_in, int e_out, int size) { ++counts[{e_in, size, e_out}]; });
    Poly p(trivariate ? 3 : 2);
    for (const auto& [key, c] : counts) {
        const auto& [e_in, size, e_out] = key;
        if (trivariate)
            p.add_term({e_in, size - y_shift, e_out}, Rat(Int(c)));
        else
            p.add_term({e_in + e_out, size - y_shift}, Rat(Int(c)));
    }
    return p;
}
}  // namespace

Poly z_constrained(const Graph& g, const VertexSet& B, const VertexSet& C,
                   YConvention conv, int cap) {
    return constrained_impl(g, B, C, conv, cap, false, "z_constrained");
}

Poly z_constrained_trivariate(const Graph& g, const VertexSet& B, const VertexSet& C,
                              YConvention conv, int cap) {
    return constrained_impl(g, B, C, conv, cap, true, "z_constrained_trivariate");
}

Poly z_multivariate(const Graph& g, const VertexSet& B, const VertexSet& C, int cap) {
    check_cap(g, cap, "z_multivariate");
    check_constraint_sets(g, B, C);
    const int n = g.vertex_count();
    const int m = g.edge_count();
    const int arity = 2 * m + n;

    std::vector<int> free;
    for (int v = 0; v < n; ++v)
        if (!B.test(v) && !C.test(v)) free.push_back(v);
    const std::uint64_t base = mask_of(B);

    Poly p(arity);
    const std::uint64_t total = std::uint64_t{1} << free.size();
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        std::uint64_t a = base;
        for (size_t j = 0; j < free.size(); ++j)
            if ((bits >> j) & 1u) a |= std::uint64_t{1} << free[j];
        std::vector<int> exps(arity, 0);
        for (int e = 0; e < m; ++e) {
            const auto& [u, v] = g.edges()[e];
            const bool ui = (a >> u) & 1u, vi = (a >> v) & 1u;
            if (ui && vi) exps[e] = 1;                 // x_e
            else if (!ui && !vi) exps[m + n + e] = 1;  // z_e
        }
        for (int v = 0; v < n; ++v)
            if (((a >> v) & 1u) && !B.test(v)) exps[m + v] = 1;  // y_v over A \ B
        p.add_term(exps, Rat(1));
    }
    return p;
}

int color_pair_index(int k, int i, int j) {
    if (i < 1 || j < 1 || i > k || j > k) throw UsageError("color out of range");
    if (i > j) std::swap(i, j);
    return (i - 1) * k - (i - 1) * (i - 2) / 2 + (j - i);
}

Poly z_labeled(const Graph& g, int cap) {
    check_cap(g, cap, "z_labeled");
    if (!g.has_labels()) throw UsageError("z_labeled needs a labeled graph");
    const int k = g.max_label();
    const int pairs = k * (k + 1) / 2;
    const int arity = k + 2 * pairs;

    Poly p(arity);
    const int n = g.vertex_count();
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t s = 0; s < total; ++s) {
        std::vector<int> exps(arity, 0);
        for (int v = 0; v < n; ++v)
            if ((s >> v) & 1u) ++exps[g.label(v) - 1];
        for (const auto& [u, v] : g.edges()) {
            const bool ui = (s >> u) & 1u, vi = (s >> v) & 1u;
            if (ui == vi) {
                const int pi = color_pair_index(k, g.label(u), g.label(v));
                ++exps[k + (ui ? pi : pairs + pi)];
            }
        }
        p.add_term(exps, Rat(1));
    }
    return p;
}

namespace {

int env_thread_count() {
    if (const char* env = std::getenv("ISING_THREADS")) {
        const int t = std::atoi(env);
        if (t > 0) return t;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Per-chunk accumulation of subset counts by (e_in, |S|, e_out).  Dense when
// the index space is small, hashed otherwise.
struct CountTable {
    int m, n;
    bool dense;
    std::vector<std::uint64_t> cells;
    std::unordered_map<std::uint64_t, std::uint64_t> sparse;

    CountTable(int m_, int n_) : m(m_), n(n_) {
        const std::uint64_t size =
            static_cast<std::uint64_t>(m + 1) * (m + 1) * (n + 1);
        dense = size <= (std::uint64_t{1} << 23);
        if (dense) cells.assign(size, 0);
    }
    std::uint64_t key(int e_in, int size, int e_out) const {
        return (static_cast<std::uint64_t>(e_in) * (n + 1) + size) * (m + 1) + e_out;
    }
    void bump(int e_in, int size, int e_out) {
        if (dense)
            ++cells[key(e_in, size, e_out)];
        else
            ++sparse[key(e_in, size, e_out)];
    }
    void merge_into(std::map<std::tuple<int, int, int>, std::uint64_t>& out) const {
        if (dense) {
            for (int a = 0; a <= m; ++a)
                for (int s = 0; s <= n; ++s)
                    for (int c = 0; c <= m; ++c) {
                        const std::uint64_t v = cells[key(a, s, c)];
                        if (v) out[{a, s, c}] += v;
                    }
        } else {
            for (const auto& [k, v] : sparse) {
                const int c = static_cast<int>(k % (m + 1));
                const std::uint64_t rest = k / (m + 1);
                const int s = static_cast<int>(rest % (n + 1));
                const int a = static_cast<int>(rest / (n + 1));
                out[{a, s, c}] += v;
            }
        }
    }
};

}  // namespace

Rat z_eval_point(const Graph& g, const Rat& x, const Rat& y, const Rat& z,
                 int cap, int threads) {
    check_cap(g, cap, "z_eval_point");
    const int n = g.vertex_count();
    const int m = g.edge_count();
    if (threads <= 0) threads = env_thread_count();

    const MaskView mv = masks_of(g);
    const std::uint64_t total = std::uint64_t{1} << n;
    const int chunk_count =
        static_cast<int>(std::min<std::uint64_t>(total, 4ul * threads));

    std::vector<CountTable> tables;
    tables.reserve(chunk_count);
    for (int i = 0; i < chunk_count; ++i) tables.emplace_back(m, n);

    // Chunk c walks Gray codes of ranks [lo, hi); the rank-r subset is
    // r ^ (r >> 1) read as vertex bits.
    auto run_chunk = [&](int c) {
        const std::uint64_t lo = total * c / chunk_count;
        const std::uint64_t hi = total * (c + 1) / chunk_count;
        if (lo >= hi) return;
        std::uint64_t s = lo ^ (lo >> 1);
        int e_in = edges_inside(mv, s);
        int e_out = edges_inside(mv, ~s);
        int size = std::popcount(s);
        CountTable& t = tables[c];
        t.bump(e_in, size, e_out);
        for (std::uint64_t r = lo + 1; r < hi; ++r) {
            const int v = std::countr_zero(r);
            const std::uint64_t bit = std::uint64_t{1} << v;
            const int k = std::popcount(mv.adj[v] & s & ~bit);
            if (s & bit) {
                s &= ~bit;
                e_in -= k;
                e_out += mv.deg[v] - k;
                --size;
            } else {
                s |= bit;
                e_in += k;
                e_out -= mv.deg[v] - k;
                ++size;
            }
            t.bump(e_in, size, e_out);
        }
    };

    if (threads == 1 || chunk_count == 1) {
        for (int c = 0; c < chunk_count; ++c) run_chunk(c);
    } else {
        std::vector<std::thread> pool;
        std::atomic<int> next{0};
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (int c; (c = next.fetch_add(1)) < chunk_count;) run_chunk(c);
            });
        for (auto& t : pool) t.join();
    }

    std::map<std::tuple<int, int, int>, std::uint64_t> counts;
    for (const auto& t : tables) t.merge_into(counts);

    // Power caches keep this at O(m) big-rat multiplications per cell.
    std::vector<Rat> xp(m + 1), yp(n + 1), zp(m + 1);
    xp[0] = yp[0] = zp[0] = Rat(1);
    for (int i = 1; i <= m; ++i) xp[i] = xp[i - 1] * x;
    for (int i = 1; i <= n; ++i) yp[i] = yp[i - 1] * y;
    for (int i = 1; i <= m; ++i) zp[i] = zp[i - 1] * z;

    Rat sum(0);
    for (const auto& [key, c] : counts) {
        const auto& [a, s, b] = key;
        sum += Rat(Int(c)) * xp[a] * yp[s] * zp[b];
    }
    return sum;
}

Int count_perfect_matchings(const Graph& g) {
    const int n = g.vertex_count();
    if (n % 2 != 0) return 0;
    if (n == 0) return 1;
    if (n > 62) throw CapacityError("count_perfect_matchings: n > 62");
    const auto adj = g.adjacency_masks();
    std::unordered_map<std::uint64_t, Int> memo;
    const std::uint64_t all = (std::uint64_t{1} << n) - 1;

    auto rec = [&](auto&& self, std::uint64_t remaining) -> Int {
        if (remaining == 0) return 1;
        auto it = memo.find(remaining);
        if (it != memo.end()) return it->second;
        const int v = std::countr_zero(remaining);
        const std::uint64_t vbit = std::uint64_t{1} << v;
        Int total = 0;
        std::uint64_t mates = adj[v] & remaining & ~vbit;
        while (mates) {
            const int w = std::countr_zero(mates);
            mates &= mates - 1;
            total += self(self, remaining & ~vbit & ~(std::uint64_t{1} << w));
        }
        memo.emplace(remaining, total);
        return total;
    };
    return rec(rec, all);
}

std::pair<int, Int> count_max_cuts(const Graph& g) {
    check_cap(g, kNumericCap, "count_max_cuts");
    int best = 0;
    std::uint64_t count = 0;
    walk_subsets(g, 0, all_vertices(g), [&](int e_in, int e_out, int) {
        const int cut = g.edge_count() - e_in - e_out;
        if (cut > best) {
            best = cut;
            count = 1;
        } else if (cut == best) {
            ++count;
        }
    });
    return {best, Int(count)};
}

Poly independent_set_polynomial(const Graph& g) {
    check_cap(g, kNumericCap, "independent_set_polynomial");
    std::map<int, std::uint64_t> counts;
    walk_subsets(g, 0, all_vertices(g), [&](int e_in, int, int size) {
        if (e_in == 0) ++counts[size];
    });
    Poly p(1);
    for (const auto& [size, c] : counts) p.add_term({size}, Rat(Int(c)));
    return p;
}

Int vertex_cover_count(const Graph& g) {
    check_cap(g, kNumericCap, "vertex_cover_count");
    std::uint64_t count = 0;
    walk_subsets(g, 0, all_vertices(g), [&](int, int e_out, int) {
        if (e_out == 0) ++count;
    });
    return Int(count);
}

}  // namespace ising
