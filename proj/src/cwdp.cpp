#include "ising/cwdp.hpp"

#include <numeric>

#include "ising/enumerate.hpp"

namespace ising {

namespace {

long choose2(long x) { return x * (x - 1) / 2; }

struct KeyView {
    // Field offsets inside a flattened table key.
    int k;
    int pairs;
    int a(int color) const { return color - 1; }
    int b(int i, int j) const { return k + color_pair_index(k, i, j); }
    int c(int i, int j) const { return k + pairs + color_pair_index(k, i, j); }
};

CoeffTable singleton_table(int k, int color) {
    CoeffTable t;
    t.k = k;
    t.color_counts.assign(k, 0);
    t.color_counts[color - 1] = 1;
    std::vector<int> zero(t.key_size(), 0);
    t.entries[zero] = 1;
    zero[color - 1] = 1;
    t.entries[zero] = 1;
    return t;
}

CoeffTable union_tables(const CoeffTable& lhs, const CoeffTable& rhs) {
    CoeffTable t;
    t.k = lhs.k;
    t.color_counts.resize(lhs.k);
    for (int i = 0; i < lhs.k; ++i)
        t.color_counts[i] = lhs.color_counts[i] + rhs.color_counts[i];
    // The labeled polynomial is multiplicative over disjoint union, so the
    // table is the convolution of the children.
    for (const auto& [ka, va] : lhs.entries) {
        for (const auto& [kb, vb] : rhs.entries) {
            std::vector<int> key(ka.size());
            for (size_t i = 0; i < ka.size(); ++i) key[i] = ka[i] + kb[i];
            t.entries[key] += va * vb;
        }
    }
    return t;
}

CoeffTable add_edges_table(const CoeffTable& child, int p, int r) {
    const KeyView view{child.k, child.pair_slots()};
    const long dp = child.color_counts[p - 1];
    const long dr = child.color_counts[r - 1];

    CoeffTable t;
    t.k = child.k;
    t.color_counts = child.color_counts;
    // After completing the p-r edges, the pair exponents are forced by the
    // color populations of S and its complement; prior exponents collapse.
    for (const auto& [key, value] : child.entries) {
        const long ap = key[view.a(p)];
        const long ar = key[view.a(r)];
        std::vector<int> nk = key;
        if (p != r) {
            nk[view.b(p, r)] = static_cast<int>(ap * ar);
            nk[view.c(p, r)] = static_cast<int>((dp - ap) * (dr - ar));
        } else {
            nk[view.b(p, p)] = static_cast<int>(choose2(ap));
            nk[view.c(p, p)] = static_cast<int>(choose2(dp - ap));
        }
        t.entries[nk] += value;
    }
    return t;
}

CoeffTable relabel_table(const CoeffTable& child, int p, int r) {
    if (p == r) return child;
    const KeyView view{child.k, child.pair_slots()};

    CoeffTable t;
    t.k = child.k;
    t.color_counts = child.color_counts;
    t.color_counts[r - 1] += t.color_counts[p - 1];
    t.color_counts[p - 1] = 0;

    for (const auto& [key, value] : child.entries) {
        std::vector<int> nk = key;
        nk[view.a(r)] += nk[view.a(p)];
        nk[view.a(p)] = 0;
        for (int block = 0; block < 2; ++block) {
            auto slot = [&](int i, int j) { return block == 0 ? view.b(i, j) : view.c(i, j); };
            // Everything incident to p migrates to r; the r-r slot absorbs
            // all three former combinations of {p, r}.
            nk[slot(r, r)] += key[slot(p, r)] + key[slot(p, p)];
            nk[slot(p, r)] = 0;
            nk[slot(p, p)] = 0;
            for (int j = 1; j <= child.k; ++j) {
                if (j == p || j == r) continue;
                nk[slot(j, r)] += key[slot(j, p)];
                nk[slot(j, p)] = 0;
            }
        }
        t.entries[nk] += value;
    }
    return t;
}

}  // namespace

int CoeffTable::vertex_total() const {
    return std::accumulate(color_counts.begin(), color_counts.end(), 0);
}

bool CoeffTable::triples_valid(int n, int m) const {
    for (const auto& [key, value] : entries) {
        if (value == 0) return false;
        int asum = 0;
        for (int i = 0; i < k; ++i) asum += key[i];
        if (asum > n) return false;
        for (int i = k; i < key_size(); ++i)
            if (key[i] > m) return false;
    }
    return true;
}

Poly CoeffTable::to_poly() const {
    Poly p(key_size());
    for (const auto& [key, value] : entries) p.add_term(key, Rat(value));
    return p;
}

CoeffTable dp_z_labeled(const KExpr& e) {
    const int k = e.width();
    auto run = [k](auto&& self, const KExpr& node) -> CoeffTable {
        switch (node.kind) {
            case KExpr::Kind::Singleton:
                return singleton_table(k, node.i);
            case KExpr::Kind::Union:
                return union_tables(self(self, *node.left), self(self, *node.right));
            case KExpr::Kind::AddEdges:
                return add_edges_table(self(self, *node.left), node.i, node.j);
            case KExpr::Kind::Relabel:
                return relabel_table(self(self, *node.left), node.i, node.j);
        }
        throw ConsistencyError("unreachable k-expression kind");
    };
    return run(run, e);
}

Poly project_trivariate(const CoeffTable& table) {
    Poly p(3);
    const int pairs = table.pair_slots();
    for (const auto& [key, value] : table.entries) {
        int a = 0, b = 0, c = 0;
        for (int i = 0; i < table.k; ++i) a += key[i];
        for (int i = 0; i < pairs; ++i) {
            b += key[table.k + i];
            c += key[table.k + pairs + i];
        }
        p.add_term({b, a, c}, Rat(value));
    }
    return p;
}

}  // namespace ising
