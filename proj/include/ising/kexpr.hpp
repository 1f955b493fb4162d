#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "ising/graph.hpp"

namespace ising {

// Abstract syntax tree of a k-expression.  Colors are 1-based; AddEdges
// with i = j is allowed (edges within one color class).
struct KExpr {
    enum class Kind { Singleton, Union, AddEdges, Relabel };

    Kind kind;
    int i = 0, j = 0;  // Singleton color / operation colors
    std::unique_ptr<KExpr> left, right;

    // Smallest k the expression fits in: the largest color mentioned.
    int width() const;
    int leaf_count() const;
};

using KExprPtr = std::unique_ptr<KExpr>;

KExprPtr make_singleton(int color);
KExprPtr make_union(KExprPtr a, KExprPtr b);
KExprPtr make_add_edges(int i, int j, KExprPtr child);
KExprPtr make_relabel(int from, int to, KExprPtr child);

// Grammar (whitespace-insensitive):
//   expr := "v(" INT ")" | "u(" expr "," expr ")"
//         | "e(" INT "," INT "," expr ")" | "r(" INT "," INT "," expr ")"
// Syntax errors carry the offending position.
KExprPtr parse_kexpr(std::string_view text);

std::string format_kexpr(const KExpr& e);

// The graph the expression builds, with its final color labels.
Graph eval_kexpr(const KExpr& e);

}  // namespace ising
