#include "ising/kexpr.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace ising {

int KExpr::width() const {
    int k = std::max(i, j);
    if (left) k = std::max(k, left->width());
    if (right) k = std::max(k, right->width());
    return k;
}

int KExpr::leaf_count() const {
    if (kind == Kind::Singleton) return 1;
    int c = left ? left->leaf_count() : 0;
    if (right) c += right->leaf_count();
    return c;
}

KExprPtr make_singleton(int color) {
    if (color < 1) throw UsageError("colors are 1-based");
    auto e = std::make_unique<KExpr>();
    e->kind = KExpr::Kind::Singleton;
    e->i = color;
    return e;
}

KExprPtr make_union(KExprPtr a, KExprPtr b) {
    if (!a || !b) throw UsageError("union needs two operands");
    auto e = std::make_unique<KExpr>();
    e->kind = KExpr::Kind::Union;
    e->left = std::move(a);
    e->right = std::move(b);
    return e;
}

KExprPtr make_add_edges(int i, int j, KExprPtr child) {
    if (i < 1 || j < 1) throw UsageError("colors are 1-based");
    if (!child) throw UsageError("edge operation needs an operand");
    auto e = std::make_unique<KExpr>();
    e->kind = KExpr::Kind::AddEdges;
    e->i = i;
    e->j = j;
    e->left = std::move(child);
    return e;
}

KExprPtr make_relabel(int from, int to, KExprPtr child) {
    if (from < 1 || to < 1) throw UsageError("colors are 1-based");
    if (!child) throw UsageError("relabel needs an operand");
    auto e = std::make_unique<KExpr>();
    e->kind = KExpr::Kind::Relabel;
    e->i = from;
    e->j = to;
    e->left = std::move(child);
    return e;
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    KExprPtr parse() {
        KExprPtr e = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input");
        return e;
    }

private:
    std::string_view text_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw UsageError("k-expression syntax error at position " + std::to_string(pos_) +
                         ": " + what);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        return text_[pos_];
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    int integer() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a color");
        int value = 0;
        for (size_t i = start; i < pos_; ++i) {
            value = value * 10 + (text_[i] - '0');
            if (value > 1'000'000) fail("color out of range");
        }
        if (value < 1) fail("colors are 1-based");
        return value;
    }

    KExprPtr expr() {
        const char head = peek();
        ++pos_;
        switch (head) {
            case 'v': {
                expect('(');
                const int c = integer();
                expect(')');
                return make_singleton(c);
            }
            case 'u': {
                expect('(');
                KExprPtr a = expr();
                expect(',');
                KExprPtr b = expr();
                expect(')');
                return make_union(std::move(a), std::move(b));
            }
            case 'e': {
                expect('(');
                const int i = integer();
                expect(',');
                const int j = integer();
                expect(',');
                KExprPtr child = expr();
                expect(')');
                return make_add_edges(i, j, std::move(child));
            }
            case 'r': {
                expect('(');
                const int i = integer();
                expect(',');
                const int j = integer();
                expect(',');
                KExprPtr child = expr();
                expect(')');
                return make_relabel(i, j, std::move(child));
            }
            default:
                --pos_;
                fail("expected one of v, u, e, r");
        }
    }
};

}  // namespace

KExprPtr parse_kexpr(std::string_view text) { return Parser(text).parse(); }

std::string format_kexpr(const KExpr& e) {
    std::ostringstream out;
    switch (e.kind) {
        case KExpr::Kind::Singleton: out << "v(" << e.i << ")"; break;
        case KExpr::Kind::Union:
            out << "u(" << format_kexpr(*e.left) << "," << format_kexpr(*e.right) << ")";
            break;
        case KExpr::Kind::AddEdges:
            out << "e(" << e.i << "," << e.j << "," << format_kexpr(*e.left) << ")";
            break;
        case KExpr::Kind::Relabel:
            out << "r(" << e.i << "," << e.j << "," << format_kexpr(*e.left) << ")";
            break;
    }
    return out.str();
}

Graph eval_kexpr(const KExpr& e) {
    switch (e.kind) {
        case KExpr::Kind::Singleton:
            return Graph(1, {}, {}, {e.i});
        case KExpr::Kind::Union:
            return disjoint_union(eval_kexpr(*e.left), eval_kexpr(*e.right));
        case KExpr::Kind::AddEdges: {
            const Graph child = eval_kexpr(*e.left);
            std::vector<std::pair<int, int>> edges = child.edges();
            for (int u = 0; u < child.vertex_count(); ++u)
                for (int v = u + 1; v < child.vertex_count(); ++v) {
                    const bool match = (child.label(u) == e.i && child.label(v) == e.j) ||
                                       (child.label(u) == e.j && child.label(v) == e.i);
                    if (match) edges.emplace_back(u, v);
                }
            // Graph construction deduplicates.
            return Graph(child.vertex_count(), std::move(edges), {}, child.labels());
        }
        case KExpr::Kind::Relabel: {
            const Graph child = eval_kexpr(*e.left);
            std::vector<int> labels = child.labels();
            for (int& c : labels)
                if (c == e.i) c = e.j;
            return child.with_labels(std::move(labels));
        }
    }
    throw ConsistencyError("unreachable k-expression kind");
}

}  // namespace ising
