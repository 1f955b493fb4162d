#include "ising/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ising {

Poly Poly::constant(int arity, const Rat& c) {
    Poly p(arity);
    p.add_term(Exponents(arity, 0), c);
    return p;
}

Poly Poly::monomial(Exponents exps, const Rat& c) {
    Poly p(static_cast<int>(exps.size()));
    p.add_term(exps, c);
    return p;
}

Poly Poly::var(int arity, int index) {
    if (index < 0 || index >= arity) throw UsageError("variable index out of range");
    Exponents e(arity, 0);
    e[index] = 1;
    return monomial(std::move(e), Rat(1));
}

int Poly::degree(int var) const {
    if (var < 0 || var >= arity_) throw UsageError("variable index out of range");
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

int Poly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int t = 0;
        for (int x : e) t += x;
        d = std::max(d, t);
    }
    return d;
}

void Poly::add_term(const Exponents& exps, const Rat& c) {
    if (static_cast<int>(exps.size()) != arity_)
        throw UsageError("exponent vector length does not match arity");
    if (c == 0) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rat Poly::coefficient(const Exponents& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Rat(0) : it->second;
}

Poly Poly::operator+(const Poly& o) const {
    if (arity_ != o.arity_) throw UsageError("arity mismatch in +");
    Poly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    if (arity_ != o.arity_) throw UsageError("arity mismatch in -");
    Poly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

Poly Poly::operator-() const {
    Poly r(arity_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    if (arity_ != o.arity_) throw UsageError("arity mismatch in *");
    Poly r(arity_);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            Exponents e(arity_);
            for (int i = 0; i < arity_; ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    }
    return r;
}

Poly Poly::operator*(const Rat& c) const {
    Poly r(arity_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

Poly Poly::pow(unsigned exp) const {
    Poly r = constant(arity_, Rat(1));
    Poly base = *this;
    while (exp > 0) {
        if (exp & 1u) r = r * base;
        base = (exp >>= 1u) > 0 ? base * base : base;
    }
    return r;
}

Rat Poly::eval(std::span<const Rat> point) const {
    if (static_cast<int>(point.size()) != arity_) throw UsageError("evaluation point arity mismatch");
    // Per-variable power cache keeps repeated exponents cheap.
    std::vector<std::map<int, Rat>> powers(arity_);
    auto power = [&](int v, int e) -> const Rat& {
        auto [it, fresh] = powers[v].try_emplace(e);
        if (fresh) it->second = rat_pow(point[v], e);
        return it->second;
    };
    Rat sum(0);
    for (const auto& [e, c] : terms_) {
        Rat term = c;
        for (int v = 0; v < arity_; ++v)
            if (e[v] != 0) term *= power(v, e[v]);
        sum += term;
    }
    return sum;
}

Poly Poly::substitute(int var, const Poly& value) const {
    if (var < 0 || var >= arity_) throw UsageError("variable index out of range");
    if (value.arity() != arity_) throw UsageError("substitution arity mismatch");
    std::map<int, Poly> powers;  // value^e cache
    auto power = [&](int e) -> const Poly& {
        auto it = powers.find(e);
        if (it == powers.end()) it = powers.emplace(e, value.pow(static_cast<unsigned>(e))).first;
        return it->second;
    };
    Poly r(arity_);
    for (const auto& [e, c] : terms_) {
        Exponents rest = e;
        rest[var] = 0;
        Poly term = Poly::monomial(rest, c);
        if (e[var] != 0) term = term * power(e[var]);
        r = r + term;
    }
    return r;
}

Poly Poly::remap_vars(int new_arity, const std::vector<int>& mapping) const {
    if (static_cast<int>(mapping.size()) != arity_) throw UsageError("remap table length mismatch");
    Poly r(new_arity);
    for (const auto& [e, c] : terms_) {
        Exponents ne(new_arity, 0);
        for (int v = 0; v < arity_; ++v) {
            if (mapping[v] < 0) {
                if (e[v] != 0) throw UsageError("remap drops a variable still in use");
                continue;
            }
            if (mapping[v] >= new_arity) throw UsageError("remap target out of range");
            ne[mapping[v]] += e[v];
        }
        r.add_term(ne, c);
    }
    return r;
}

Poly Poly::coefficient_of(int var, int power) const {
    if (var < 0 || var >= arity_) throw UsageError("variable index out of range");
    Poly r(arity_);
    for (const auto& [e, c] : terms_) {
        if (e[var] != power) continue;
        Exponents ne = e;
        ne[var] = 0;
        r.add_term(ne, c);
    }
    return r;
}

std::string Poly::str(const std::vector<std::string>& names) const {
    if (static_cast<int>(names.size()) != arity_) throw UsageError("variable name list length mismatch");
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << to_string(c);
        for (int v = 0; v < arity_; ++v) {
            if (e[v] == 0) continue;
            out << "*" << names[v];
            if (e[v] != 1) out << "^" << e[v];
        }
    }
    return out.str();
}

Poly lagrange_interpolate(const std::vector<std::pair<Rat, Rat>>& points, int degree_bound) {
    if (degree_bound < 0) throw UsageError("negative degree bound");
    const size_t need = static_cast<size_t>(degree_bound) + 1;
    if (points.size() < need)
        throw InterpolationError("not enough interpolation points for the degree bound");
    {
        std::set<Rat> seen;
        for (const auto& [x, y] : points)
            if (!seen.insert(x).second)
                throw InterpolationError("duplicate interpolation abscissa " + to_string(x));
    }

    // Newton divided differences on the first degree_bound+1 points.
    std::vector<Rat> xs, dd;
    xs.reserve(need);
    dd.reserve(need);
    for (size_t i = 0; i < need; ++i) {
        xs.push_back(points[i].first);
        dd.push_back(points[i].second);
    }
    for (size_t level = 1; level < need; ++level)
        for (size_t i = need - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);

    Poly result = Poly::constant(1, dd[need - 1]);
    const Poly x = Poly::var(1, 0);
    for (size_t i = need - 1; i-- > 0;)
        result = result * (x - Poly::constant(1, xs[i])) + Poly::constant(1, dd[i]);

    // Surplus points must lie on the fitted polynomial.
    for (size_t i = need; i < points.size(); ++i) {
        const Rat v = result.eval(std::span<const Rat>(&points[i].first, 1));
        if (v != points[i].second)
            throw InterpolationError("surplus point off the interpolated polynomial at x=" +
                                     to_string(points[i].first));
    }
    return result;
}

}  // namespace ising
