#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "ising/rat.hpp"

namespace ising {

// Sparse multivariate polynomial with exact rational coefficients.
// Invariants: every stored exponent vector has length arity(); no stored
// zero coefficients.
class Poly {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, Rat>;

    explicit Poly(int arity) : arity_(arity) {
        if (arity < 0) throw UsageError("negative polynomial arity");
    }

    static Poly constant(int arity, const Rat& c);
    static Poly monomial(Exponents exps, const Rat& c);
    // The single variable x_index (exponent 1, coefficient 1).
    static Poly var(int arity, int index);

    int arity() const { return arity_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // Degree in one variable, -1 for the zero polynomial.
    int degree(int var) const;
    int total_degree() const;

    void add_term(const Exponents& exps, const Rat& c);
    Rat coefficient(const Exponents& exps) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& c) const;
    Poly operator-() const;
    Poly pow(unsigned exp) const;

    bool operator==(const Poly& o) const { return arity_ == o.arity_ && terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Rat eval(std::span<const Rat> point) const;

    // Replace variable `var` by the polynomial `value` (same arity).
    Poly substitute(int var, const Poly& value) const;

    // Reshape the variable space: mapping[old] = new index, or -1 to drop a
    // variable (which must then be unused).
    Poly remap_vars(int new_arity, const std::vector<int>& mapping) const;

    // Coefficient of y^j where y is variable `var`, as a polynomial in the
    // remaining variable space (the var's slot kept with exponent zero).
    Poly coefficient_of(int var, int power) const;

    std::string str(const std::vector<std::string>& names) const;

private:
    int arity_;
    TermMap terms_;
};

inline Poly operator*(const Rat& c, const Poly& p) { return p * c; }

// The unique univariate polynomial of degree <= degree_bound through the
// given points.  Duplicate abscissae raise InterpolationError; surplus
// points are checked against the fitted polynomial.
Poly lagrange_interpolate(const std::vector<std::pair<Rat, Rat>>& points, int degree_bound);

}  // namespace ising
