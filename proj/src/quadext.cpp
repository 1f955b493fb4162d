#include "ising/quadext.hpp"

namespace ising {

namespace {
void require_same_radicand(const QuadExt& x, const QuadExt& y) {
    if (x.d != y.d)
        throw UsageError("quadratic-extension operands carry different radicands: " +
                         to_string(x.d) + " vs " + to_string(y.d));
}
}  // namespace

Rat QuadExt::rational_part() const {
    if (b != 0)
        throw ConsistencyError("radical component did not vanish: " + to_string(b) +
                               "*sqrt(" + to_string(d) + ")");
    return a;
}

QuadExt QuadExt::operator+(const QuadExt& o) const {
    require_same_radicand(*this, o);
    return {a + o.a, b + o.b, d};
}

QuadExt QuadExt::operator-(const QuadExt& o) const {
    require_same_radicand(*this, o);
    return {a - o.a, b - o.b, d};
}

QuadExt QuadExt::operator*(const QuadExt& o) const {
    require_same_radicand(*this, o);
    return {a * o.a + b * o.b * d, a * o.b + b * o.a, d};
}

QuadExt QuadExt::operator/(const QuadExt& o) const {
    require_same_radicand(*this, o);
    const Rat n = o.norm();
    if (n == 0) throw DegeneratePointError("division by a zero-norm quadratic element");
    // Multiply by the conjugate, divide by the norm.
    const QuadExt num = *this * o.conjugate();
    return {num.a / n, num.b / n, d};
}

QuadExt QuadExt::pow(unsigned exp) const {
    QuadExt r = rational(Rat(1), d);
    QuadExt base = *this;
    while (exp > 0) {
        if (exp & 1u) r = r * base;
        exp >>= 1u;
        if (exp > 0) base = base * base;
    }
    return r;
}

GaussRat GaussRat::operator/(const GaussRat& o) const {
    const Rat n = o.re * o.re + o.im * o.im;
    if (n == 0) throw DegeneratePointError("division by zero Gaussian rational");
    const GaussRat num = *this * o.conjugate();
    return {num.re / n, num.im / n};
}

GaussRat GaussRat::pow(unsigned exp) const {
    GaussRat r(Rat(1), Rat(0));
    GaussRat base = *this;
    while (exp > 0) {
        if (exp & 1u) r = r * base;
        exp >>= 1u;
        if (exp > 0) base = base * base;
    }
    return r;
}

Rat GaussRat::real_part() const {
    if (im != 0)
        throw ConsistencyError("imaginary component did not vanish: " + to_string(im));
    return re;
}

}  // namespace ising
