#pragma once

#include "ising/rat.hpp"

namespace ising {

// Element a + b*sqrt(d) of a quadratic extension of the rationals.  The
// radicand d is treated formally and must agree between operands; contexts
// never mix radicands.
struct QuadExt {
    Rat a, b, d;

    QuadExt(Rat a_, Rat b_, Rat d_) : a(std::move(a_)), b(std::move(b_)), d(std::move(d_)) {}

    static QuadExt rational(const Rat& value, const Rat& d) { return {value, Rat(0), d}; }
    static QuadExt root(const Rat& d) { return {Rat(0), Rat(1), d}; }

    bool is_rational() const { return b == 0; }

    // The value as a rational; throws ConsistencyError if the radical
    // component has not cancelled.
    Rat rational_part() const;

    QuadExt conjugate() const { return {a, -b, d}; }
    // a^2 - b^2 d, the product with the conjugate.
    Rat norm() const { return a * a - b * b * d; }

    QuadExt operator+(const QuadExt& o) const;
    QuadExt operator-(const QuadExt& o) const;
    QuadExt operator*(const QuadExt& o) const;
    QuadExt operator/(const QuadExt& o) const;
    QuadExt operator-() const { return {-a, -b, d}; }
    QuadExt pow(unsigned exp) const;

    bool operator==(const QuadExt& o) const { return a == o.a && b == o.b && d == o.d; }
};

// Gaussian rational re + im*i.
struct GaussRat {
    Rat re, im;

    GaussRat() : re(0), im(0) {}
    GaussRat(Rat re_, Rat im_) : re(std::move(re_)), im(std::move(im_)) {}

    static GaussRat i() { return {Rat(0), Rat(1)}; }

    GaussRat conjugate() const { return {re, -im}; }

    GaussRat operator+(const GaussRat& o) const { return {re + o.re, im + o.im}; }
    GaussRat operator-(const GaussRat& o) const { return {re - o.re, im - o.im}; }
    GaussRat operator*(const GaussRat& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussRat operator/(const GaussRat& o) const;
    GaussRat pow(unsigned exp) const;

    // Throws ConsistencyError if the imaginary part has not cancelled.
    Rat real_part() const;

    bool operator==(const GaussRat& o) const { return re == o.re && im == o.im; }
};

}  // namespace ising
