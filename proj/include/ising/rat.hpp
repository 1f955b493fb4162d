#pragma once

#include <gmpxx.h>

#include <string>

#include "ising/errors.hpp"

namespace ising {

// Exact arithmetic everywhere: arbitrary-precision integers and canonical
// rationals (reduced, positive denominator) from GMP.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw UsageError("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Int int_pow(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

// base^exp for integer exp; negative exponents invert (base must be nonzero).
Rat rat_pow(const Rat& base, long exp);

std::string to_string(const Rat& r);

// Accepts "p/q", plain integers, and decimal literals like "-0.25".
Rat parse_rat(const std::string& text);

}  // namespace ising
