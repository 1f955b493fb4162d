#include "ising/rat.hpp"

#include <cctype>

namespace ising {

Rat rat_pow(const Rat& base, long exp) {
    if (exp == 0) return Rat(1);
    if (base == 0) {
        if (exp < 0) throw DegeneratePointError("0 raised to a negative power");
        return Rat(0);
    }
    const unsigned long e = static_cast<unsigned long>(exp < 0 ? -exp : exp);
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), e);
    // num/den was canonical, so the powers are canonical too.
    if (exp < 0) {
        r = Rat(1) / r;
    }
    return r;
}

std::string to_string(const Rat& r) {
    return r.get_str();
}

Rat parse_rat(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw UsageError("empty rational literal");

    const auto dot = s.find('.');
    if (dot != std::string::npos) {
        if (s.find('/') != std::string::npos)
            throw UsageError("rational literal mixes '.' and '/': " + text);
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        const size_t frac_len = s.size() - dot - 1;
        Rat num;
        if (mpq_set_str(num.get_mpq_t(), digits.c_str(), 10) != 0)
            throw UsageError("bad rational literal: " + text);
        Rat den(int_pow(Int(10), frac_len));
        Rat r = num / den;
        r.canonicalize();
        return r;
    }

    Rat r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
        throw UsageError("bad rational literal: " + text);
    if (r.get_den() == 0) throw UsageError("rational with zero denominator: " + text);
    r.canonicalize();
    return r;
}

}  // namespace ising
