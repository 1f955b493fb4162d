#include "ising/closed_forms.hpp"

#include "ising/gadgets.hpp"

namespace ising {

SpectralData SpectralData::at(const Rat& t) {
    if (t == 0) throw DegeneratePointError("spectral data degenerate at t = 0");
    const Rat t2 = t * t;
    const Rat D = t2 * t2 - 2 * t2 + 5;
    const QuadExt root = QuadExt::root(D);
    auto lift = [&](const Rat& r) { return QuadExt::rational(r, D); };

    const QuadExt half_t = lift(t / 2);
    const QuadExt lambda1 = half_t * (lift(1 + t2) + root);
    const QuadExt lambda2 = half_t * (lift(1 + t2) - root);
    const QuadExt c2 =
        (lift(t * (-t2 * t - 2 + t)) + lift(t2) * root) / (lift(2) * root);
    const QuadExt c1 = lift(t2) - c2;
    const QuadExt d2 = (lift(-1 - 2 * t + t2) + root) / (lift(2) * root);
    const QuadExt d1 = lift(1) - d2;
    return SpectralData{t, D, lambda1, lambda2, c1, c2, d1, d2};
}

Rat b_single(const Rat& t, int h) {
    if (h < 0) throw UsageError("negative ladder height");
    return rat_pow(t * t + t, h) * t;
}

Rat b_all(const SpectralData& sd, int h) {
    if (h < 0) throw UsageError("negative ladder height");
    return (sd.c1 * sd.lambda1.pow(h) + sd.c2 * sd.lambda2.pow(h)).rational_part();
}

Rat b_pair(const SpectralData& sd, int h) {
    if (h < 0) throw UsageError("negative ladder height");
    return (sd.d1 * sd.lambda1.pow(h) + sd.d2 * sd.lambda2.pow(h)).rational_part();
}

std::pair<Rat, Rat> b_recurrence(const Rat& t, int h) {
    if (h < 0) throw UsageError("negative ladder height");
    Rat all = t * t, pair = 1;
    for (int i = 0; i < h; ++i) {
        const Rat next_all = all * t * t * t + pair * t * t;
        pair = all + pair * t;
        all = next_all;
    }
    return {all, pair};
}

std::pair<Poly, Poly> b_recurrence_poly(int h) {
    if (h < 0) throw UsageError("negative ladder height");
    const Poly t = Poly::var(1, 0);
    const Poly t2 = t * t, t3 = t2 * t;
    Poly all = t2, pair = Poly::constant(1, 1);
    for (int i = 0; i < h; ++i) {
        const Poly next_all = all * t3 + pair * t2;
        pair = all + pair * t;
        all = next_all;
    }
    return {all, pair};
}

std::pair<Rat, Rat> z_Lh_split(const SpectralData& sd, int h) {
    if (h < 0) throw UsageError("negative ladder height");
    const Rat single = 2 * sd.t * rat_pow(sd.t * sd.t + sd.t, h);
    const Rat both = ((sd.c1 + sd.d1) * sd.lambda1.pow(h) +
                      (sd.c2 + sd.d2) * sd.lambda2.pow(h))
                         .rational_part();
    return {single, both};
}

std::pair<Rat, Rat> phi_split(const SpectralData& sd, const std::vector<int>& H_in) {
    const auto H = normalize_h_set(H_in);
    Rat opposite = 1;
    QuadExt same = QuadExt::rational(Rat(1), sd.D);
    for (int h : H) {
        opposite *= 2 * sd.t * rat_pow(sd.t * sd.t + sd.t, h);
        same = same * ((sd.c1 + sd.d1) * sd.lambda1.pow(h) +
                       (sd.c2 + sd.d2) * sd.lambda2.pow(h));
    }
    return {opposite, same.rational_part()};
}

Poly phi_opposite_poly(const std::vector<int>& H_in) {
    const auto H = normalize_h_set(H_in);
    const Poly t = Poly::var(1, 0);
    const Poly tt = t * t + t;
    Poly out = Poly::constant(1, 1);
    for (int h : H) out = out * (t * Rat(2)) * tt.pow(h);
    return out;
}

Poly phi_same_poly(const std::vector<int>& H_in) {
    const auto H = normalize_h_set(H_in);
    Poly out = Poly::constant(1, 1);
    for (int h : H) {
        const auto [all, pair] = b_recurrence_poly(h);
        out = out * (all + pair);
    }
    return out;
}

ReductionConstants ReductionConstants::at_gamma(const Rat& gamma) {
    if (gamma == 0 || gamma == 1 || gamma == -1)
        throw DegeneratePointError("reduction constants need gamma outside {-1, 0, 1}");
    const SpectralData sd = SpectralData::at(gamma);
    const QuadExt two_gamma = QuadExt::rational(2 * gamma, sd.D);
    const QuadExt denom = QuadExt::rational(gamma * gamma + gamma, sd.D);
    ReductionConstants rc{gamma,
                          (sd.c1 + sd.d1) / two_gamma,
                          (sd.c2 + sd.d2) / two_gamma,
                          sd.lambda1 / denom,
                          sd.lambda2 / denom,
                          std::nullopt,
                          std::nullopt,
                          std::nullopt};
    return rc;
}

ReductionConstants ReductionConstants::at(const Rat& gamma, const Rat& delta) {
    ReductionConstants rc = at_gamma(gamma);
    const bool delta_ok = delta != 0 && delta != 1 && delta != -1;
    if (delta_ok && gamma != -delta && delta * gamma + 1 != 0) {
        const Rat g2m1 = gamma * gamma - 1;
        rc.u1 = Rat(1) / g2m1;
        rc.u2 = gamma / (delta * g2m1);
        rc.w = (delta + gamma) / (delta * gamma + 1);
        if (*rc.w == 0 || *rc.w == 1 || *rc.w == -1)
            throw ConsistencyError("w landed in {-1, 0, 1} at an admissible point");
    }
    return rc;
}

namespace {
const Rat& require(const std::optional<Rat>& v, const char* name) {
    if (!v)
        throw DegeneratePointError(std::string(name) +
                                   " undefined: point inadmissible for the y-machinery");
    return *v;
}
}  // namespace

const Rat& ReductionConstants::u1_value() const { return require(u1, "u1"); }
const Rat& ReductionConstants::u2_value() const { return require(u2, "u2"); }
const Rat& ReductionConstants::w_value() const { return require(w, "w"); }

Rat f_t_H(const ReductionConstants& rc, const std::vector<int>& H_in) {
    const auto H = normalize_h_set(H_in);
    QuadExt prod = QuadExt::rational(Rat(1), rc.e1.d);
    for (int h : H) prod = prod * (rc.e1 * rc.r1.pow(h) + rc.e2 * rc.r2.pow(h));
    return prod.rational_part();
}

Rat f_p_H(const Rat& t, const std::vector<int>& H_in, int m) {
    const auto H = normalize_h_set(H_in);
    if (m < 0) throw UsageError("negative edge count");
    Rat base = rat_pow(2 * t, static_cast<long>(H.size()));
    for (int h : H) base *= rat_pow(t * t + t, h);
    return rat_pow(base, m);
}

std::pair<Poly, Poly> star_split_poly(int n) {
    if (n < 0) throw UsageError("negative star size");
    const Poly t = Poly::var(2, 0), y = Poly::var(2, 1);
    const Poly one = Poly::constant(2, 1);
    return {y * (y * t + one).pow(n), (y + t).pow(n)};
}

std::pair<Poly, Poly> s_H_split_poly(const std::vector<int>& H_in) {
    const auto H = normalize_h_set(H_in);
    const Poly t = Poly::var(2, 0), y = Poly::var(2, 1);
    const Poly one = Poly::constant(2, 1);
    Poly in = y, out = one;
    for (int h : H) {
        const Poly star_in = y * (y * t + one).pow(h);
        const Poly star_out = (y + t).pow(h);
        in = in * (t * star_in + star_out);
        out = out * (star_in + t * star_out);
    }
    return {in, out};
}

namespace {
// The per-h factors of the rooted-product identity at a rational point.
std::pair<Rat, Rat> s_H_factors(const Rat& gamma, const Rat& delta, int h) {
    const Rat star_in = delta * rat_pow(delta * gamma + 1, h);
    const Rat star_out = rat_pow(delta + gamma, h);
    return {gamma * star_in + star_out, star_in + gamma * star_out};
}
}  // namespace

Rat g_p_H(const Rat& gamma, const Rat& delta, const std::vector<int>& H_in, int nG) {
    const auto H = normalize_h_set(H_in);
    if (nG < 0) throw UsageError("negative vertex count");
    Rat prod = 1;
    for (int h : H) prod *= s_H_factors(gamma, delta, h).second;
    return rat_pow(prod, nG);
}

Rat g_y_H(const Rat& gamma, const Rat& delta, const std::vector<int>& H_in) {
    const auto H = normalize_h_set(H_in);
    Rat out = delta;
    for (int h : H) {
        const auto [num, den] = s_H_factors(gamma, delta, h);
        if (den == 0)
            throw DegeneratePointError("vanishing rooted-product factor at h = " +
                                       std::to_string(h));
        out *= num / den;
    }
    return out;
}

Rat h_y_H(const Rat& u1, const Rat& u2, const Rat& w, const std::vector<int>& H_in) {
    const auto H = normalize_h_set(H_in);
    Rat out = 1;
    for (int h : H) {
        const Rat den = u1 + u2 * rat_pow(w, h);
        if (den == 0)
            throw DegeneratePointError("vanishing h_y denominator at h = " + std::to_string(h));
        out *= 1 + Rat(1) / den;
    }
    return out;
}

Poly omega1_poly(int l, int endpoints_in) {
    if (l < 1) throw UsageError("thickening needs l >= 1");
    const Poly x = Poly::var(3, 0), y = Poly::var(3, 1), z = Poly::var(3, 2);
    const Poly one = Poly::constant(3, 1);
    switch (endpoints_in) {
        case 0: return (y + z * z).pow(4 * l);
        case 1: return (x * y + z).pow(4 * l);
        case 2: return (y * x * x + one).pow(4 * l);
        default: throw UsageError("an edge has 0, 1 or 2 endpoints in S");
    }
}

Poly g_lq_poly(int l) {
    if (l < 1) throw UsageError("thickening needs l >= 1");
    const Poly x = Poly::var(3, 0), y = Poly::var(3, 1), z = Poly::var(3, 2);
    const Poly one = Poly::constant(3, 1);
    return y * (y * x * x + one).pow(4 * l) + (y * x + z).pow(4 * l);
}

Poly h_lq_poly(int l) {
    if (l < 1) throw UsageError("thickening needs l >= 1");
    const Poly x = Poly::var(3, 0), y = Poly::var(3, 1), z = Poly::var(3, 2);
    return (y + z * z).pow(4 * l) + y * (y * x + z).pow(4 * l);
}

Poly omega2_poly(int l, int q, bool center_in) {
    if (q < 1) throw UsageError("thickened star needs q >= 1");
    return (center_in ? g_lq_poly(l) : h_lq_poly(l)).pow(2 * q);
}

RConstants f_R_constants(const Rat& x, const Rat& y, const Rat& z,
                         int l, int q, int d, int nG, int mG) {
    if (l < 1 || q < 1) throw UsageError("R constants need l, q >= 1");
    if (d < 0 || nG < 0 || mG < 0 || d * nG != 2 * mG)
        throw UsageError("inconsistent d-regular bookkeeping: d*n != 2*m");
    const Rat A = y * x * x + 1;  // both endpoints in
    const Rat B = y + z * z;      // both endpoints out
    const Rat C = y * x + z;      // edge across
    if (A == 0 || B == 0)
        throw DegeneratePointError("degenerate thickening point: yx^2+1 or y+z^2 vanishes");
    const Rat g = y * rat_pow(A, 4 * l) + rat_pow(C, 4 * l);
    const Rat h = rat_pow(B, 4 * l) + y * rat_pow(C, 4 * l);
    if (h == 0) throw DegeneratePointError("degenerate thickening point: h_{l,q} vanishes");

    RConstants out;
    out.f_t = rat_pow(C * C / (A * B), 2 * l);
    out.f_y = y * rat_pow(A / B, 2 * l * d) * rat_pow(g / h, 2 * q);
    out.f_p = rat_pow(h, 2 * q * nG) * rat_pow(B, 2 * l * d * nG);
    return out;
}

EConstants E_constants(const Rat& gamma, const Rat& delta, const Rat& epsilon, int l) {
    if (l < 1) throw UsageError("E constants need l >= 1");
    const Rat B = delta * gamma * gamma + 1;
    const Rat C = delta + epsilon * epsilon;
    const Rat A = gamma * delta + epsilon;
    if (C == 0) throw DegeneratePointError("delta + epsilon^2 vanishes");
    EConstants out;
    out.e_y1 = B / C;
    const Rat den = rat_pow(C, 4 * l) + delta * rat_pow(A, 4 * l);
    if (den == 0) throw DegeneratePointError("E_{y,2,l} denominator vanishes");
    out.e_y2_l = (delta * rat_pow(B, 4 * l) + rat_pow(A, 4 * l)) / den;
    if (B != 0) out.e_t = rat_pow(A * A / (B * C), 2);
    return out;
}

std::optional<int> monotone_horizon(const Rat& e, const Rat& a, const Rat& b,
                                    const Rat& c, int horizon) {
    if (a <= 0 || b <= 0 || c <= 0) throw UsageError("monotone_horizon needs a, b, c > 0");
    if (b == c) throw UsageError("monotone_horizon needs b != c");
    if (horizon < 1) throw UsageError("horizon must be at least 1");

    std::vector<std::optional<Rat>> values(horizon + 1);
    for (int i = 0; i <= horizon; ++i) {
        const Rat den = rat_pow(c, i) + e * rat_pow(a, i);
        if (den == 0) continue;
        values[i] = (e * rat_pow(b, i) + rat_pow(a, i)) / den;
    }
    for (int start = 0; start + 1 <= horizon; ++start) {
        bool ok = true;
        int direction = 0;  // +1 increasing, -1 decreasing
        for (int i = start; i < horizon && ok; ++i) {
            if (!values[i] || !values[i + 1]) {
                ok = false;
                break;
            }
            const int cmp = *values[i] < *values[i + 1] ? 1 : (*values[i] > *values[i + 1] ? -1 : 0);
            if (cmp == 0 || (direction != 0 && cmp != direction)) ok = false;
            direction = cmp;
        }
        if (ok) return start;
    }
    return std::nullopt;
}

std::optional<GridCondition> grid_point_violation(const Rat& gamma, const Rat& delta,
                                                  const Rat& epsilon) {
    auto is_unit = [](const Rat& r) { return r == 0 || r == 1 || r == -1; };
    const Rat de2 = delta + epsilon * epsilon;
    const Rat dg2 = delta * gamma * gamma + 1;
    const Rat gde = gamma * delta + epsilon;
    if (is_unit(delta)) return GridCondition::DeltaIsUnit;
    if (is_unit(de2)) return GridCondition::DeltaEps2IsUnit;
    if (de2 == dg2 || de2 == -dg2) return GridCondition::DeltaEps2Matches;
    if (dg2 == 0) return GridCondition::DeltaGamma2Vanishes;
    if (gde == 0) return GridCondition::GammaDeltaEpsVanishes;
    if (rat_pow(gde, 4) == rat_pow(dg2 * de2, 2)) return GridCondition::OnHypersurface;
    return std::nullopt;
}

const char* grid_condition_name(GridCondition c) {
    switch (c) {
        case GridCondition::DeltaIsUnit: return "delta in {-1,0,1}";
        case GridCondition::DeltaEps2IsUnit: return "delta + eps^2 in {-1,0,1}";
        case GridCondition::DeltaEps2Matches: return "delta + eps^2 = +-(delta gamma^2 + 1)";
        case GridCondition::DeltaGamma2Vanishes: return "delta gamma^2 + 1 = 0";
        case GridCondition::GammaDeltaEpsVanishes: return "gamma delta + eps = 0";
        case GridCondition::OnHypersurface:
            return "(gamma delta + eps)^4 = (delta gamma^2+1)^2 (delta+eps^2)^2";
    }
    return "unknown";
}

}  // namespace ising
