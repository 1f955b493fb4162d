#pragma once

#include <optional>
#include <vector>

#include "ising/poly.hpp"
#include "ising/quadext.hpp"

namespace ising {

// Eigendata of the ladder recurrence at a rational parameter t:
//   D = t^4 - 2t^2 + 5,
//   lambda_{1,2} = (t/2)(1 + t^2 +- sqrt(D)),
//   c2 = t(-t^3 - 2 + t + t sqrt(D)) / (2 sqrt(D)),   c1 = t^2 - c2,
//   d2 = (-1 - 2t + t^2 + sqrt(D)) / (2 sqrt(D)),     d1 = 1 - d2.
// lambda1 takes the + branch.  Requires t != 0 so that lambda1 != lambda2.
struct SpectralData {
    Rat t, D;
    QuadExt lambda1, lambda2, c1, c2, d1, d2;

    static SpectralData at(const Rat& t);
};

// Constrained ladder sums at y = 1.
// Exactly one apex together with the head forced in: (t^2+t)^h * t.
Rat b_single(const Rat& t, int h);
// All three of tr1, tr2, hd forced in: c1 lambda1^h + c2 lambda2^h.
Rat b_all(const SpectralData& sd, int h);
// Both apexes in, head out: d1 lambda1^h + d2 lambda2^h.
Rat b_pair(const SpectralData& sd, int h);

// The same two sequences via their mutual recurrence
//   all(h) = all(h-1) t^3 + pair(h-1) t^2,   pair(h) = all(h-1) + pair(h-1) t,
// from all(0) = t^2, pair(0) = 1.  Independent check of the closed forms.
std::pair<Rat, Rat> b_recurrence(const Rat& t, int h);
// Symbolic version, polynomials in t.
std::pair<Poly, Poly> b_recurrence_poly(int h);

// Ladder with only the apexes constrained: (2t(t^2+t)^h,
// (c1+d1) lambda1^h + (c2+d2) lambda2^h) for (one apex in, both in).
std::pair<Rat, Rat> z_Lh_split(const SpectralData& sd, int h);

// Phi gadget with apexes on (opposite sides, the same side):
// ((2t)^|H| prod (t^2+t)^h, prod over h of the ladder both-apex sum).
std::pair<Rat, Rat> phi_split(const SpectralData& sd, const std::vector<int>& H);
// Symbolic versions, polynomials in t.
Poly phi_opposite_poly(const std::vector<int>& H);
Poly phi_same_poly(const std::vector<int>& H);

// Constants of the edge-gadget reduction at t = gamma:
//   e_i = (c_i + d_i) / (2 gamma),  r_i = lambda_i / (gamma^2 + gamma),
// and, when delta is admissible for the vertex-gadget machinery,
//   u1 = 1/(gamma^2-1), u2 = gamma/(delta(gamma^2-1)),
//   w = (delta+gamma)/(delta gamma + 1).
struct ReductionConstants {
    Rat gamma;
    QuadExt e1, e2, r1, r2;
    std::optional<Rat> u1, u2, w;

    static ReductionConstants at(const Rat& gamma, const Rat& delta);
    // Only the t-side constants; gamma outside {-1, 0, 1}.
    static ReductionConstants at_gamma(const Rat& gamma);

    const Rat& u1_value() const;
    const Rat& u2_value() const;
    const Rat& w_value() const;
};

// prod over h in H of (e1 r1^h + e2 r2^h); the radical part must cancel.
Rat f_t_H(const ReductionConstants& rc, const std::vector<int>& H);
// ((2t)^|H| prod (t^2+t)^h)^m.
Rat f_p_H(const Rat& t, const std::vector<int>& H, int m);

// Star with the center forced (in, out): (y (yt+1)^n, (y+t)^n) in (t, y).
std::pair<Poly, Poly> star_split_poly(int n);
// Star-of-stars with the center forced (in, out):
//   (y prod (yt (yt+1)^h + (y+t)^h),  prod (y (yt+1)^h + t (y+t)^h)).
std::pair<Poly, Poly> s_H_split_poly(const std::vector<int>& H);

// Rooted-product prefactor (prod of the out-factors)^nG at a rational point.
Rat g_p_H(const Rat& gamma, const Rat& delta, const std::vector<int>& H, int nG);
// The shifted y-argument: delta * prod in/out.
Rat g_y_H(const Rat& gamma, const Rat& delta, const std::vector<int>& H);
// prod over h of (1 + 1/(u1 + u2 w^h)); carries the same equality pattern
// as g_y over equal-size families.
Rat h_y_H(const Rat& u1, const Rat& u2, const Rat& w, const std::vector<int>& H);

// Thickened-edge factor by how many endpoints lie in S (0, 1 or 2):
// (y+z^2)^{4l}, (xy+z)^{4l}, (yx^2+1)^{4l}; variables (x, y, z).
Poly omega1_poly(int l, int endpoints_in);
// g = y (yx^2+1)^{4l} + (yx+z)^{4l},  h = (y+z^2)^{4l} + y (yx+z)^{4l}.
Poly g_lq_poly(int l);
Poly h_lq_poly(int l);
// Thickened-star factor: g^{2q} if the center is in S, else h^{2q}.
Poly omega2_poly(int l, int q, bool center_in);

// The three constants of the regular-graph thickening identity.  For a
// d-regular G the decomposition over S of V(G) gives, exactly,
//   Z(R^{l,q}(G); x, y, z) = f_p * sum_S f_t^{cut(S)} f_y^{|S|}
//                          = f_p * f_t^{m_G} * Z(G; 1/f_t, f_y),
// the cut exponent being the positive one (each crossing edge of G turns
// into 4l two-paths with exactly one endpoint inside).
struct RConstants {
    Rat f_p, f_t, f_y;
};
RConstants f_R_constants(const Rat& x, const Rat& y, const Rat& z,
                         int l, int q, int d, int nG, int mG);

// Factorization of the R-constants used by the grid interpolation:
//   f_y = delta E_y1^{2dl} E_y2l^{2q},  f_t = E_t^l.
// e_t is absent when delta gamma^2 + 1 = 0 (the other two stay defined).
struct EConstants {
    Rat e_y1, e_y2_l;
    std::optional<Rat> e_t;
};
EConstants E_constants(const Rat& gamma, const Rat& delta, const Rat& epsilon, int l);

// First index i within [0, horizon] from which the sequence
// h(l) = (e b^l + a^l) / (c^l + e a^l) is strictly monotone through the
// horizon; nullopt when no such index exists.  Requires a, b, c > 0, b != c.
std::optional<int> monotone_horizon(const Rat& e, const Rat& a, const Rat& b,
                                    const Rat& c, int horizon);

// The six admissibility conditions of the grid interpolation, checked in
// order; nullopt means the point is admissible.
enum class GridCondition {
    DeltaIsUnit,          // delta in {-1, 0, 1}
    DeltaEps2IsUnit,      // delta + eps^2 in {-1, 0, 1}
    DeltaEps2Matches,     // delta + eps^2 = +-(delta gamma^2 + 1)
    DeltaGamma2Vanishes,  // delta gamma^2 + 1 = 0
    GammaDeltaEpsVanishes,  // gamma delta + eps = 0
    OnHypersurface,       // (gamma delta + eps)^4 = (delta gamma^2+1)^2 (delta+eps^2)^2
};
std::optional<GridCondition> grid_point_violation(const Rat& gamma, const Rat& delta,
                                                  const Rat& epsilon);
const char* grid_condition_name(GridCondition c);

}  // namespace ising
