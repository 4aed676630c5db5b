#pragma once

// The right monoid action on distribution moments, computed by expanding the
// left action on monomials x^r y^s z^t. For an Iwahori element gamma = (a_ij)
// with plain minors m_ij the action on a monomial is the truncated expansion
// of
//
//   gamma . x^r y^s z^t =
//     A2^r A3^s Bnum^t A1^(k1-k2-r-s) Bden^(k2-t),
//
//   A1 = a11 + a21 x + a31 y        Bnum = m32 - m12 y + m22 z + m12 x z
//   A2 = a12 + a22 x + a32 y        Bden = m33 - m13 y + m23 z + m13 x z
//   A3 = a13 + a23 x + a33 y
//
// Negative exponents are geometric series, convergent because the relevant
// coefficients (a21, a31, m13, m23, m12) are divisible by p. The coefficient
// of x^a y^b z^c gains at least e*max(0, (a+b)-(r+s)) and e*max(0, c-t)
// pi-digits of valuation; truncation tails are certified from those floors.

#include <map>
#include <memory>
#include <vector>

#include "eigenlift/matrix.hpp"
#include "eigenlift/padic.hpp"

namespace eigenlift {

struct BoundsTooSmall : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dominant weight (k1, k2, 0).
struct Weight {
    int k1 = 0;
    int k2 = 0;

    Weight() = default;
    Weight(int k1_, int k2_) : k1(k1_), k2(k2_) {
        if (k2 < 0 || k1 < k2) throw std::invalid_argument("Weight: need k1 >= k2 >= 0");
    }
    bool operator==(const Weight&) const = default;
};

/// Exponent triple of x^r y^s z^t. The two-factor track stores (r, s) in the
/// first two slots with t = 0.
struct MonomialIndex {
    int r = 0, s = 0, t = 0;
    auto operator<=>(const MonomialIndex&) const = default;
    int xy_degree() const { return r + s; }
};

/// Truncation box: xy-total-degree <= nxy, z-degree <= nz.
struct ExpansionBounds {
    int nxy = 0;
    int nz = 0;
    bool operator==(const ExpansionBounds&) const = default;
};

/// Coefficient table of gamma . x^r y^s z^t, truncated to the bounds, with
/// certified valuation floors for everything discarded.
struct ActionExpansion {
    MonomialIndex source;
    ExpansionBounds bounds;
    std::vector<std::pair<MonomialIndex, PadicElement>> terms;  // nonzero coefficients
    int tail_floor_xy = 0;  // pi-adic floor for discarded xy-degrees > nxy
    int tail_floor_z = 0;   // pi-adic floor for discarded z-degrees > nz

    /// Structural valuation floor of the coefficient at `out`, in pi-digits.
    int coefficient_floor(const MonomialIndex& out, int e) const {
        int fx = out.xy_degree() - source.xy_degree();
        int fz = out.t - source.t;
        return e * std::max({0, fx, fz});
    }
};

/// Expansion engine for one Iwahori matrix at one weight. Builds the five
/// factor power tables once and memoizes per-monomial expansions, so acting
/// on a whole moment table costs one table build plus lookups.
class MonomialExpander {
public:
    MonomialExpander(const PadicContext& ctx, const Mat3& gamma, Weight lambda,
                     ExpansionBounds bounds);
    ~MonomialExpander();
    MonomialExpander(MonomialExpander&&) noexcept;
    MonomialExpander& operator=(MonomialExpander&&) noexcept;

    const ActionExpansion& expansion(const MonomialIndex& m) const;
    const ExpansionBounds& bounds() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// One-shot form of the above.
ActionExpansion act_on_monomial(const PadicContext& ctx, const GroupElement& gamma,
                                const MonomialIndex& m, Weight lambda, ExpansionBounds bounds);

/// pi_i sends a monomial to itself scaled by a power of p; returns that
/// exponent (pi1: r+s, pi2: s+t).
int act_pi_scale_exponent(SigmaKind kind, const MonomialIndex& m);

/// lambda(t) = t1^k1 t2^k2 for diagonal t.
PadicElement character_value(const PadicContext& ctx, Weight lambda, const Mat3& t_diag);

/// Coefficients of gamma . z^r = (b + d z)^r (a + c z)^(k - r) truncated at
/// degree <= bound, for a 2x2 gamma upper-triangular mod p with unit a.
/// Coefficient of z^j carries valuation >= e*max(0, j - r).
struct Gl2Expansion {
    int source = 0;
    int bound = 0;
    std::vector<PadicElement> coeffs;  // degree 0..bound
    int tail_floor = 0;
};

Gl2Expansion gl2_act_on_monomial(const PadicContext& ctx, const Mat2& gamma, int r, int k,
                                 int bound);

class Gl2Expander {
public:
    Gl2Expander(const PadicContext& ctx, const Mat2& gamma, int k, int bound);
    const Gl2Expansion& expansion(int r) const;

private:
    PadicContext ctx_;
    Mat2 gamma_;
    int k_;
    int bound_;
    mutable std::map<int, Gl2Expansion> cache_;
};

}  // namespace eigenlift
