#include "eigenlift/weight_action.hpp"

#include <algorithm>
#include <cassert>

namespace eigenlift {

namespace {

constexpr int kNoTail = 1000000;

// Dense truncated polynomial over O_L in x, y, z with xy-total-degree <= nxy
// and z-degree <= nz. Carries the certified shift pair (dxy, dz): every
// coefficient at (a, b, c) has valuation >= e*max(0, a+b-dxy) and
// >= e*max(0, c-dz). maxdeg_* bound the untruncated degrees (kNoTail once a
// series enters), so tail floors can tell "nothing was discarded" apart from
// "the discard is this deep".
struct TruncPoly {
    const PadicContext* ctx = nullptr;
    int nxy = 0, nz = 0;
    int dxy = 0, dz = 0;
    int maxdeg_xy = 0, maxdeg_z = 0;
    std::vector<PadicElement> c;

    static int pairs(int nxy) { return (nxy + 1) * (nxy + 2) / 2; }
    int idx(int a, int b, int cc) const {
        int d = a + b;
        return (d * (d + 1) / 2 + b) * (nz + 1) + cc;
    }
    PadicElement& at(int a, int b, int cc) { return c[static_cast<std::size_t>(idx(a, b, cc))]; }
    const PadicElement& at(int a, int b, int cc) const {
        return c[static_cast<std::size_t>(idx(a, b, cc))];
    }

    static TruncPoly zero(const PadicContext& ctx, int nxy, int nz) {
        TruncPoly p;
        p.ctx = &ctx;
        p.nxy = nxy;
        p.nz = nz;
        p.c.assign(static_cast<std::size_t>(pairs(nxy) * (nz + 1)),
                   PadicElement::zero(ctx, ctx.max_precision));
        return p;
    }

    bool is_zero() const {
        for (const auto& v : c)
            if (!v.is_zero()) return false;
        return true;
    }
};

// full product with truncation; shifts and degree bounds add
TruncPoly mul(const TruncPoly& P, const TruncPoly& Q) {
    TruncPoly R = TruncPoly::zero(*P.ctx, P.nxy, P.nz);
    R.dxy = P.dxy + Q.dxy;
    R.dz = P.dz + Q.dz;
    R.maxdeg_xy = std::min(P.maxdeg_xy + Q.maxdeg_xy, kNoTail);
    R.maxdeg_z = std::min(P.maxdeg_z + Q.maxdeg_z, kNoTail);
    for (int d1 = 0; d1 <= P.nxy; ++d1)
        for (int b1 = 0; b1 <= d1; ++b1)
            for (int c1 = 0; c1 <= P.nz; ++c1) {
                const PadicElement& x = P.at(d1 - b1, b1, c1);
                if (x.is_zero()) continue;
                for (int d2 = 0; d1 + d2 <= Q.nxy; ++d2)
                    for (int b2 = 0; b2 <= d2; ++b2)
                        for (int c2 = 0; c1 + c2 <= Q.nz; ++c2) {
                            const PadicElement& yv = Q.at(d2 - b2, b2, c2);
                            if (yv.is_zero()) continue;
                            PadicElement& tgt = R.at(d1 - b1 + d2 - b2, b1 + b2, c1 + c2);
                            tgt = tgt + x * yv;
                        }
            }
    return R;
}

TruncPoly linear_xy(const PadicContext& ctx, int nxy, int nz, std::int64_t c0, std::int64_t cx,
                    std::int64_t cy, int dxy) {
    TruncPoly p = TruncPoly::zero(ctx, nxy, nz);
    p.at(0, 0, 0) = PadicElement::from_int(ctx, c0);
    if (nxy >= 1) {
        p.at(1, 0, 0) = PadicElement::from_int(ctx, cx);
        p.at(0, 1, 0) = PadicElement::from_int(ctx, cy);
    }
    p.dxy = dxy;
    p.maxdeg_xy = 1;
    return p;
}

// geometric inverse of P = c0 (1 + w), c0 a unit, every nonzero coefficient
// of w divisible by pi^e
TruncPoly invert(const TruncPoly& P) {
    const PadicContext& ctx = *P.ctx;
    PadicElement c0 = P.at(0, 0, 0);
    PadicElement c0inv = c0.unit_inverse();
    TruncPoly w = P;
    w.at(0, 0, 0) = PadicElement::zero(ctx, ctx.max_precision);
    for (auto& v : w.c) v = v * c0inv;
    int vmin = ctx.max_precision;
    for (const auto& v : w.c)
        if (!v.is_zero()) vmin = std::min(vmin, v.valuation_floor());
    if (!w.is_zero() && vmin < ctx.e)
        throw BoundsTooSmall("invert: series does not converge (tail valuation < e)");

    TruncPoly out = TruncPoly::zero(ctx, P.nxy, P.nz);
    out.at(0, 0, 0) = PadicElement::one(ctx);
    TruncPoly wp = out;  // w^m, starting at m = 0
    for (int m = 1;; ++m) {
        wp = mul(wp, w);
        if (wp.is_zero() || static_cast<long long>(m) * vmin >= ctx.max_precision) break;
        if (m % 2 == 1)
            for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] = out.c[i] - wp.c[i];
        else
            for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] = out.c[i] + wp.c[i];
    }
    for (auto& v : out.c) v = v * c0inv;
    out.dxy = 0;
    out.dz = 0;
    out.maxdeg_xy = w.is_zero() ? 0 : kNoTail;
    out.maxdeg_z = (w.is_zero() || w.maxdeg_z == 0) ? 0 : kNoTail;
    return out;
}

std::vector<TruncPoly> power_table(const TruncPoly& base, int maxpow) {
    std::vector<TruncPoly> t;
    t.reserve(static_cast<std::size_t>(maxpow + 1));
    TruncPoly one = TruncPoly::zero(*base.ctx, base.nxy, base.nz);
    one.at(0, 0, 0) = PadicElement::one(*base.ctx);
    t.push_back(one);
    for (int i = 1; i <= maxpow; ++i) t.push_back(mul(t.back(), base));
    return t;
}

}  // namespace

struct MonomialExpander::Impl {
    PadicContext ctx;
    Mat3 g;
    Weight lambda;
    ExpansionBounds bounds;
    std::vector<TruncPoly> a2_pow, a3_pow, bnum_pow;
    std::vector<TruncPoly> a1_pow, a1inv_pow, bden_pow, bdeninv_pow;
    mutable std::map<MonomialIndex, ActionExpansion> cache;

    const TruncPoly& a1(int n) const {
        return n >= 0 ? a1_pow[static_cast<std::size_t>(n)] : a1inv_pow[static_cast<std::size_t>(-n)];
    }
    const TruncPoly& bden(int n) const {
        return n >= 0 ? bden_pow[static_cast<std::size_t>(n)] : bdeninv_pow[static_cast<std::size_t>(-n)];
    }
};

MonomialExpander::MonomialExpander(const PadicContext& ctx, const Mat3& gamma, Weight lambda,
                                   ExpansionBounds bounds)
    : impl_(std::make_unique<Impl>()) {
    if (!is_iwahori3(gamma, ctx.p)) throw NonIwahori("MonomialExpander: " + gamma.str());
    impl_->ctx = ctx;
    impl_->g = gamma;
    impl_->lambda = lambda;
    impl_->bounds = bounds;
    const Mat3& g = gamma;
    int nxy = bounds.nxy, nz = bounds.nz;

    TruncPoly A1 = linear_xy(ctx, nxy, nz, g(0, 0), g(1, 0), g(2, 0), 0);
    TruncPoly A2 = linear_xy(ctx, nxy, nz, g(0, 1), g(1, 1), g(2, 1), 1);
    TruncPoly A3 = linear_xy(ctx, nxy, nz, g(0, 2), g(1, 2), g(2, 2), 1);

    TruncPoly Bnum = TruncPoly::zero(ctx, nxy, nz);
    Bnum.at(0, 0, 0) = PadicElement::from_int(ctx, g.minor(3, 2));
    if (nxy >= 1) Bnum.at(0, 1, 0) = PadicElement::from_int(ctx, -g.minor(1, 2));
    if (nz >= 1) {
        Bnum.at(0, 0, 1) = PadicElement::from_int(ctx, g.minor(2, 2));
        if (nxy >= 1) Bnum.at(1, 0, 1) = PadicElement::from_int(ctx, g.minor(1, 2));
    }
    Bnum.dz = 1;
    Bnum.maxdeg_xy = 1;
    Bnum.maxdeg_z = 1;

    TruncPoly Bden = TruncPoly::zero(ctx, nxy, nz);
    Bden.at(0, 0, 0) = PadicElement::from_int(ctx, g.minor(3, 3));
    if (nxy >= 1) Bden.at(0, 1, 0) = PadicElement::from_int(ctx, -g.minor(1, 3));
    if (nz >= 1) {
        Bden.at(0, 0, 1) = PadicElement::from_int(ctx, g.minor(2, 3));
        if (nxy >= 1) Bden.at(1, 0, 1) = PadicElement::from_int(ctx, g.minor(1, 3));
    }
    Bden.maxdeg_xy = 1;
    Bden.maxdeg_z = 1;

    int k1 = lambda.k1, k2 = lambda.k2;
    impl_->a2_pow = power_table(A2, nxy);
    impl_->a3_pow = power_table(A3, nxy);
    impl_->bnum_pow = power_table(Bnum, nz);
    impl_->a1_pow = power_table(A1, std::max(k1 - k2, 0));
    impl_->a1inv_pow = power_table(invert(A1), std::max(0, nxy - (k1 - k2)));
    impl_->bden_pow = power_table(Bden, k2);
    impl_->bdeninv_pow = power_table(invert(Bden), std::max(nz - k2, 0));
}

MonomialExpander::~MonomialExpander() = default;
MonomialExpander::MonomialExpander(MonomialExpander&&) noexcept = default;
MonomialExpander& MonomialExpander::operator=(MonomialExpander&&) noexcept = default;

const ExpansionBounds& MonomialExpander::bounds() const { return impl_->bounds; }

const ActionExpansion& MonomialExpander::expansion(const MonomialIndex& m) const {
    auto it = impl_->cache.find(m);
    if (it != impl_->cache.end()) return it->second;

    const auto& I = *impl_;
    int k1 = I.lambda.k1, k2 = I.lambda.k2;
    if (m.r < 0 || m.s < 0 || m.t < 0) throw std::invalid_argument("expansion: negative exponent");
    if (m.xy_degree() > I.bounds.nxy || m.t > I.bounds.nz)
        throw BoundsTooSmall("expansion: source monomial outside bounds");
    int n1 = k1 - k2 - m.r - m.s;
    if (n1 < 0 && -n1 >= static_cast<int>(I.a1inv_pow.size()))
        throw BoundsTooSmall("expansion: A1 power table too small");

    TruncPoly P = mul(I.a2_pow[static_cast<std::size_t>(m.r)], I.a3_pow[static_cast<std::size_t>(m.s)]);
    P = mul(P, I.bnum_pow[static_cast<std::size_t>(m.t)]);
    P = mul(P, I.a1(n1));
    P = mul(P, I.bden(k2 - m.t));

    ActionExpansion exp;
    exp.source = m;
    exp.bounds = I.bounds;
    exp.tail_floor_xy = P.maxdeg_xy <= P.nxy ? kNoTail : I.ctx.e * (P.nxy + 1 - P.dxy);
    exp.tail_floor_z = P.maxdeg_z <= P.nz ? kNoTail : I.ctx.e * (P.nz + 1 - P.dz);
    for (int d = 0; d <= P.nxy; ++d)
        for (int b = 0; b <= d; ++b)
            for (int cc = 0; cc <= P.nz; ++cc) {
                const PadicElement& v = P.at(d - b, b, cc);
                if (v.is_zero()) continue;
                MonomialIndex out{d - b, b, cc};
                exp.terms.emplace_back(out, v);
                // structural floor check: a violated floor means a convention bug
                int fl = exp.coefficient_floor(out, I.ctx.e);
                if (v.valuation_floor() < std::min(fl, v.precision()))
                    throw std::logic_error("expansion: coefficient below certified floor");
            }
    auto [pos, inserted] = impl_->cache.emplace(m, std::move(exp));
    return pos->second;
}

ActionExpansion act_on_monomial(const PadicContext& ctx, const GroupElement& gamma,
                                const MonomialIndex& m, Weight lambda, ExpansionBounds bounds) {
    if (gamma.kind != SigmaKind::Iwahori)
        throw std::invalid_argument("act_on_monomial: use act_pi_scale_exponent for pi elements");
    MonomialExpander ex(ctx, gamma.m, lambda, bounds);
    return ex.expansion(m);
}

int act_pi_scale_exponent(SigmaKind kind, const MonomialIndex& m) {
    switch (kind) {
        case SigmaKind::Pi1:
            return m.r + m.s;
        case SigmaKind::Pi2:
            return m.s + m.t;
        default:
            throw std::invalid_argument("act_pi_scale_exponent: not a pi element");
    }
}

PadicElement character_value(const PadicContext& ctx, Weight lambda, const Mat3& t) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j && t(i, j) != 0)
                throw std::invalid_argument("character_value: matrix not diagonal");
    PadicElement out = PadicElement::one(ctx);
    PadicElement t1 = PadicElement::from_int(ctx, t(0, 0));
    PadicElement t2 = PadicElement::from_int(ctx, t(1, 1));
    for (int i = 0; i < lambda.k1; ++i) out = out * t1;
    for (int i = 0; i < lambda.k2; ++i) out = out * t2;
    return out;
}

namespace {

std::vector<PadicElement> zmul(const std::vector<PadicElement>& a,
                               const std::vector<PadicElement>& b, const PadicContext& ctx,
                               int bound) {
    std::vector<PadicElement> r(static_cast<std::size_t>(bound + 1),
                                PadicElement::zero(ctx, ctx.max_precision));
    for (int i = 0; i < static_cast<int>(a.size()) && i <= bound; ++i) {
        if (a[static_cast<std::size_t>(i)].is_zero()) continue;
        for (int j = 0; j < static_cast<int>(b.size()) && i + j <= bound; ++j)
            r[static_cast<std::size_t>(i + j)] =
                r[static_cast<std::size_t>(i + j)] + a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    }
    return r;
}

}  // namespace

Gl2Expansion gl2_act_on_monomial(const PadicContext& ctx, const Mat2& gamma, int r, int k,
                                 int bound) {
    if (gamma(0, 0) % ctx.p == 0 || gamma(1, 0) % ctx.p != 0)
        throw NonIwahori("gl2_act_on_monomial: " + gamma.str());
    auto lin = [&](std::int64_t c0, std::int64_t c1) {
        std::vector<PadicElement> v{PadicElement::from_int(ctx, c0), PadicElement::from_int(ctx, c1)};
        return v;
    };
    std::vector<PadicElement> acc{PadicElement::one(ctx)};
    auto bd = lin(gamma(0, 1), gamma(1, 1));  // b + d z
    for (int i = 0; i < r; ++i) acc = zmul(acc, bd, ctx, bound);
    auto ac = lin(gamma(0, 0), gamma(1, 0));  // a + c z
    int n = k - r;
    bool series = n < 0;
    if (n >= 0) {
        for (int i = 0; i < n; ++i) acc = zmul(acc, ac, ctx, bound);
    } else {
        // (a + cz)^(-1) = a^(-1) sum (-(c/a) z)^m, c divisible by p; higher
        // inverse powers by repeated multiplication
        PadicElement ainv = PadicElement::from_int(ctx, gamma(0, 0)).unit_inverse();
        PadicElement w1 = PadicElement::from_int(ctx, gamma(1, 0)) * ainv;
        int vw = w1.is_zero() ? ctx.max_precision : w1.valuation_floor();
        if (!w1.is_zero() && vw < ctx.e) throw BoundsTooSmall("gl2: series does not converge");
        std::vector<PadicElement> inv1(static_cast<std::size_t>(bound + 1),
                                       PadicElement::zero(ctx, ctx.max_precision));
        PadicElement wm = PadicElement::one(ctx);  // (-w)^m
        for (int m2 = 0; m2 <= bound; ++m2) {
            if (static_cast<long long>(m2) * vw >= ctx.max_precision || wm.is_zero()) break;
            inv1[static_cast<std::size_t>(m2)] = wm * ainv;
            wm = wm * (-w1);
        }
        for (int i = 0; i < -n; ++i) acc = zmul(acc, inv1, ctx, bound);
    }
    acc.resize(static_cast<std::size_t>(bound + 1), PadicElement::zero(ctx, ctx.max_precision));

    Gl2Expansion out;
    out.source = r;
    out.bound = bound;
    out.coeffs = std::move(acc);
    bool truncated = series || k > bound;
    out.tail_floor = truncated ? ctx.e * (bound + 1 - r) : kNoTail;
    for (int j = 0; j <= bound; ++j) {
        const auto& v = out.coeffs[static_cast<std::size_t>(j)];
        if (v.is_zero()) continue;
        int fl = ctx.e * std::max(0, j - r);
        if (v.valuation_floor() < std::min(fl, v.precision()))
            throw std::logic_error("gl2 expansion: coefficient below certified floor");
    }
    return out;
}

Gl2Expander::Gl2Expander(const PadicContext& ctx, const Mat2& gamma, int k, int bound)
    : ctx_(ctx), gamma_(gamma), k_(k), bound_(bound) {}

const Gl2Expansion& Gl2Expander::expansion(int r) const {
    auto it = cache_.find(r);
    if (it == cache_.end())
        it = cache_.emplace(r, gl2_act_on_monomial(ctx_, gamma_, r, k_, bound_)).first;
    return it->second;
}

}  // namespace eigenlift
