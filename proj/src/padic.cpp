#include "eigenlift/padic.hpp"

#include <algorithm>
#include <sstream>

namespace eigenlift {

namespace {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// carry rule for Z[pi]/(pi^e - p): a surplus of p at digit i becomes a 1 at
// digit i + e.
void normalize(std::vector<std::int64_t>& raw, std::int64_t p, int e, int prec) {
    for (int i = 0; i < prec; ++i) {
        std::int64_t v = raw[static_cast<std::size_t>(i)];
        std::int64_t q = v / p;
        std::int64_t r = v % p;
        if (r < 0) {
            r += p;
            q -= 1;
        }
        raw[static_cast<std::size_t>(i)] = r;
        if (i + e < prec) raw[static_cast<std::size_t>(i + e)] += q;
    }
}

std::int64_t unit_inverse_mod_p(std::int64_t a, std::int64_t p) {
    // extended gcd; a is nonzero mod p, p prime
    std::int64_t t = 0, newt = 1, r = p, newr = a % p;
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::swap(t -= q * newt, newt);
        std::swap(r -= q * newr, newr);
    }
    if (t < 0) t += p;
    return t;
}

}  // namespace

PadicContext::PadicContext(std::int64_t p_, int e_, int max_precision_)
    : p(p_), e(e_), max_precision(max_precision_) {
    if (!is_prime(p)) throw std::invalid_argument("PadicContext: p must be prime");
    if (e < 1) throw std::invalid_argument("PadicContext: e must be >= 1");
    if (max_precision < 1) throw std::invalid_argument("PadicContext: M must be >= 1");
    if (p > (std::int64_t(1) << 30)) throw std::invalid_argument("PadicContext: p too large");
}

void PadicElement::check_same(const PadicElement& other) const {
    if (!ctx_.compatible(other.ctx_)) throw ContextMismatch("p-adic context mismatch");
}

PadicElement PadicElement::zero(const PadicContext& ctx, int precision) {
    if (precision < 0) precision = 0;
    precision = std::min(precision, ctx.max_precision);
    PadicElement x;
    x.ctx_ = ctx;
    x.digits_.assign(static_cast<std::size_t>(precision), 0);
    return x;
}

PadicElement PadicElement::from_int(const PadicContext& ctx, std::int64_t value) {
    return from_int(ctx, value, ctx.max_precision);
}

PadicElement PadicElement::from_int(const PadicContext& ctx, std::int64_t value, int precision) {
    precision = std::min(precision, ctx.max_precision);
    PadicElement x = zero(ctx, precision);
    // value = sum value_j p^j = sum value_j pi^(e j)
    std::vector<std::int64_t> raw(static_cast<std::size_t>(precision), 0);
    std::int64_t v = value;
    for (int j = 0; j * ctx.e < precision && v != 0; ++j) {
        std::int64_t q = v / ctx.p;
        std::int64_t r = v % ctx.p;
        if (r < 0) {
            r += ctx.p;
            q -= 1;
        }
        raw[static_cast<std::size_t>(j * ctx.e)] += r;
        v = q;
    }
    // leftover v would live at digits >= precision: discarded mod pi^K
    normalize(raw, ctx.p, ctx.e, precision);
    for (int i = 0; i < precision; ++i)
        x.digits_[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(raw[static_cast<std::size_t>(i)]);
    return x;
}

PadicElement PadicElement::from_digits(const PadicContext& ctx, std::vector<std::uint32_t> digits,
                                       int precision) {
    precision = std::min(precision, ctx.max_precision);
    digits.resize(static_cast<std::size_t>(precision), 0);
    for (auto d : digits)
        if (d >= ctx.p) throw std::invalid_argument("PadicElement: digit out of range");
    PadicElement x;
    x.ctx_ = ctx;
    x.digits_ = std::move(digits);
    return x;
}

PadicElement PadicElement::uniformizer_power(const PadicContext& ctx, int n, int precision) {
    PadicElement x = zero(ctx, precision);
    if (n < x.precision()) x.digits_[static_cast<std::size_t>(n)] = 1;
    return x;
}

std::optional<int> PadicElement::valuation() const {
    for (int i = 0; i < precision(); ++i)
        if (digits_[static_cast<std::size_t>(i)] != 0) return i;
    return std::nullopt;
}

int PadicElement::valuation_floor() const {
    auto v = valuation();
    return v ? *v : precision();
}

PadicElement PadicElement::reduced(int new_precision) const {
    if (new_precision >= precision()) return *this;
    PadicElement x = *this;
    x.digits_.resize(static_cast<std::size_t>(std::max(new_precision, 0)));
    return x;
}

PadicElement PadicElement::zero_padded(int new_precision) const {
    new_precision = std::min(new_precision, ctx_.max_precision);
    PadicElement x = *this;
    if (new_precision > precision())
        x.digits_.resize(static_cast<std::size_t>(new_precision), 0);
    return x;
}

PadicElement PadicElement::operator-() const {
    PadicElement r = zero(ctx_, precision());
    std::vector<std::int64_t> raw(digits_.size());
    for (std::size_t i = 0; i < digits_.size(); ++i) raw[i] = -static_cast<std::int64_t>(digits_[i]);
    normalize(raw, ctx_.p, ctx_.e, precision());
    for (std::size_t i = 0; i < raw.size(); ++i) r.digits_[i] = static_cast<std::uint32_t>(raw[i]);
    return r;
}

PadicElement operator+(const PadicElement& a, const PadicElement& b) {
    a.check_same(b);
    int prec = std::min(a.precision(), b.precision());
    PadicElement r = PadicElement::zero(a.ctx_, prec);
    std::vector<std::int64_t> raw(static_cast<std::size_t>(prec), 0);
    for (int i = 0; i < prec; ++i)
        raw[static_cast<std::size_t>(i)] =
            static_cast<std::int64_t>(a.digits_[static_cast<std::size_t>(i)]) +
            static_cast<std::int64_t>(b.digits_[static_cast<std::size_t>(i)]);
    normalize(raw, a.ctx_.p, a.ctx_.e, prec);
    for (int i = 0; i < prec; ++i) r.digits_[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(raw[static_cast<std::size_t>(i)]);
    return r;
}

PadicElement operator-(const PadicElement& a, const PadicElement& b) {
    a.check_same(b);
    int prec = std::min(a.precision(), b.precision());
    PadicElement r = PadicElement::zero(a.ctx_, prec);
    std::vector<std::int64_t> raw(static_cast<std::size_t>(prec), 0);
    for (int i = 0; i < prec; ++i)
        raw[static_cast<std::size_t>(i)] =
            static_cast<std::int64_t>(a.digits_[static_cast<std::size_t>(i)]) -
            static_cast<std::int64_t>(b.digits_[static_cast<std::size_t>(i)]);
    normalize(raw, a.ctx_.p, a.ctx_.e, prec);
    for (int i = 0; i < prec; ++i) r.digits_[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(raw[static_cast<std::size_t>(i)]);
    return r;
}

namespace {

std::vector<std::uint32_t> mul_digits(const std::vector<std::uint32_t>& a,
                                      const std::vector<std::uint32_t>& b, int prec,
                                      std::int64_t p, int e) {
    std::vector<unsigned __int128> conv(static_cast<std::size_t>(prec), 0);
    int na = static_cast<int>(a.size()), nb = static_cast<int>(b.size());
    for (int i = 0; i < std::min(na, prec); ++i) {
        if (a[static_cast<std::size_t>(i)] == 0) continue;
        unsigned __int128 ai = a[static_cast<std::size_t>(i)];
        int jmax = std::min(nb, prec - i);
        for (int j = 0; j < jmax; ++j)
            conv[static_cast<std::size_t>(i + j)] += ai * b[static_cast<std::size_t>(j)];
    }
    std::vector<std::uint32_t> out(static_cast<std::size_t>(prec), 0);
    unsigned __int128 up = static_cast<unsigned __int128>(p);
    for (int i = 0; i < prec; ++i) {
        unsigned __int128 v = conv[static_cast<std::size_t>(i)];
        unsigned __int128 q = v / up;
        out[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(v % up);
        if (i + e < prec) conv[static_cast<std::size_t>(i + e)] += q;
    }
    return out;
}

}  // namespace

PadicElement operator*(const PadicElement& a, const PadicElement& b) {
    a.check_same(b);
    int prec = std::min(a.precision(), b.precision());
    PadicElement r;
    r.ctx_ = a.ctx_;
    r.digits_ = mul_digits(a.digits_, b.digits_, prec, a.ctx_.p, a.ctx_.e);
    return r;
}

PadicElement PadicElement::mul_gain(const PadicElement& b) const {
    check_same(b);
    int prec = std::min({precision() + b.valuation_floor(), b.precision() + valuation_floor(),
                         ctx_.max_precision});
    PadicElement r;
    r.ctx_ = ctx_;
    r.digits_ = mul_digits(digits_, b.digits_, prec, ctx_.p, ctx_.e);
    return r;
}

PadicElement PadicElement::shift_up(int n) const {
    if (n == 0) return *this;
    if (n < 0) throw std::invalid_argument("shift_up: negative shift");
    int prec = std::min(precision() + n, ctx_.max_precision);
    PadicElement r = zero(ctx_, prec);
    for (int i = 0; i + n < prec && i < precision(); ++i)
        r.digits_[static_cast<std::size_t>(i + n)] = digits_[static_cast<std::size_t>(i)];
    return r;
}

PadicElement PadicElement::unit_inverse() const {
    if (precision() == 0) throw PrecisionExhausted("unit_inverse: no known digits");
    if (digits_[0] == 0) throw NotAUnit("unit_inverse: valuation is positive");
    int prec = precision();
    std::int64_t inv0 = unit_inverse_mod_p(digits_[0], ctx_.p);
    std::vector<std::uint32_t> u;
    u.reserve(static_cast<std::size_t>(prec));
    u.push_back(static_cast<std::uint32_t>(inv0));
    for (int j = 1; j < prec; ++j) {
        // residual digit of 1 - x*u at position j determines the next digit
        auto prod = mul_digits(digits_, u, j + 1, ctx_.p, ctx_.e);
        std::int64_t t = (j == 0 ? 1 : 0) - static_cast<std::int64_t>(prod[static_cast<std::size_t>(j)]);
        t %= ctx_.p;
        if (t < 0) t += ctx_.p;
        u.push_back(static_cast<std::uint32_t>((t * inv0) % ctx_.p));
    }
    PadicElement r;
    r.ctx_ = ctx_;
    r.digits_ = std::move(u);
    return r;
}

PadicElement PadicElement::divide_uniformizer_power(int h) const {
    if (h == 0) return *this;
    if (h < 0) throw std::invalid_argument("divide_uniformizer_power: negative power");
    if (precision() <= h)
        throw PrecisionExhausted("divide_uniformizer_power: precision " + std::to_string(precision()) +
                                 " <= " + std::to_string(h));
    for (int i = 0; i < h; ++i)
        if (digits_[static_cast<std::size_t>(i)] != 0)
            throw NotDivisible("divide_uniformizer_power: nonzero digit at position " + std::to_string(i));
    PadicElement r;
    r.ctx_ = ctx_;
    r.digits_.assign(digits_.begin() + h, digits_.end());
    return r;
}

bool PadicElement::congruent(const PadicElement& other, int ndigits) const {
    check_same(other);
    if (ndigits > precision() || ndigits > other.precision()) return false;
    for (int i = 0; i < ndigits; ++i)
        if (digits_[static_cast<std::size_t>(i)] != other.digits_[static_cast<std::size_t>(i)]) return false;
    return true;
}

bool PadicElement::operator==(const PadicElement& other) const {
    return ctx_ == other.ctx_ && digits_ == other.digits_;
}

std::string PadicElement::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < digits_.size(); ++i) {
        if (i) os << " ";
        os << digits_[i];
    }
    os << "]~" << precision();
    return os.str();
}

Eigenvalue::Eigenvalue(int h_, PadicElement unit_) : h(h_), unit(std::move(unit_)) {
    if (h < 0) throw std::invalid_argument("Eigenvalue: negative valuation");
    if (unit.precision() == 0 || unit.digit(0) == 0)
        throw std::invalid_argument("Eigenvalue: unit part must have valuation 0");
}

Eigenvalue Eigenvalue::from_int(const PadicContext& ctx, std::int64_t value) {
    if (value == 0) throw std::invalid_argument("Eigenvalue: alpha must be nonzero");
    int h = 0;
    while (value % ctx.p == 0) {
        value /= ctx.p;
        h += ctx.e;
    }
    return Eigenvalue(h, PadicElement::from_int(ctx, value));
}

PadicElement Eigenvalue::as_element(int precision) const {
    return unit.reduced(std::max(precision - h, 0)).shift_up(h).zero_padded(precision);
}

PadicElement divide_exact(const PadicElement& x, const Eigenvalue& alpha) {
    PadicElement shifted = x.divide_uniformizer_power(alpha.h);
    PadicElement inv = alpha.unit.reduced(shifted.precision()).unit_inverse();
    return shifted * inv;
}

}  // namespace eigenlift
