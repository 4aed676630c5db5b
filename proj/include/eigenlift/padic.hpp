#pragma once

// Exact arithmetic in O_L = Z[pi]/(pi^e - p) modulo pi^M, with per-value
// guaranteed precision. A value is stored as its first K base-pi digits
// (each digit in [0, p)); K is the number of digits that are guaranteed,
// never the number that happen to be computed. All reported precisions are
// floors: an operation may know more than it claims, never less.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace eigenlift {

struct ContextMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotDivisible : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotAUnit : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PrecisionExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Fixes the ring: prime p, ramification index e (pi^e = p exactly) and the
/// working precision cap M in pi-digits. e = 1 gives L = Q_p with pi = p.
struct PadicContext {
    std::int64_t p = 0;
    int e = 1;
    int max_precision = 0;

    PadicContext() = default;
    PadicContext(std::int64_t p_, int e_, int max_precision_);

    bool operator==(const PadicContext&) const = default;
    bool compatible(const PadicContext& other) const { return *this == other; }
};

class PadicElement {
public:
    PadicElement() = default;

    static PadicElement zero(const PadicContext& ctx, int precision);
    static PadicElement from_int(const PadicContext& ctx, std::int64_t value);
    static PadicElement from_int(const PadicContext& ctx, std::int64_t value, int precision);
    static PadicElement from_digits(const PadicContext& ctx, std::vector<std::uint32_t> digits,
                                    int precision);
    static PadicElement uniformizer_power(const PadicContext& ctx, int n, int precision);
    static PadicElement one(const PadicContext& ctx) { return from_int(ctx, 1); }

    const PadicContext& context() const { return ctx_; }
    int precision() const { return static_cast<int>(digits_.size()); }

    /// Exact valuation if it is visible below the precision floor, otherwise
    /// nullopt, to be read as ">= precision()".
    std::optional<int> valuation() const;
    /// min(valuation, precision): the provable lower bound.
    int valuation_floor() const;
    bool is_zero() const { return !valuation().has_value(); }

    const std::vector<std::uint32_t>& digits() const { return digits_; }
    std::uint32_t digit(int i) const { return digits_[static_cast<std::size_t>(i)]; }

    /// Forget digits beyond new_precision.
    PadicElement reduced(int new_precision) const;
    /// Extend with zero digits up to new_precision. This selects a concrete
    /// representative; the result is exact knowledge of that representative.
    PadicElement zero_padded(int new_precision) const;

    PadicElement operator-() const;
    friend PadicElement operator+(const PadicElement& a, const PadicElement& b);
    friend PadicElement operator-(const PadicElement& a, const PadicElement& b);
    /// Product at precision min(Ka, Kb).
    friend PadicElement operator*(const PadicElement& a, const PadicElement& b);

    /// Product claiming min(Ka + vfloor(b), Kb + vfloor(a)) digits. Used where
    /// a coefficient's valuation certifies extra digits of a sum, e.g. the
    /// expansion tails of the monoid action.
    PadicElement mul_gain(const PadicElement& b) const;

    /// Multiply by pi^n (n >= 0): digits shift up, precision grows by n
    /// (capped at the context maximum).
    PadicElement shift_up(int n) const;

    PadicElement unit_inverse() const;
    /// Exact division by pi^h; requires the first h digits to vanish.
    PadicElement divide_uniformizer_power(int h) const;

    bool congruent(const PadicElement& other, int ndigits) const;
    bool operator==(const PadicElement& other) const;

    std::string str() const;

private:
    PadicContext ctx_;
    std::vector<std::uint32_t> digits_;  // exactly precision() entries, each < p

    void check_same(const PadicElement& other) const;
};

/// alpha = pi^h * unit with unit a p-adic unit; h is the pi-adic valuation.
struct Eigenvalue {
    int h = 0;
    PadicElement unit;

    Eigenvalue() = default;
    Eigenvalue(int h_, PadicElement unit_);
    static Eigenvalue from_int(const PadicContext& ctx, std::int64_t value);

    int valuation() const { return h; }
    bool is_unit() const { return h == 0; }
    PadicElement as_element(int precision) const;
};

/// Exact division x / alpha. Requires v(x) >= h up to the guarantee of x;
/// result precision is precision(x) - h.
PadicElement divide_exact(const PadicElement& x, const Eigenvalue& alpha);

}  // namespace eigenlift
