#include <random>

#include "doctest.h"
#include "eigenlift/padic.hpp"

using namespace eigenlift;

namespace {

// oracle: value of the digit vector as a plain integer, for e = 1 contexts
long long digits_to_int(const PadicElement& x) {
    long long v = 0, pw = 1;
    for (int i = 0; i < x.precision(); ++i) {
        v += pw * x.digit(i);
        pw *= x.context().p;
    }
    return v;
}

long long pow_ll(long long b, int n) {
    long long r = 1;
    while (n-- > 0) r *= b;
    return r;
}

}  // namespace

TEST_SUITE_BEGIN("padic");

TEST_CASE("valuation basics") {
    PadicContext q3(3, 1, 10);
    CHECK(PadicElement::from_int(q3, 3).valuation() == 1);
    CHECK(PadicElement::zero(q3, 10).valuation() == std::nullopt);
    CHECK(PadicElement::zero(q3, 10).valuation_floor() == 10);  // ">= 10"
    PadicContext ram(3, 2, 10);
    CHECK(PadicElement::uniformizer_power(ram, 1, 10).valuation() == 1);
    CHECK(PadicElement::from_int(ram, 3).valuation() == 2);  // v(p) = e
}

TEST_CASE("add and mul frozen examples") {
    PadicContext q3(3, 1, 10);
    auto one5 = PadicElement::from_int(q3, 1, 5);
    auto two5 = PadicElement::from_int(q3, 2, 5);
    auto sum = one5 + two5;
    CHECK(sum.precision() == 5);
    CHECK(digits_to_int(sum) == 3);

    auto x = PadicElement::from_int(q3, 7, 8);
    auto prod = x * PadicElement::one(q3);
    CHECK(prod.precision() == 8);
    CHECK(digits_to_int(prod) == 7);

    // precision of a product is the min of the operand precisions
    auto a = PadicElement::from_int(q3, 3, 5);
    auto b = PadicElement::from_int(q3, 3, 4);
    auto ab = a * b;
    CHECK(ab.precision() == 4);
    CHECK(digits_to_int(ab) == 9);
}

TEST_CASE("mul precision rule on exhaustive small cases") {
    PadicContext q3(3, 1, 6);
    for (int va = 0; va <= 3; ++va)
        for (int vb = 0; vb <= 3; ++vb)
            for (int ka = va + 1; ka <= 6; ++ka)
                for (int kb = vb + 1; kb <= 6; ++kb) {
                    auto a = PadicElement::from_int(q3, 2 * pow_ll(3, va), ka);
                    auto b = PadicElement::from_int(q3, pow_ll(3, vb), kb);
                    auto ab = a * b;
                    int k = std::min(ka, kb);
                    CHECK(ab.precision() == k);
                    CHECK(digits_to_int(ab) == (2 * pow_ll(3, va + vb)) % pow_ll(3, k));
                }
}

TEST_CASE("divide_exact frozen examples") {
    PadicContext q3(3, 1, 10);
    auto alpha3 = Eigenvalue::from_int(q3, 3);
    auto x = PadicElement::from_int(q3, 9, 6);
    auto y = divide_exact(x, alpha3);
    CHECK(y.precision() == 5);
    CHECK(digits_to_int(y) == 3);

    CHECK_THROWS_AS(divide_exact(PadicElement::from_int(q3, 1, 6), alpha3), NotDivisible);

    // x = 2*3^2 mod 3^7, alpha = 3^2 * 2: quotient is 1 at precision 5
    auto alpha = Eigenvalue(2, PadicElement::from_int(q3, 2));
    auto x2 = PadicElement::from_int(q3, 2 * 9, 7);
    auto y2 = divide_exact(x2, alpha);
    CHECK(y2.precision() == 5);
    CHECK(digits_to_int(y2) == 1);

    CHECK_THROWS_AS(divide_exact(PadicElement::from_int(q3, 9, 2), alpha), PrecisionExhausted);
}

TEST_CASE("unit_inverse frozen examples") {
    PadicContext q3(3, 1, 10);
    CHECK(digits_to_int(PadicElement::one(q3).unit_inverse()) == 1);
    auto inv2 = PadicElement::from_int(q3, 2, 4).unit_inverse();
    CHECK(inv2.precision() == 4);
    CHECK(digits_to_int(inv2) == 41);  // 2*41 = 82 = 1 mod 81
    CHECK_THROWS_AS(PadicElement::from_int(q3, 3, 4).unit_inverse(), NotAUnit);
}

TEST_CASE("ring axioms on random elements") {
    for (auto [p, e] : {std::pair<int, int>{3, 1}, {5, 1}, {3, 2}}) {
        PadicContext ctx(p, e, 12);
        std::mt19937_64 rng(17);
        std::uniform_int_distribution<std::int64_t> d(-4000, 4000);
        for (int i = 0; i < 200; ++i) {
            auto a = PadicElement::from_int(ctx, d(rng));
            auto b = PadicElement::from_int(ctx, d(rng));
            auto c = PadicElement::from_int(ctx, d(rng));
            CHECK((a + b) + c == a + (b + c));
            CHECK(a + b == b + a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a - a == PadicElement::zero(ctx, 12));
            CHECK(a * PadicElement::one(ctx) == a);
        }
    }
}

TEST_CASE("valuation is additive under products") {
    PadicContext ctx(5, 1, 12);
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::int64_t> d(1, 300);
    for (int i = 0; i < 200; ++i) {
        auto a = PadicElement::from_int(ctx, d(rng));
        auto b = PadicElement::from_int(ctx, d(rng));
        auto va = a.valuation(), vb = b.valuation();
        REQUIRE(va.has_value());
        REQUIRE(vb.has_value());
        if (*va + *vb < std::min(a.precision(), b.precision()))
            CHECK((a * b).valuation() == *va + *vb);
    }
}

TEST_CASE("divide_exact inverts multiplication by alpha") {
    for (auto [p, e] : {std::pair<int, int>{3, 1}, {3, 2}, {7, 1}}) {
        PadicContext ctx(p, e, 14);
        std::mt19937_64 rng(29);
        std::uniform_int_distribution<std::int64_t> d(-500, 500);
        std::uniform_int_distribution<int> dh(0, 3);
        for (int i = 0; i < 100; ++i) {
            int h = dh(rng);
            std::int64_t u = d(rng);
            if (u % p == 0) u += 1;
            Eigenvalue alpha(h, PadicElement::from_int(ctx, u));
            int ky = 14 - h - 1;
            auto y = PadicElement::from_int(ctx, d(rng), ky);
            auto x = (y * alpha.unit).shift_up(h);
            auto back = divide_exact(x, alpha);
            CHECK(back.congruent(y, ky - 0 - h >= 0 ? std::min(back.precision(), ky) : 0));
            CHECK(back.precision() >= ky - h);
        }
    }
}

TEST_CASE("uniformizer relation pi^e = p") {
    PadicContext ctx(3, 2, 12);
    auto pi = PadicElement::uniformizer_power(ctx, 1, 12);
    CHECK(pi * pi == PadicElement::from_int(ctx, 3));
    PadicContext ctx3(5, 3, 12);
    auto pi3 = PadicElement::uniformizer_power(ctx3, 1, 12);
    CHECK(pi3 * pi3 * pi3 == PadicElement::from_int(ctx3, 5));
}

TEST_CASE("mul_gain certifies valuation-shifted digits") {
    PadicContext ctx(3, 1, 20);
    auto c = PadicElement::from_int(ctx, 27);       // valuation 3, full precision
    auto x = PadicElement::from_int(ctx, 5, 4);     // 4 digits
    auto g = c.mul_gain(x);
    CHECK(g.precision() == 7);
    CHECK(digits_to_int(g) == (27LL * 5) % pow_ll(3, 7));
}

TEST_CASE("context mismatch is rejected") {
    PadicContext a(3, 1, 10), b(5, 1, 10);
    CHECK_THROWS_AS(PadicElement::from_int(a, 1) + PadicElement::from_int(b, 1), ContextMismatch);
}

TEST_SUITE_END();
