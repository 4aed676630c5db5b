#pragma once

// Integer matrix types for the monoid acting on coefficient modules:
// 3x3 elements for the rank-3 track (Iwahori elements together with the two
// diagonal dilation elements pi1 = diag(1,p,p), pi2 = diag(1,1,p)), and pairs
// of 2x2 matrices for the two-factor track.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace eigenlift {

struct NonIwahori : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Mat3 {
    std::array<std::array<std::int64_t, 3>, 3> a{};

    static Mat3 identity();
    static Mat3 diag(std::int64_t d1, std::int64_t d2, std::int64_t d3);

    std::int64_t& operator()(int i, int j) { return a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    std::int64_t operator()(int i, int j) const { return a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

    friend Mat3 operator*(const Mat3& x, const Mat3& y);
    auto operator<=>(const Mat3&) const = default;

    std::int64_t det() const;
    /// Plain 2x2 minor: delete row i, column j (1-based), no cofactor sign.
    std::int64_t minor(int i, int j) const;
    /// Integral inverse; requires det = +-1.
    Mat3 inverse() const;
    bool is_identity() const { return *this == identity(); }
    std::string str() const;
};

struct Mat2 {
    std::array<std::array<std::int64_t, 2>, 2> a{};

    static Mat2 identity();
    static Mat2 diag(std::int64_t d1, std::int64_t d2);

    std::int64_t& operator()(int i, int j) { return a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    std::int64_t operator()(int i, int j) const { return a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

    friend Mat2 operator*(const Mat2& x, const Mat2& y);
    bool operator==(const Mat2&) const = default;

    std::int64_t det() const { return a[0][0] * a[1][1] - a[0][1] * a[1][0]; }
    Mat2 inverse() const;
    bool is_identity() const { return *this == identity(); }
    std::string str() const;
};

enum class SigmaKind { Iwahori, Pi1, Pi2 };

/// An element of the acting monoid on the rank-3 side. Iwahori elements are
/// integral, upper-triangular mod p with unit determinant; Pi1/Pi2 are the
/// fixed dilation matrices.
struct GroupElement {
    Mat3 m;
    SigmaKind kind = SigmaKind::Iwahori;

    static GroupElement iwahori(const Mat3& g, std::int64_t p);
    static GroupElement pi1(std::int64_t p);
    static GroupElement pi2(std::int64_t p);

    bool operator==(const GroupElement&) const = default;
};

bool is_iwahori3(const Mat3& g, std::int64_t p);

/// Element of the two-factor monoid: a pair of 2x2 matrices, each integral
/// and upper-triangular mod p. PiP scales the second factor, PiPbar the first.
struct Gl2Element {
    Mat2 first, second;
    enum class Kind { Iwahori, PiP, PiPbar } kind = Kind::Iwahori;

    static Gl2Element iwahori(const Mat2& f, const Mat2& s, std::int64_t p);
    static Gl2Element pi_p(std::int64_t p);      // [id, diag(1,p)]
    static Gl2Element pi_pbar(std::int64_t p);   // [diag(1,p), id]

    bool operator==(const Gl2Element&) const = default;
};

bool is_iwahori2(const Mat2& g, std::int64_t p);

}  // namespace eigenlift
