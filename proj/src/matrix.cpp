#include "eigenlift/matrix.hpp"

#include <sstream>

namespace eigenlift {

namespace {
std::int64_t mod(std::int64_t x, std::int64_t p) {
    std::int64_t r = x % p;
    return r < 0 ? r + p : r;
}
}  // namespace

Mat3 Mat3::identity() { return diag(1, 1, 1); }

Mat3 Mat3::diag(std::int64_t d1, std::int64_t d2, std::int64_t d3) {
    Mat3 m;
    m(0, 0) = d1;
    m(1, 1) = d2;
    m(2, 2) = d3;
    return m;
}

Mat3 operator*(const Mat3& x, const Mat3& y) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            __int128 s = 0;
            for (int k = 0; k < 3; ++k)
                s += static_cast<__int128>(x(i, k)) * y(k, j);
            if (s > INT64_MAX || s < INT64_MIN) throw std::overflow_error("Mat3: entry overflow");
            r(i, j) = static_cast<std::int64_t>(s);
        }
    return r;
}

std::int64_t Mat3::det() const {
    return (*this)(0, 0) * minor(1, 1) - (*this)(0, 1) * minor(1, 2) + (*this)(0, 2) * minor(1, 3);
}

std::int64_t Mat3::minor(int i, int j) const {
    int r0 = -1, r1 = -1, c0 = -1, c1 = -1;
    for (int k = 0; k < 3; ++k) {
        if (k != i - 1) (r0 < 0 ? r0 : r1) = k;
        if (k != j - 1) (c0 < 0 ? c0 : c1) = k;
    }
    return (*this)(r0, c0) * (*this)(r1, c1) - (*this)(r0, c1) * (*this)(r1, c0);
}

Mat3 Mat3::inverse() const {
    std::int64_t d = det();
    if (d != 1 && d != -1) throw std::invalid_argument("Mat3::inverse: determinant not a unit");
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            std::int64_t sign = ((i + j) % 2 == 0) ? 1 : -1;
            r(i, j) = d * sign * minor(j + 1, i + 1);
        }
    return r;
}

std::string Mat3::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < 3; ++i) {
        os << "[";
        for (int j = 0; j < 3; ++j) os << (*this)(i, j) << (j < 2 ? "," : "");
        os << "]";
    }
    os << "]";
    return os.str();
}

Mat2 Mat2::identity() { return diag(1, 1); }

Mat2 Mat2::diag(std::int64_t d1, std::int64_t d2) {
    Mat2 m;
    m(0, 0) = d1;
    m(1, 1) = d2;
    return m;
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            __int128 s = 0;
            for (int k = 0; k < 2; ++k)
                s += static_cast<__int128>(x(i, k)) * y(k, j);
            if (s > INT64_MAX || s < INT64_MIN) throw std::overflow_error("Mat2: entry overflow");
            r(i, j) = static_cast<std::int64_t>(s);
        }
    return r;
}

Mat2 Mat2::inverse() const {
    std::int64_t d = det();
    if (d != 1 && d != -1) throw std::invalid_argument("Mat2::inverse: determinant not a unit");
    Mat2 r;
    r(0, 0) = d * (*this)(1, 1);
    r(0, 1) = -d * (*this)(0, 1);
    r(1, 0) = -d * (*this)(1, 0);
    r(1, 1) = d * (*this)(0, 0);
    return r;
}

std::string Mat2::str() const {
    std::ostringstream os;
    os << "[[" << (*this)(0, 0) << "," << (*this)(0, 1) << "],[" << (*this)(1, 0) << ","
       << (*this)(1, 1) << "]]";
    return os.str();
}

bool is_iwahori3(const Mat3& g, std::int64_t p) {
    std::int64_t d = g.det();
    if (d != 1 && d != -1) return false;
    if (mod(g(1, 0), p) != 0 || mod(g(2, 0), p) != 0 || mod(g(2, 1), p) != 0) return false;
    // diagonal automatically unit mod p given det and the zero pattern
    return mod(g(0, 0), p) != 0;
}

GroupElement GroupElement::iwahori(const Mat3& g, std::int64_t p) {
    if (!is_iwahori3(g, p)) throw NonIwahori("not upper-triangular mod p with unit determinant: " + g.str());
    return GroupElement{g, SigmaKind::Iwahori};
}

GroupElement GroupElement::pi1(std::int64_t p) { return GroupElement{Mat3::diag(1, p, p), SigmaKind::Pi1}; }
GroupElement GroupElement::pi2(std::int64_t p) { return GroupElement{Mat3::diag(1, 1, p), SigmaKind::Pi2}; }

bool is_iwahori2(const Mat2& g, std::int64_t p) {
    std::int64_t d = g.det();
    if (d != 1 && d != -1) return false;
    return mod(g(1, 0), p) == 0 && mod(g(0, 0), p) != 0;
}

Gl2Element Gl2Element::iwahori(const Mat2& f, const Mat2& s, std::int64_t p) {
    if (!is_iwahori2(f, p) || !is_iwahori2(s, p))
        throw NonIwahori("pair not upper-triangular mod p with unit determinant");
    return Gl2Element{f, s, Kind::Iwahori};
}

Gl2Element Gl2Element::pi_p(std::int64_t p) {
    return Gl2Element{Mat2::identity(), Mat2::diag(1, p), Kind::PiP};
}

Gl2Element Gl2Element::pi_pbar(std::int64_t p) {
    return Gl2Element{Mat2::diag(1, p), Mat2::identity(), Kind::PiPbar};
}

}  // namespace eigenlift
