#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <compare>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace bilie {

/// Exact element of Q(i): re + im*i with GMP rationals.
class GaussRat {
public:
    GaussRat() = default;
    GaussRat(int v) : re_(v) {}
    GaussRat(long v) : re_(v) {}
    GaussRat(const mpq_class& r) : re_(r) {}
    GaussRat(const mpq_class& r, const mpq_class& i) : re_(r), im_(i) {}
    GaussRat(long num, long den) : re_(num, den) { re_.canonicalize(); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_integer() const;

    GaussRat conj() const { return GaussRat(re_, -im_); }
    GaussRat operator-() const { return GaussRat(-re_, -im_); }

    GaussRat& operator+=(const GaussRat& o);
    GaussRat& operator-=(const GaussRat& o);
    GaussRat& operator*=(const GaussRat& o);
    GaussRat& operator/=(const GaussRat& o);

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }

    friend bool operator==(const GaussRat& a, const GaussRat& b)
    {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

    /// Lexicographic order on (re, im); used for canonical sorting only.
    friend bool operator<(const GaussRat& a, const GaussRat& b)
    {
        if (a.re_ != b.re_) return a.re_ < b.re_;
        return a.im_ < b.im_;
    }
    friend bool operator>(const GaussRat& a, const GaussRat& b) { return b < a; }
    friend bool operator<=(const GaussRat& a, const GaussRat& b) { return !(b < a); }
    friend bool operator>=(const GaussRat& a, const GaussRat& b) { return !(a < b); }

    /// Largest bit length among the four numerators and denominators.
    std::size_t bit_length() const;

    /// "3/4", "-1/2+2i", "i", "1/3-1/5i".
    std::string str() const;
    static GaussRat parse(const std::string& s);

    std::size_t hash() const;

private:
    mpq_class re_;
    mpq_class im_;
};

std::ostream& operator<<(std::ostream& os, const GaussRat& x);

GaussRat imag_unit();

/// Exact square root in Q(i) if it exists (principal branch is not promised).
bool exact_sqrt(const GaussRat& x, GaussRat& out);

using Scalar = GaussRat;

} // namespace bilie

template <>
struct std::hash<bilie::GaussRat> {
    std::size_t operator()(const bilie::GaussRat& x) const { return x.hash(); }
};

namespace Eigen {
template <>
struct NumTraits<bilie::GaussRat> : GenericNumTraits<bilie::GaussRat> {
    using Real = bilie::GaussRat;
    using NonInteger = bilie::GaussRat;
    using Nested = bilie::GaussRat;
    using Literal = bilie::GaussRat;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 4,
        AddCost = 16,
        MulCost = 32
    };
    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }
};
} // namespace Eigen
