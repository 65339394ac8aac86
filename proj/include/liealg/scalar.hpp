#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <iosfwd>
#include <string>

namespace liealg {

using Rational = boost::multiprecision::mpq_rational;

/// Which field an algebra (or a verification run) lives over. Exact data is
/// always rational or Gaussian-rational; the semantics tag tells the few
/// field-sensitive judgements (pencil nil-independence, decomposability)
/// whether to reason as over R or over C.
enum class FieldSemantics { RealLike, ComplexLike };

/// Element of Q or Q(i), stored as re + im*i with exact rationals.
/// Values are always canonical: mpq_rational keeps gcd-reduced,
/// positive-denominator form, so equality is plain comparison.
class Scalar {
public:
    Scalar() : re_(0), im_(0) {}
    Scalar(int v) : re_(v), im_(0) {}
    Scalar(long v) : re_(v), im_(0) {}
    Scalar(const Rational& v) : re_(v), im_(0) {}
    Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static Scalar i() { return Scalar(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    Scalar conj() const { return Scalar(re_, -im_); }
    /// re^2 + im^2 (a nonnegative rational, zero iff the value is zero).
    Rational norm2() const { return re_ * re_ + im_ * im_; }

    Scalar operator-() const { return Scalar(-re_, -im_); }

    Scalar& operator+=(const Scalar& o) { re_ += o.re_; im_ += o.im_; return *this; }
    Scalar& operator-=(const Scalar& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    Scalar& operator*=(const Scalar& o) {
        if (im_ == 0 && o.im_ == 0) { re_ *= o.re_; return *this; }
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r); im_ = std::move(i);
        return *this;
    }
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { a += b; return a; }
    friend Scalar operator-(Scalar a, const Scalar& b) { a -= b; return a; }
    friend Scalar operator*(Scalar a, const Scalar& b) { a *= b; return a; }
    friend Scalar operator/(Scalar a, const Scalar& b) { a /= b; return a; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Total order (real part, then imaginary); used only for canonical
    /// printing / deterministic report ordering, not field semantics.
    friend bool operator<(const Scalar& a, const Scalar& b) {
        if (a.re_ != b.re_) return a.re_ < b.re_;
        return a.im_ < b.im_;
    }

    /// Renders "3", "-1/2", "i", "1+2i", "1/2-i" etc.
    std::string str() const;

private:
    Rational re_, im_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Parses an integer-or-fraction literal "p" / "p/q"; throws std::invalid_argument.
Rational parse_rational(const std::string& text);

} // namespace liealg
