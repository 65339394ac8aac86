#pragma once

#include "liealg/scalar.hpp"

#include <vector>

namespace liealg {

/// Dense univariate polynomial over Q(i), coefficients low degree first.
/// The zero polynomial is the empty coefficient vector.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly constant(const Scalar& c) { return Poly(std::vector<Scalar>{c}); }
    static Poly x() { return Poly({Scalar(0), Scalar(1)}); }

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Scalar>& coeffs() const { return c_; }
    Scalar coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Scalar(0); }
    Scalar leading() const { return c_.empty() ? Scalar(0) : c_.back(); }
    bool has_real_coeffs() const;

    Scalar eval(const Scalar& x) const;
    Poly derivative() const;
    Poly monic() const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Scalar& c, const Poly& p);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    std::string str(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Scalar> c_;
};

/// Quotient and remainder of a by b (b nonzero).
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

/// Monic gcd; gcd(0, 0) = 0 (callers flag that case per the spec).
Poly poly_gcd(Poly a, Poly b);

/// Extended gcd: returns (g, u, v) with u*a + v*b = g, g monic.
std::tuple<Poly, Poly, Poly> poly_xgcd(const Poly& a, const Poly& b);

/// True iff p (nonzero, rational coefficients) has a real root.
/// Sturm's theorem: sign variations of the Sturm chain at -inf and +inf.
/// Throws std::invalid_argument on the zero polynomial or nonreal coefficients.
bool real_root_exists(const Poly& p);

/// Number of distinct real roots (same Sturm machinery).
int count_real_roots(const Poly& p);

/// All roots of p lying in Q, with multiplicity, via rational root search on
/// the primitive integer form (requires real coefficients).
std::vector<std::pair<Rational, int>> rational_roots(const Poly& p);

/// Roots of p lying in Q(i) for deg <= 2 (exact Gaussian square root);
/// for higher degree only the rational ones are found. Multiplicity included.
std::vector<std::pair<Scalar, int>> gaussian_roots(const Poly& p);

/// Exact square root in Q(i) if it exists.
std::optional<Scalar> gaussian_sqrt(const Scalar& z);

} // namespace liealg
