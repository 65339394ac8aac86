#include "liealg/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace liealg {

using boost::multiprecision::mpz_int;

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

bool Poly::has_real_coeffs() const {
    return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_real(); });
}

Scalar Poly::eval(const Scalar& x) const {
    Scalar acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Scalar> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = Scalar(static_cast<long>(k)) * c_[k];
    return Poly(std::move(d));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    Scalar inv = Scalar(1) / leading();
    return inv * *this;
}

Poly Poly::operator-() const {
    std::vector<Scalar> d(c_);
    for (auto& x : d) x = -x;
    return Poly(std::move(d));
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Scalar> d(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < d.size(); ++k) d[k] = a.coeff(k) + b.coeff(k);
    return Poly(std::move(d));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Scalar> d(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            if (!b.c_[j].is_zero()) d[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(d));
}

Poly operator*(const Scalar& c, const Poly& p) {
    std::vector<Scalar> d(p.c_);
    for (auto& x : d) x *= c;
    return Poly(std::move(d));
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        if (c_[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (k == 0 || !(c_[k].is_one())) os << "(" << c_[k] << ")";
        if (k >= 1) os << var;
        if (k >= 2) os << "^" << k;
    }
    return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("poly divmod by zero");
    const int db = b.degree();
    if (a.degree() < db) return {Poly(), a};
    std::vector<Scalar> r = a.coeffs();
    std::vector<Scalar> q(a.degree() - db + 1);
    Scalar lead_inv = Scalar(1) / b.leading();
    auto deg_of = [&r]() {
        int d = static_cast<int>(r.size()) - 1;
        while (d >= 0 && r[d].is_zero()) --d;
        return d;
    };
    int dr = deg_of();
    while (dr >= db) {
        Scalar c = r[dr] * lead_inv;
        q[dr - db] = c;
        for (int k = 0; k <= db; ++k) r[dr - db + k] -= c * b.coeff(k);
        dr = deg_of();
    }
    r.resize(static_cast<std::size_t>(dr + 1));
    return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::tuple<Poly, Poly, Poly> poly_xgcd(const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b;
    Poly u0 = Poly::constant(Scalar(1)), u1;
    Poly v0, v1 = Poly::constant(Scalar(1));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        Poly u = u0 - q * u1;
        Poly v = v0 - q * v1;
        r0 = std::move(r1); r1 = std::move(r);
        u0 = std::move(u1); u1 = std::move(u);
        v0 = std::move(v1); v1 = std::move(v);
    }
    if (!r0.is_zero()) {
        Scalar inv = Scalar(1) / r0.leading();
        r0 = inv * r0; u0 = inv * u0; v0 = inv * v0;
    }
    return {r0, u0, v0};
}

namespace {

int sign(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

/// Sign of p at +inf (plus) or -inf.
int sign_at_infinity(const Poly& p, bool plus) {
    int s = sign(p.leading().re());
    if (!plus && p.degree() % 2 == 1) s = -s;
    return s;
}

std::vector<Poly> sturm_chain(const Poly& p) {
    std::vector<Poly> chain{p, p.derivative()};
    while (!chain.back().is_zero()) {
        Poly r = divmod(chain[chain.size() - 2], chain.back()).second;
        chain.push_back(-r);
    }
    chain.pop_back();
    return chain;
}

int variations(const std::vector<Poly>& chain, bool plus) {
    int v = 0, prev = 0;
    for (const Poly& q : chain) {
        if (q.is_zero()) continue;
        int s = sign_at_infinity(q, plus);
        if (s != 0 && prev != 0 && s != prev) ++v;
        if (s != 0) prev = s;
    }
    return v;
}

} // namespace

int count_real_roots(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("count_real_roots: zero polynomial");
    if (!p.has_real_coeffs()) throw std::invalid_argument("count_real_roots: nonreal coefficients");
    if (p.degree() == 0) return 0;
    auto chain = sturm_chain(p);
    return variations(chain, false) - variations(chain, true);
}

bool real_root_exists(const Poly& p) { return count_real_roots(p) > 0; }

namespace {

std::vector<mpz_int> positive_divisors(mpz_int n) {
    if (n < 0) n = -n;
    std::vector<mpz_int> out;
    if (n == 0) return out;
    for (mpz_int d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n) out.push_back(n / d);
        }
    }
    return out;
}

/// Primitive integer coefficients of a rational-coefficient poly.
std::vector<mpz_int> primitive_int_coeffs(const Poly& p) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    using boost::multiprecision::gcd;
    using boost::multiprecision::lcm;
    mpz_int l = 1;
    for (const Scalar& c : p.coeffs()) l = lcm(l, denominator(c.re()));
    std::vector<mpz_int> z;
    for (const Scalar& c : p.coeffs()) z.push_back(numerator(c.re()) * (l / denominator(c.re())));
    mpz_int g = 0;
    for (const auto& c : z) g = gcd(g, c);
    if (g > 1)
        for (auto& c : z) c /= g;
    return z;
}

std::optional<Rational> rational_sqrt(const Rational& r) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    using boost::multiprecision::sqrt;
    if (r < 0) return std::nullopt;
    mpz_int n = numerator(r), d = denominator(r);
    mpz_int sn = sqrt(n), sd = sqrt(d);
    if (sn * sn != n || sd * sd != d) return std::nullopt;
    return Rational(sn) / Rational(sd);
}

} // namespace

std::vector<std::pair<Rational, int>> rational_roots(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
    if (!p.has_real_coeffs()) throw std::invalid_argument("rational_roots: nonreal coefficients");
    std::vector<std::pair<Rational, int>> out;
    Poly q = p;
    // strip powers of t
    int t_mult = 0;
    while (!q.is_zero() && q.coeff(0).is_zero()) {
        std::vector<Scalar> shifted(q.coeffs().begin() + 1, q.coeffs().end());
        q = Poly(std::move(shifted));
        ++t_mult;
    }
    if (t_mult > 0) out.emplace_back(Rational(0), t_mult);
    if (q.degree() < 1) return out;
    auto z = primitive_int_coeffs(q);
    auto ps = positive_divisors(z.front());
    auto qs = positive_divisors(z.back());
    std::vector<Rational> candidates;
    for (const auto& a : ps)
        for (const auto& b : qs) {
            Rational c = Rational(a) / Rational(b);
            candidates.push_back(c);
            candidates.push_back(-c);
        }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const Rational& c : candidates) {
        if (!q.eval(Scalar(c)).is_zero()) continue;
        int mult = 0;
        Poly lin({Scalar(-c), Scalar(1)});
        while (q.eval(Scalar(c)).is_zero()) {
            q = divmod(q, lin).first;
            ++mult;
            if (q.is_zero()) break;
        }
        out.emplace_back(c, mult);
        if (q.degree() < 1) break;
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

std::optional<Scalar> gaussian_sqrt(const Scalar& z) {
    const Rational& c = z.re();
    const Rational& d = z.im();
    if (d == 0) {
        if (c >= 0) {
            auto s = rational_sqrt(c);
            if (s) return Scalar(*s);
            return std::nullopt;
        }
        auto s = rational_sqrt(-c);
        if (s) return Scalar(Rational(0), *s);
        return std::nullopt;
    }
    auto n = rational_sqrt(c * c + d * d);
    if (!n) return std::nullopt;
    auto x2 = (c + *n) / 2;
    auto x = rational_sqrt(x2);
    if (!x || *x == 0) return std::nullopt;
    Rational y = d / (2 * *x);
    return Scalar(*x, y);
}

std::vector<std::pair<Scalar, int>> gaussian_roots(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("gaussian_roots: zero polynomial");
    std::vector<std::pair<Scalar, int>> out;
    Poly q = p;
    if (q.has_real_coeffs()) {
        for (const auto& [r, m] : rational_roots(q)) {
            out.emplace_back(Scalar(r), m);
            Poly lin({Scalar(-r), Scalar(1)});
            for (int k = 0; k < m; ++k) q = divmod(q, lin).first;
        }
    }
    if (q.degree() == 2) {
        // quadratic formula in Q(i)
        Scalar a = q.coeff(2), b = q.coeff(1), c = q.coeff(0);
        Scalar disc = b * b - Scalar(4) * a * c;
        auto s = gaussian_sqrt(disc);
        if (s) {
            Scalar r1 = (-b + *s) / (Scalar(2) * a);
            Scalar r2 = (-b - *s) / (Scalar(2) * a);
            out.emplace_back(r1, 1);
            if (r2 != r1) out.emplace_back(r2, 1);
            else out.back().second = 2;
        }
    } else if (q.degree() == 1) {
        out.emplace_back(-q.coeff(0) / q.coeff(1), 1);
    }
    return out;
}

} // namespace liealg
