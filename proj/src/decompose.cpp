#include "liealg/decompose.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace liealg {

namespace {

Vec flatten(const Matrix& m) {
    Vec v(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v[i * m.cols() + j] = m.at(i, j);
    return v;
}

/// Evaluate p at a matrix argument.
Matrix poly_at(const Poly& p, const Matrix& m) {
    const std::size_t n = m.rows();
    Matrix acc(n, n);
    Matrix pw = Matrix::identity(n);
    for (std::size_t k = 0; k <= static_cast<std::size_t>(std::max(p.degree(), 0)); ++k) {
        if (p.degree() < 0) break;
        Scalar c = p.coeff(k);
        if (!c.is_zero()) acc += c * pw;
        if (k + 1 <= static_cast<std::size_t>(p.degree())) pw = pw * m;
    }
    return acc;
}

Subspace column_space(const Matrix& m) {
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        Vec c(m.rows());
        for (std::size_t i = 0; i < m.rows(); ++i) c[i] = m.at(i, j);
        if (!is_zero_vec(c)) cols.push_back(std::move(c));
    }
    return Subspace::span(m.rows(), cols);
}

bool is_ideal(const LieAlgebra& L, const Subspace& I) {
    return I.contains(bracket_span(L, Subspace::full(L.dim()), I));
}

/// xorshift-style deterministic small-coefficient generator for probes.
struct ProbeRng {
    std::uint64_t s = 0x9e3779b97f4a7c15ull;
    std::uint64_t next() {
        s ^= s << 13; s ^= s >> 7; s ^= s << 17;
        return s;
    }
    long small() { return static_cast<long>(next() % 5) - 2; }   // -2..2
};

} // namespace

Poly minimal_polynomial(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("minimal_polynomial: non-square");
    const std::size_t n = m.rows();
    std::vector<Vec> powers{flatten(Matrix::identity(n))};
    Matrix pw = Matrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        pw = pw * m;
        Vec target = flatten(pw);
        Matrix sys(n * n, powers.size());
        for (std::size_t c = 0; c < powers.size(); ++c)
            for (std::size_t r = 0; r < n * n; ++r) sys.at(r, c) = powers[c][r];
        LinearSolution sol = solve_linear(sys, target);
        if (sol.particular) {
            std::vector<Scalar> coeffs(k + 1);
            for (std::size_t j = 0; j < k; ++j) coeffs[j] = -(*sol.particular)[j];
            coeffs[k] = Scalar(1);
            return Poly(std::move(coeffs));
        }
        powers.push_back(std::move(target));
    }
    throw std::logic_error("minimal_polynomial: no dependence up to degree n");
}

DecompositionVerdict is_decomposable(const LieAlgebra& L) {
    return is_decomposable(L, L.field());
}

DecompositionVerdict is_decomposable(const LieAlgebra& L, FieldSemantics semantics) {
    const std::size_t n = L.dim();
    std::vector<Matrix> cen = centroid(L);
    const std::size_t d = cen.size();
    DecompositionVerdict out;
    if (d == 1) {
        out.kind = DecompKind::Indecomposable;
        out.detail = "centroid is one-dimensional";
        return out;
    }

    // Regular representation of the centroid and its trace-form radical
    // (char 0: rad = radical of the form tr(L_x L_y)). A semisimple quotient
    // of dimension 1 means the centroid is local: no nontrivial idempotents
    // over any extension.
    {
        Matrix basis_mat(n * n, d);
        for (std::size_t c = 0; c < d; ++c) {
            Vec f = flatten(cen[c]);
            for (std::size_t r = 0; r < n * n; ++r) basis_mat.at(r, c) = f[r];
        }
        std::vector<Matrix> left_mult;
        left_mult.reserve(d);
        bool closed = true;
        for (std::size_t i = 0; i < d && closed; ++i) {
            Matrix lm(d, d);
            for (std::size_t j = 0; j < d; ++j) {
                LinearSolution sol = solve_linear(basis_mat, flatten(cen[i] * cen[j]));
                if (!sol.particular) { closed = false; break; }
                for (std::size_t r = 0; r < d; ++r) lm.at(r, j) = (*sol.particular)[r];
            }
            left_mult.push_back(std::move(lm));
        }
        if (closed) {
            Matrix form(d, d);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = i; j < d; ++j) {
                    Scalar t = trace(left_mult[i] * left_mult[j]);
                    form.at(i, j) = t;
                    form.at(j, i) = t;
                }
            if (rank(form) == 1) {
                out.kind = DecompKind::Indecomposable;
                out.detail = "centroid is a local ring (semisimple quotient of dimension 1)";
                return out;
            }
        }
    }

    // Probe elements: basis, pairwise sums, then seeded random combinations.
    std::vector<Matrix> probes = cen;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) probes.push_back(cen[i] + cen[j]);
    ProbeRng rng;
    for (int t = 0; t < 40; ++t) {
        Matrix combo(n, n);
        for (std::size_t i = 0; i < d; ++i) combo += Scalar(rng.small()) * cen[i];
        if (!combo.is_zero()) probes.push_back(std::move(combo));
    }

    const bool complex_like = semantics == FieldSemantics::ComplexLike;
    std::string extension_factor;
    bool certified_extension_irreducible = true;   // all residuals were R-irreducible

    for (const Matrix& phi : probes) {
        Poly m = minimal_polynomial(phi);
        if (m.degree() < 2) continue;

        // K-roots of the minimal polynomial, with multiplicity.
        std::vector<std::pair<Scalar, int>> roots;
        Poly residual = m;
        if (complex_like) {
            roots = gaussian_roots(m);
        } else if (m.has_real_coeffs()) {
            for (const auto& [r, mult] : rational_roots(m)) roots.emplace_back(Scalar(r), mult);
        }
        for (const auto& [r, mult] : roots) {
            Poly lin({-r, Scalar(1)});
            for (int k = 0; k < mult; ++k) residual = divmod(residual, lin).first;
        }

        // Coprime split (t - r)^mult vs the rest -> idempotent.
        if (!roots.empty() && (roots.size() >= 2 || residual.degree() >= 1)) {
            const auto& [r, mult] = roots.front();
            Poly g = Poly::constant(Scalar(1));
            Poly lin({-r, Scalar(1)});
            for (int k = 0; k < mult; ++k) g = g * lin;
            Poly h = divmod(m, g).first;
            auto [gc, u, v] = poly_xgcd(g, h);
            if (gc.degree() == 0) {
                Matrix eps = poly_at(u * g, phi);
                Matrix id = Matrix::identity(n);
                if (!(eps.is_zero() || eps == id) && eps * eps == eps) {
                    Subspace I = column_space(eps);
                    Subspace J = column_space(id - eps);
                    bool ok = I.dim() > 0 && J.dim() > 0 && I.dim() + J.dim() == n &&
                              I.intersect(J).dim() == 0 && is_ideal(L, I) && is_ideal(L, J) &&
                              bracket_span(L, I, J).dim() == 0;
                    if (ok) {
                        out.kind = DecompKind::Decomposable;
                        out.witness = std::make_pair(I, J);
                        out.detail = "idempotent from minimal polynomial split at root " +
                                     roots.front().first.str();
                        return out;
                    }
                }
            }
        }

        // No K-split from this probe; classify the residual over the modeled field.
        if (residual.degree() >= 2) {
            Poly s = residual;
            Poly sf = poly_gcd(s, s.derivative());
            if (sf.degree() >= 1) s = divmod(s, sf).first;   // squarefree part
            if (s.degree() >= 2) {
                if (complex_like) {
                    // Over C the squarefree residual always splits.
                    if (extension_factor.empty()) extension_factor = s.str();
                    certified_extension_irreducible = false;
                } else if (s.degree() == 2 && s.has_real_coeffs()) {
                    Scalar disc = s.coeff(1) * s.coeff(1) - Scalar(4) * s.coeff(2) * s.coeff(0);
                    if (disc.re() > 0) {
                        // splits over R (irrational real roots)
                        if (extension_factor.empty()) extension_factor = s.str();
                        certified_extension_irreducible = false;
                    }
                    // disc < 0: irreducible over R as well; no split from here
                } else {
                    // squarefree residual of degree >= 3 always splits over R
                    if (extension_factor.empty()) extension_factor = s.str();
                    certified_extension_irreducible = false;
                }
            }
        }
    }

    if (!extension_factor.empty()) {
        out.kind = DecompKind::IndecomposableOverKOnly;
        out.detail = "irreducible-over-K factor splits over the modeled field: " + extension_factor;
        return out;
    }
    if (certified_extension_irreducible) {
        out.kind = DecompKind::Indecomposable;
        out.detail = "centroid extensions certified irreducible over the modeled field";
        return out;
    }
    out.kind = DecompKind::IndecomposableOverKOnly;
    out.detail = "no exact idempotent found; centroid semisimple quotient exceeds K";
    return out;
}

} // namespace liealg
