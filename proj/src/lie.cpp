#include "liealg/lie.hpp"

#include <stdexcept>

namespace liealg {

LieAlgebra::LieAlgebra(std::size_t dim, FieldSemantics field, std::string label)
    : dim_(dim), field_(field), label_(std::move(label)), c_(dim * dim, Vec(dim)) {}

LieAlgebra LieAlgebra::from_brackets(std::size_t dim, const std::vector<BracketTerm>& brackets,
                                     std::string label, FieldSemantics field) {
    LieAlgebra L(dim, field, std::move(label));
    for (const auto& b : brackets) {
        if (b.i < 1 || b.i > dim || b.j < 1 || b.j > dim || b.k < 1 || b.k > dim)
            throw std::invalid_argument("bracket index out of range");
        L.c_[(b.i - 1) * dim + (b.j - 1)][b.k - 1] += b.coeff;
        L.c_[(b.j - 1) * dim + (b.i - 1)][b.k - 1] -= b.coeff;
    }
    return L;
}

void LieAlgebra::set_basis_bracket(std::size_t i, std::size_t j, const Vec& v) {
    if (v.size() != dim_) throw std::invalid_argument("set_basis_bracket: size mismatch");
    c_[i * dim_ + j] = v;
    Vec neg(v);
    for (auto& x : neg) x = -x;
    c_[j * dim_ + i] = std::move(neg);
    if (i == j && !is_zero_vec(v)) throw std::invalid_argument("set_basis_bracket: [x,x] != 0");
}

Vec LieAlgebra::basis_vector(std::size_t i) const {
    Vec v(dim_);
    v[i] = Scalar(1);
    return v;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
    if (x.size() != dim_ || y.size() != dim_)
        throw std::invalid_argument("bracket: dimension mismatch");
    Vec out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j].is_zero()) continue;
            const Vec& cij = c_[i * dim_ + j];
            Scalar f = x[i] * y[j];
            for (std::size_t k = 0; k < dim_; ++k)
                if (!cij[k].is_zero()) out[k] += f * cij[k];
        }
    }
    return out;
}

Matrix LieAlgebra::ad(const Vec& x) const {
    Matrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        Vec col(dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            if (x[i].is_zero()) continue;
            const Vec& cij = c_[i * dim_ + j];
            for (std::size_t k = 0; k < dim_; ++k)
                if (!cij[k].is_zero()) col[k] += x[i] * cij[k];
        }
        for (std::size_t k = 0; k < dim_; ++k) m.at(k, j) = col[k];
    }
    return m;
}

Matrix LieAlgebra::ad_basis(std::size_t i) const { return ad(basis_vector(i)); }

std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> LieAlgebra::jacobi_check() const {
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j)
            for (std::size_t k = j + 1; k < dim_; ++k) {
                Vec s = bracket(basis_vector(i), basis_bracket(j, k));
                s = s + bracket(basis_vector(j), basis_bracket(k, i));
                s = s + bracket(basis_vector(k), basis_bracket(i, j));
                if (!is_zero_vec(s)) out.emplace_back(i + 1, j + 1, k + 1);
            }
    return out;
}

LieAlgebra change_basis(const LieAlgebra& L, const Matrix& P) {
    if (!P.is_square() || P.rows() != L.dim())
        throw std::invalid_argument("change_basis: wrong size");
    Matrix inv_t = inverse(P).transpose();   // throws on singular P
    LieAlgebra out(L.dim(), L.field(), L.label());
    for (std::size_t i = 0; i < L.dim(); ++i)
        for (std::size_t j = i + 1; j < L.dim(); ++j) {
            Vec u = L.bracket(P.row(i), P.row(j));
            out.set_basis_bracket(i, j, inv_t.apply(u));
        }
    return out;
}

Subspace bracket_span(const LieAlgebra& L, const Subspace& U, const Subspace& V) {
    std::vector<Vec> vs;
    for (std::size_t a = 0; a < U.dim(); ++a)
        for (std::size_t b = 0; b < V.dim(); ++b) {
            Vec w = L.bracket(U.basis_vector(a), V.basis_vector(b));
            if (!is_zero_vec(w)) vs.push_back(std::move(w));
        }
    return Subspace::span(L.dim(), vs);
}

std::vector<std::size_t> SeriesChain::dims() const {
    std::vector<std::size_t> d;
    d.reserve(terms.size());
    for (const auto& t : terms) d.push_back(t.dim());
    return d;
}

namespace {

SeriesChain iterate_series(const LieAlgebra& L, bool lower_central) {
    SeriesChain chain;
    chain.terms.push_back(Subspace::full(L.dim()));
    const Subspace full = chain.terms.front();
    while (true) {
        const Subspace& cur = chain.terms.back();
        Subspace next = lower_central ? bracket_span(L, full, cur) : bracket_span(L, cur, cur);
        if (next.dim() == cur.dim()) break;      // stabilized (nonzero) or no progress
        bool done = next.dim() == 0;
        chain.terms.push_back(std::move(next));
        if (done) break;
    }
    return chain;
}

} // namespace

SeriesChain derived_series(const LieAlgebra& L) { return iterate_series(L, false); }
SeriesChain lower_central_series(const LieAlgebra& L) { return iterate_series(L, true); }

Subspace center(const LieAlgebra& L) {
    const std::size_t n = L.dim();
    Matrix stacked(n * n, n);
    for (std::size_t i = 0; i < n; ++i) {
        Matrix a = L.ad_basis(i);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) stacked.at(i * n + r, c) = a.at(r, c);
    }
    return Subspace::span(n, kernel(stacked));
}

bool is_solvable(const LieAlgebra& L) { return derived_series(L).terms.back().dim() == 0; }

bool is_nilpotent_algebra(const LieAlgebra& L) {
    return lower_central_series(L).terms.back().dim() == 0;
}

std::size_t killing_rank(const LieAlgebra& L) {
    const std::size_t n = L.dim();
    std::vector<Matrix> ads;
    ads.reserve(n);
    for (std::size_t i = 0; i < n; ++i) ads.push_back(L.ad_basis(i));
    Matrix k(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Scalar t = trace(ads[i] * ads[j]);
            k.at(i, j) = t;
            k.at(j, i) = t;
        }
    return rank(k);
}

namespace {

/// Unknowns of an n x n operator flattened as p*n + q  <->  D(p, q).
std::vector<Matrix> unflatten(const std::vector<Vec>& flat, std::size_t n) {
    std::vector<Matrix> out;
    out.reserve(flat.size());
    for (const Vec& v : flat) {
        Matrix m(n, n);
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) m.at(p, q) = v[p * n + q];
        out.push_back(std::move(m));
    }
    return out;
}

} // namespace

std::vector<Matrix> derivation_space(const LieAlgebra& L) {
    const std::size_t n = L.dim();
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vec& cij = L.basis_bracket(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                Vec row(n * n);
                bool nonzero = false;
                for (std::size_t m = 0; m < n; ++m) {
                    if (!cij[m].is_zero()) { row[k * n + m] += cij[m]; nonzero = true; }
                    const Scalar& cmj = L.basis_bracket(m, j)[k];
                    if (!cmj.is_zero()) { row[m * n + i] -= cmj; nonzero = true; }
                    const Scalar& cim = L.basis_bracket(i, m)[k];
                    if (!cim.is_zero()) { row[m * n + j] -= cim; nonzero = true; }
                }
                if (nonzero) rows.push_back(std::move(row));
            }
        }
    if (rows.empty()) {
        std::vector<Vec> all;
        for (std::size_t s = 0; s < n * n; ++s) {
            Vec v(n * n);
            v[s] = Scalar(1);
            all.push_back(std::move(v));
        }
        return unflatten(all, n);
    }
    Matrix sys(rows.size(), n * n);
    for (std::size_t r = 0; r < rows.size(); ++r) sys.set_row(r, rows[r]);
    return unflatten(kernel(sys), n);
}

std::vector<Matrix> centroid(const LieAlgebra& L) {
    const std::size_t n = L.dim();
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vec& cij = L.basis_bracket(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                Vec row1(n * n), row2(n * n);
                bool nz1 = false, nz2 = false;
                for (std::size_t m = 0; m < n; ++m) {
                    if (!cij[m].is_zero()) {
                        row1[k * n + m] += cij[m];
                        row2[k * n + m] += cij[m];
                        nz1 = nz2 = true;
                    }
                    const Scalar& cmj = L.basis_bracket(m, j)[k];
                    if (!cmj.is_zero()) { row1[m * n + i] -= cmj; nz1 = true; }
                    const Scalar& cim = L.basis_bracket(i, m)[k];
                    if (!cim.is_zero()) { row2[m * n + j] -= cim; nz2 = true; }
                }
                if (nz1) rows.push_back(std::move(row1));
                if (nz2) rows.push_back(std::move(row2));
            }
        }
    if (rows.empty()) {
        std::vector<Vec> all;
        for (std::size_t s = 0; s < n * n; ++s) {
            Vec v(n * n);
            v[s] = Scalar(1);
            all.push_back(std::move(v));
        }
        return unflatten(all, n);
    }
    Matrix sys(rows.size(), n * n);
    for (std::size_t r = 0; r < rows.size(); ++r) sys.set_row(r, rows[r]);
    return unflatten(kernel(sys), n);
}

Subspace nilradical(const LieAlgebra& L) {
    if (!is_solvable(L)) throw std::invalid_argument("nilradical: algebra is not solvable");
    const std::size_t n = L.dim();
    std::vector<Matrix> ad_basis;
    ad_basis.reserve(n);
    for (std::size_t j = 0; j < n; ++j) ad_basis.push_back(L.ad_basis(j));

    Subspace V = Subspace::full(n);
    while (V.dim() > 0) {
        // Functionals w -> tr((ad v)^k ad w) for each current basis vector v;
        // they vanish on the nilradical, so V only ever shrinks towards it.
        std::vector<Vec> rows;
        for (std::size_t b = 0; b < V.dim(); ++b) {
            Matrix av = L.ad(V.basis_vector(b));
            Matrix p = Matrix::identity(n);
            for (std::size_t k = 0; k < n; ++k) {
                Vec row(n);
                for (std::size_t j = 0; j < n; ++j) row[j] = trace(p * ad_basis[j]);
                if (!is_zero_vec(row)) rows.push_back(std::move(row));
                p = p * av;
            }
        }
        if (rows.empty()) break;
        Matrix f(rows.size(), n);
        for (std::size_t r = 0; r < rows.size(); ++r) f.set_row(r, rows[r]);
        // V_new = V  intersect  ker f, computed inside V's coordinates
        Matrix fb(rows.size(), V.dim());
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t b = 0; b < V.dim(); ++b) {
                Scalar acc(0);
                for (std::size_t j = 0; j < n; ++j) acc += f.at(r, j) * V.basis().at(b, j);
                fb.at(r, b) = acc;
            }
        std::vector<Vec> next;
        for (const Vec& u : kernel(fb)) {
            Vec x(n);
            for (std::size_t b = 0; b < V.dim(); ++b)
                if (!u[b].is_zero()) x = x + u[b] * V.basis_vector(b);
            next.push_back(std::move(x));
        }
        Subspace Vn = Subspace::span(n, next);
        if (Vn.dim() == V.dim()) break;
        V = std::move(Vn);
    }
    for (std::size_t b = 0; b < V.dim(); ++b)
        if (!is_nilpotent(L.ad(V.basis_vector(b))))
            throw std::logic_error("nilradical: refinement did not certify (non-solvable input?)");
    return V;
}

} // namespace liealg
