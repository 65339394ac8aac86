#include "liealg/matrix.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace liealg {

bool is_zero_vec(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Vec operator+(const Vec& a, const Vec& b) {
    Vec out(a);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return out;
}

Vec operator-(const Vec& a, const Vec& b) {
    Vec out(a);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
    return out;
}

Vec operator*(const Scalar& c, const Vec& v) {
    Vec out(v);
    for (auto& x : out) x *= c;
    return out;
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    a_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("Matrix: ragged initializer");
        for (const auto& x : r) a_.push_back(x);
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

Matrix Matrix::diagonal(const Vec& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
}

Matrix Matrix::unit(std::size_t n, std::size_t i, std::size_t j, const Scalar& c) {
    Matrix m(n, n);
    m.at(i, j) = c;
    return m;
}

Vec Matrix::row(std::size_t i) const {
    Vec v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

void Matrix::set_row(std::size_t i, const Vec& v) {
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix: size mismatch in +");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix: size mismatch in -");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: size mismatch in *");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Scalar& bkj = b.at(k, j);
                if (!bkj.is_zero()) out.at(i, j) += aik * bkj;
            }
        }
    return out;
}

Matrix operator*(const Scalar& c, Matrix m) {
    for (std::size_t i = 0; i < m.rows_; ++i)
        for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) *= c;
    return m;
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("Matrix::apply: size mismatch");
    Vec out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
    return out;
}

Vec Matrix::apply_left(const Vec& v) const {
    if (v.size() != rows_) throw std::invalid_argument("Matrix::apply_left: size mismatch");
    Vec out(cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        if (v[i].is_zero()) continue;
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) out[j] += v[i] * at(i, j);
    }
    return out;
}

std::string Matrix::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "\n[" : "[");
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? " " : "") << at(i, j);
        os << "]";
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) { return os << m.str(); }

RrefResult rref(const Matrix& m) {
    RrefResult r;
    r.reduced = m;
    Matrix& a = r.reduced;
    std::size_t piv = 0;
    for (std::size_t c = 0; c < a.cols() && piv < a.rows(); ++c) {
        std::size_t sel = a.rows();
        for (std::size_t i = piv; i < a.rows(); ++i)
            if (!a.at(i, c).is_zero()) { sel = i; break; }
        if (sel == a.rows()) continue;
        if (sel != piv)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(sel, j));
        Scalar inv = Scalar(1) / a.at(piv, c);
        for (std::size_t j = c; j < a.cols(); ++j) a.at(piv, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == piv || a.at(i, c).is_zero()) continue;
            Scalar f = a.at(i, c);
            for (std::size_t j = c; j < a.cols(); ++j) a.at(i, j) -= f * a.at(piv, j);
        }
        r.pivots.push_back(c);
        ++piv;
    }
    r.rank = r.pivots.size();
    return r;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::vector<Vec> kernel(const Matrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : r.pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t fc = 0; fc < m.cols(); ++fc) {
        if (is_pivot[fc]) continue;
        Vec v(m.cols());
        v[fc] = Scalar(1);
        for (std::size_t i = 0; i < r.pivots.size(); ++i)
            v[r.pivots[i]] = -r.reduced.at(i, fc);
        basis.push_back(std::move(v));
    }
    return basis;
}

Scalar det(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("det: non-square");
    Matrix a = m;
    const std::size_t n = a.rows();
    Scalar d(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = n;
        for (std::size_t i = c; i < n; ++i)
            if (!a.at(i, c).is_zero()) { sel = i; break; }
        if (sel == n) return Scalar(0);
        if (sel != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(c, j), a.at(sel, j));
            d = -d;
        }
        d *= a.at(c, c);
        Scalar inv = Scalar(1) / a.at(c, c);
        for (std::size_t j = c; j < n; ++j) a.at(c, j) *= inv;
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a.at(i, c).is_zero()) continue;
            Scalar f = a.at(i, c);
            for (std::size_t j = c; j < n; ++j) a.at(i, j) -= f * a.at(c, j);
        }
    }
    return d;
}

Matrix inverse(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse: non-square");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Scalar(1);
    }
    RrefResult r = rref(aug);
    if (r.rank < n || r.pivots[n - 1] != n - 1) throw std::domain_error("inverse: singular matrix");
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.at(i, j) = r.reduced.at(i, n + j);
    return out;
}

bool is_nilpotent(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("is_nilpotent: non-square");
    const std::size_t n = m.rows();
    if (n == 0) return true;
    Matrix p = m;
    std::size_t e = 1;
    while (e < n) {          // square up to the first power >= n
        if (p.is_zero()) return true;
        p = p * p;
        e *= 2;
    }
    return p.is_zero();
}

Scalar trace(const Matrix& m) {
    Scalar t(0);
    for (std::size_t i = 0; i < m.rows(); ++i) t += m.at(i, i);
    return t;
}

Scalar trace_power(const Matrix& m, std::size_t k) {
    if (!m.is_square()) throw std::invalid_argument("trace_power: non-square");
    if (k == 0) return Scalar(static_cast<long>(m.rows()));
    Matrix p = m;
    for (std::size_t e = 1; e < k; ++e) p = p * m;
    return trace(p);
}

LinearSolution solve_linear(const Matrix& coeffs, const Vec& rhs) {
    if (rhs.size() != coeffs.rows()) throw std::invalid_argument("solve_linear: rhs size mismatch");
    const std::size_t n = coeffs.cols();
    Matrix aug(coeffs.rows(), n + 1);
    for (std::size_t i = 0; i < coeffs.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = coeffs.at(i, j);
        aug.at(i, n) = rhs[i];
    }
    RrefResult r = rref(aug);
    LinearSolution sol;
    sol.kernel = kernel(coeffs);
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
        if (r.pivots[i] == n) return sol;   // 0 = 1 row: inconsistent
    Vec x(n);
    for (std::size_t i = 0; i < r.pivots.size(); ++i) x[r.pivots[i]] = r.reduced.at(i, n);
    sol.particular = std::move(x);
    return sol;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& vectors) {
    Subspace s(ambient);
    if (vectors.empty()) return s;
    Matrix m(vectors.size(), ambient);
    for (std::size_t i = 0; i < vectors.size(); ++i) m.set_row(i, vectors[i]);
    RrefResult r = rref(m);
    Matrix b(r.rank, ambient);
    for (std::size_t i = 0; i < r.rank; ++i)
        for (std::size_t j = 0; j < ambient; ++j) b.at(i, j) = r.reduced.at(i, j);
    s.basis_ = std::move(b);
    return s;
}

Subspace Subspace::full(std::size_t ambient) {
    Subspace s(ambient);
    s.basis_ = Matrix::identity(ambient);
    return s;
}

bool Subspace::contains(const Vec& v) const {
    if (is_zero_vec(v)) return true;
    std::vector<Vec> vs;
    for (std::size_t i = 0; i < dim(); ++i) vs.push_back(basis_.row(i));
    vs.push_back(v);
    return Subspace::span(ambient_, vs).dim() == dim();
}

bool Subspace::contains(const Subspace& other) const {
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& other) const {
    std::vector<Vec> vs;
    for (std::size_t i = 0; i < dim(); ++i) vs.push_back(basis_.row(i));
    for (std::size_t i = 0; i < other.dim(); ++i) vs.push_back(other.basis_.row(i));
    return Subspace::span(ambient_, vs);
}

Subspace Subspace::intersect(const Subspace& other) const {
    // Null space of [U^T | -V^T] glued: x in both spans iff
    // x = a*U = b*V; solve U^T a - V^T b = 0 column-wise.
    const std::size_t du = dim(), dv = other.dim();
    if (du == 0 || dv == 0) return Subspace(ambient_);
    Matrix sys(ambient_, du + dv);
    for (std::size_t i = 0; i < ambient_; ++i) {
        for (std::size_t k = 0; k < du; ++k) sys.at(i, k) = basis_.at(k, i);
        for (std::size_t k = 0; k < dv; ++k) sys.at(i, du + k) = -other.basis_.at(k, i);
    }
    std::vector<Vec> vs;
    for (const Vec& w : kernel(sys)) {
        Vec x(ambient_);
        for (std::size_t k = 0; k < du; ++k)
            if (!w[k].is_zero()) x = x + w[k] * basis_.row(k);
        vs.push_back(std::move(x));
    }
    return Subspace::span(ambient_, vs);
}

} // namespace liealg
