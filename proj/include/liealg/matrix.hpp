#pragma once

#include "liealg/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

namespace liealg {

using Vec = std::vector<Scalar>;

bool is_zero_vec(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Scalar& c, const Vec& v);

/// Dense matrix over Q(i) with exact arithmetic. Row-major.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

    static Matrix identity(std::size_t n);
    static Matrix diagonal(const Vec& d);
    /// Zero except a single entry c at (i, j) (0-based).
    static Matrix unit(std::size_t n, std::size_t i, std::size_t j, const Scalar& c = Scalar(1));

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    Scalar& operator()(std::size_t i, std::size_t j) { return at(i, j); }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return at(i, j); }

    Vec row(std::size_t i) const;
    void set_row(std::size_t i, const Vec& v);

    bool is_zero() const;
    Matrix transpose() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    friend Matrix operator+(Matrix a, const Matrix& b) { a += b; return a; }
    friend Matrix operator-(Matrix a, const Matrix& b) { a -= b; return a; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& c, Matrix m);
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    /// Column-action application: (Mv)_i = sum_j M_ij v_j.
    Vec apply(const Vec& v) const;
    /// Row-action application: (vM)_j = sum_i v_i M_ij.
    Vec apply_left(const Vec& v) const;

    std::string str() const;

private:
    std::size_t rows_, cols_;
    std::vector<Scalar> a_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

struct RrefResult {
    Matrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

/// Unique reduced row-echelon form (Gauss-Jordan, exact).
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Basis of the right kernel {v : Mv = 0}, one vector per free column,
/// in the standard RREF parameterization (deterministic).
std::vector<Vec> kernel(const Matrix& m);

Scalar det(const Matrix& m);
/// Throws std::domain_error if singular.
Matrix inverse(const Matrix& m);

/// Exact test M^n == 0 for square M of size n (repeated squaring past n).
bool is_nilpotent(const Matrix& m);

/// tr(M^k); k = 0 returns the size n by convention.
Scalar trace_power(const Matrix& m, std::size_t k);
Scalar trace(const Matrix& m);

struct LinearSolution {
    std::optional<Vec> particular;   // empty = inconsistent system
    std::vector<Vec> kernel;         // basis of the homogeneous solutions
};

/// Solve coeffs * x = rhs over Q(i).
LinearSolution solve_linear(const Matrix& coeffs, const Vec& rhs);

/// Subspace of K^n held as the unique RREF basis, so equality of subspaces
/// is entrywise equality of the representation.
class Subspace {
public:
    explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}
    /// Canonicalizes the spanning set via RREF, dropping zero rows.
    static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors);
    static Subspace full(std::size_t ambient);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    Vec basis_vector(std::size_t i) const { return basis_.row(i); }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    std::size_t ambient_;
    Matrix basis_;
};

} // namespace liealg
