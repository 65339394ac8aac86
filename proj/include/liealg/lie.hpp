#pragma once

#include "liealg/matrix.hpp"

#include <string>
#include <tuple>
#include <vector>

namespace liealg {

struct BracketTerm {
    std::size_t i, j, k;   // 1-based: [e_i, e_j] = coeff * e_k + ...
    Scalar coeff;
};

/// Finite-dimensional Lie algebra given by its structure-constant tensor.
/// The tensor is stored fully (both orientations); antisymmetry is enforced
/// at construction. The Jacobi identity is deliberately NOT enforced here --
/// checking it is a product feature (jacobi_check).
class LieAlgebra {
public:
    LieAlgebra(std::size_t dim, FieldSemantics field = FieldSemantics::RealLike,
               std::string label = "");
    static LieAlgebra from_brackets(std::size_t dim, const std::vector<BracketTerm>& brackets,
                                    std::string label = "",
                                    FieldSemantics field = FieldSemantics::RealLike);

    std::size_t dim() const { return dim_; }
    FieldSemantics field() const { return field_; }
    const std::string& label() const { return label_; }
    void set_label(std::string l) { label_ = std::move(l); }
    void set_field(FieldSemantics f) { field_ = f; }

    /// Sets [e_i, e_j] = v (and [e_j, e_i] = -v). 0-based indices.
    void set_basis_bracket(std::size_t i, std::size_t j, const Vec& v);
    const Vec& basis_bracket(std::size_t i, std::size_t j) const { return c_[i * dim_ + j]; }

    Vec basis_vector(std::size_t i) const;
    Vec bracket(const Vec& x, const Vec& y) const;

    /// Column-action matrix of y -> [x, y].
    Matrix ad(const Vec& x) const;
    Matrix ad_basis(std::size_t i) const;

    /// Triples (i, j, k), 1-based, i<j<k, where the Jacobi identity fails.
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> jacobi_check() const;

    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
        return a.dim_ == b.dim_ && a.c_ == b.c_;
    }
    friend bool operator!=(const LieAlgebra& a, const LieAlgebra& b) { return !(a == b); }

private:
    std::size_t dim_;
    FieldSemantics field_;
    std::string label_;
    std::vector<Vec> c_;
};

/// Structure constants in the basis f_i = sum_j P_ij e_j. P invertible.
LieAlgebra change_basis(const LieAlgebra& L, const Matrix& P);

/// Span of all [u, v] with u in U, v in V.
Subspace bracket_span(const LieAlgebra& L, const Subspace& U, const Subspace& V);

struct SeriesChain {
    std::vector<Subspace> terms;   // starts at the full space; weakly decreasing
    std::vector<std::size_t> dims() const;
};

SeriesChain derived_series(const LieAlgebra& L);
SeriesChain lower_central_series(const LieAlgebra& L);

Subspace center(const LieAlgebra& L);
bool is_solvable(const LieAlgebra& L);
bool is_nilpotent_algebra(const LieAlgebra& L);

/// Rank of the Killing form matrix tr(ad e_i ad e_j).
std::size_t killing_rank(const LieAlgebra& L);

/// Basis of the derivation algebra {D : D[x,y] = [Dx,y] + [x,Dy]},
/// matrices in column-action convention.
std::vector<Matrix> derivation_space(const LieAlgebra& L);

/// Basis of the centroid {phi : phi[x,y] = [phi x, y] = [x, phi y]},
/// column-action convention. Always contains the identity.
std::vector<Matrix> centroid(const LieAlgebra& L);

/// Nilradical of a solvable algebra over a field of characteristic zero:
/// the set {v : ad v nilpotent}, which is a subspace in the solvable case.
/// Computed exactly by iterated linear refinement with the functionals
/// w -> tr((ad v)^k ad w); the returned basis is certified ad-nilpotent.
/// Throws std::invalid_argument when L is not solvable.
Subspace nilradical(const LieAlgebra& L);

} // namespace liealg
