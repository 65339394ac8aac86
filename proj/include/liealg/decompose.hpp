#pragma once

#include "liealg/lie.hpp"
#include "liealg/poly.hpp"

#include <optional>
#include <string>

namespace liealg {

enum class DecompKind {
    Decomposable,
    Indecomposable,
    /// Centroid exhibits a field extension of K = Q (or Q(i)): the algebra is
    /// indecomposable as far as exact evidence over K goes but may split over
    /// the modeled field. Never used to silently claim R-indecomposability.
    IndecomposableOverKOnly,
};

struct DecompositionVerdict {
    DecompKind kind = DecompKind::Indecomposable;
    /// For Decomposable: the verified ideal pair (I, J) with L = I + J,
    /// I cap J = 0, [I,J] = 0.
    std::optional<std::pair<Subspace, Subspace>> witness;
    std::string detail;
};

/// Decides decomposability via the centroid: dim-1 centroids and local
/// centroids (semisimple quotient of dimension 1 under the char-0 trace-form
/// radical) are indecomposable; otherwise nontrivial idempotents are searched
/// by minimal-polynomial splitting of probe elements. Field semantics decide
/// over-extension reporting (Sturm / discriminant analysis for R, Gaussian
/// roots for C). Semantics default to L's field tag.
DecompositionVerdict is_decomposable(const LieAlgebra& L);
DecompositionVerdict is_decomposable(const LieAlgebra& L, FieldSemantics semantics);

/// Minimal polynomial of a square matrix (monic), by Krylov linear algebra.
Poly minimal_polynomial(const Matrix& m);

} // namespace liealg
