#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "tanaka/matrix.hpp"

namespace tanaka {

/// A linear subspace of Q^n given by an independent spanning set.
struct Subspace {
  std::size_t ambient_dim = 0;
  std::vector<Vector> basis;

  std::size_t dim() const { return basis.size(); }
  bool empty() const { return basis.empty(); }
  /// Basis vectors as the columns of an ambient_dim x dim matrix.
  Matrix as_columns() const { return Matrix::from_columns(ambient_dim, basis); }
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

Subspace kernel_basis(const Matrix& m);
Subspace image_basis(const Matrix& m);
/// The nonzero rows of rref(m), as a basis of the row space in Q^cols.
Subspace row_space(const Matrix& m);

/// Rank of m reduced modulo the prime p (p < 2^63), or nullopt when some
/// denominator of m vanishes mod p. Never exceeds the rank over Q.
std::optional<std::size_t> rank_mod_prime(const Matrix& m, std::uint64_t p);

/// The canonical particular solution (free variables zero), or nullopt when inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& rhs);

/// Exact inverse; throws Error(kDimensionMismatch) for non-square, kInternalInconsistency if singular.
Matrix inverse(const Matrix& m);

/// Decided by exact LDL^T with all pivots > 0. Throws Error(kNonSymmetric) for asymmetric input.
bool is_positive_definite(const Matrix& g);

/// Throws kNonSymmetric / kNotPositiveDefinite unless `gram` is a valid inner product.
void require_positive_definite(const Matrix& gram);

/// The gram-orthogonal projection of v onto s.
Vector orthogonal_projection(const Vector& v, const Subspace& s, const Matrix& gram);

/// Matrix of the gram-orthogonal projector onto s (ambient x ambient).
Matrix projection_matrix(const Subspace& s, const Matrix& gram);

/// Stacks a over b (equal column counts).
Matrix stack_rows(const Matrix& a, const Matrix& b);

/// Independent subset spanning the same space, by rref of the stacked rows.
Subspace span_of(std::size_t ambient_dim, const std::vector<Vector>& vectors);
bool contains(const Subspace& s, const Vector& v);
bool is_subspace_of(const Subspace& a, const Subspace& b);
bool same_subspace(const Subspace& a, const Subspace& b);
Subspace intersection(const Subspace& a, const Subspace& b);
/// Orthogonal complement with respect to `gram`.
Subspace orthogonal_complement(const Subspace& s, const Matrix& gram);

Rational determinant(const Matrix& m);

}  // namespace tanaka
