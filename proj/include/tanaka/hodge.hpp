#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "tanaka/cochain.hpp"
#include "tanaka/graded_lie.hpp"
#include "tanaka/linalg.hpp"
#include "tanaka/matrix.hpp"

namespace tanaka {

/// Euclidean metric on a graded Lie algebra with distinct degrees orthogonal.
/// Stored as one positive-definite Gram block per degree, in the order of
/// indices_of_degree(d).
class AdaptedMetric {
 public:
  AdaptedMetric() = default;
  /// Throws kDimensionMismatch for missing or mis-sized blocks, kNonSymmetric or
  /// kNotPositiveDefinite for invalid ones.
  AdaptedMetric(const GradedLieAlgebra& g, std::map<int, Matrix> blocks);

  static AdaptedMetric identity(const GradedLieAlgebra& g);
  /// Assembles per-degree blocks out of a full Gram matrix; off-block entries must vanish (kNotAdapted).
  static AdaptedMetric from_full(const GradedLieAlgebra& g, const Matrix& gram);

  const std::map<int, Matrix>& blocks() const { return blocks_; }
  const Matrix& block(int degree) const { return blocks_.at(degree); }

  /// dim x dim Gram in the algebra basis, and its inverse.
  const Matrix& gram() const { return gram_; }
  const Matrix& gram_inverse() const { return gram_inverse_; }
  /// Gram of h_- in the order of negative_indices(), and its inverse (the dual metric on h_-^*).
  const Matrix& negative_gram() const { return negative_gram_; }
  const Matrix& negative_dual_gram() const { return negative_dual_gram_; }

  Rational inner(const Vector& x, const Vector& y) const;
  /// Matrix of the metric adjoint: <M x, y> = <x, M^* y>.
  Matrix adjoint(const Matrix& m) const;

  friend bool operator==(const AdaptedMetric& a, const AdaptedMetric& b) { return a.blocks_ == b.blocks_; }

 private:
  std::map<int, Matrix> blocks_;
  Matrix gram_;
  Matrix gram_inverse_;
  Matrix negative_gram_;
  Matrix negative_dual_gram_;
};

/// A seeded random adapted metric: each block is L D L^T with L unit lower triangular
/// with small integer entries and D a positive diagonal of small rationals.
/// With diagonal_only the blocks are diagonal.
AdaptedMetric random_adapted_metric(const GradedLieAlgebra& g, std::uint64_t seed, bool diagonal_only = false);

/// Gram of the canonical basis of C^k_j: det(<e^I, e^J>) <e_v, e_w>.
Matrix induced_gram(const GradedLieAlgebra& g, const AdaptedMetric& metric, std::size_t k, int j);
/// Inverse of induced_gram, assembled from the inverse metric.
Matrix induced_gram_inverse(const GradedLieAlgebra& g, const AdaptedMetric& metric, std::size_t k, int j);

/// The metric adjoint of d: C^k_j -> C^{k+1}_j, as a map C^{k+1}_j -> C^k_j.
Matrix codifferential_adjoint(const GradedLieAlgebra& g, const AdaptedMetric& metric, std::size_t k, int j);
/// The same map assembled term by term from the closed formula in terms of (ad_{a^flat})^* and
/// [a_i^flat, a_j^flat]^sharp insertions.
Matrix codifferential_explicit(const GradedLieAlgebra& g, const AdaptedMetric& metric, std::size_t k, int j);

/// d d^* + d^* d on C^k_j.
Matrix laplacian(const GradedLieAlgebra& g, const AdaptedMetric& metric, std::size_t k, int j);

struct HodgeSplit {
  std::size_t k = 0;
  int j = 0;
  Matrix gram;
  Subspace harmonic;
  Subspace coexact;
  Subspace exact;
};

/// harmonic = ker d cap ker d^*, coexact = im d^*, exact = im d on C^k_j.
HodgeSplit hodge_decompose(const GradedLieAlgebra& g, const AdaptedMetric& metric, std::size_t k, int j);

/// dim ker of the Laplacian on C^k_j, exact. A known harmonic subspace is used as
/// a certificate: it must be killed by the Laplacian, and a matching rank modulo a
/// prime proves nothing else is; otherwise the rank is computed over Q.
std::size_t laplacian_nullity(const GradedLieAlgebra& g, const AdaptedMetric& metric, std::size_t k, int j,
                              const Subspace& harmonic);

struct CohomologyDims {
  std::size_t harmonic = 0;      // dim ker Laplacian
  std::size_t kernel_image = 0;  // dim ker d - dim im d
};

/// dim H^k_l computed both ways; throws kInternalInconsistency if the two disagree.
CohomologyDims cohomology_dim(const GradedLieAlgebra& g, const AdaptedMetric& metric, std::size_t k, int l);

/// Metric-free dim ker d - dim im d on C^k_l.
std::size_t betti(const GradedLieAlgebra& g, std::size_t k, int l);

/// Whether the three Hodge projectors on C^k_j commute with the action of every degree-zero basis element.
bool hodge_projectors_degree_zero_equivariant(const GradedLieAlgebra& g, const AdaptedMetric& metric,
                                              std::size_t k, int j);

}  // namespace tanaka
