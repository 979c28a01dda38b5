#pragma once

#include <cstddef>
#include <vector>

#include "tanaka/graded_lie.hpp"
#include "tanaka/matrix.hpp"

namespace tanaka {

/// Level k of the Tanaka prolongation. An element u is stored as one coordinate vector: for each
/// negative basis index p (in negative_indices() order) the block u(e_p) in T_{deg p + k}, where
/// T_j = g_j (coordinates over indices_of_degree(j)) for j <= 0 and the level-j basis for j > 0.
struct ProlongationLevel {
  int k = 0;
  std::vector<std::size_t> negative;
  std::vector<int> target_degree;
  std::vector<std::size_t> offset;
  std::size_t unknowns = 0;
  std::vector<Vector> basis;

  std::size_t dim() const { return basis.size(); }
  /// The block u(e_p) of an element, p a negative basis index.
  Vector component(const Vector& element, std::size_t p) const;
};

struct ProlongationResult {
  std::vector<ProlongationLevel> levels;  // levels[i].k == i + 1
  bool finite_type = false;               // two consecutive zero levels were computed
  bool determined_by_generators = true;   // restriction to g_{-1} is injective on every level
};

/// Levels 1..max_k, stopping after two consecutive zero levels.
/// Throws kNotNonPositivelyGraded, kValidationFailure, or kRangeError (max_k < 1).
ProlongationResult prolong(const GradedLieAlgebra& g, int max_k);

std::vector<std::size_t> prolongation_dims(const GradedLieAlgebra& g, int max_k);

/// act(w, e_q): [w, e_q] for w in T_j with j <= 0, w(e_q) for j > 0. Coordinates of the result in T_{j + deg q}.
Vector prolongation_act(const GradedLieAlgebra& g, const std::vector<ProlongationLevel>& lower, int j, const Vector& w,
                        std::size_t q);

}  // namespace tanaka
