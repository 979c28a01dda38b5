#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tanaka/matrix.hpp"

namespace tanaka {

/// Sorted (index, coefficient) pairs with no zero coefficients.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

struct BasisElement {
  std::string label;
  int degree = 0;
};

/// Finite-dimensional graded Lie algebra given by structure constants on a
/// labelled, degree-tagged basis. Brackets are stored for i < j only; the
/// value of [e_j, e_i] is derived by antisymmetry. Immutable after construction.
class GradedLieAlgebra {
 public:
  using BracketTable = std::map<std::pair<std::size_t, std::size_t>, SparseVector>;

  GradedLieAlgebra() = default;
  /// Entries with i > j are stored negated under (j, i); i == j must be zero.
  /// Throws Error(kValidationFailure) on duplicate labels or index errors.
  GradedLieAlgebra(std::string name, std::vector<BasisElement> basis, const BracketTable& brackets);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<BasisElement>& basis() const { return basis_; }
  const std::string& label(std::size_t i) const { return basis_.at(i).label; }
  int degree(std::size_t i) const { return basis_.at(i).degree; }
  std::optional<std::size_t> index_of(const std::string& label) const;
  const BracketTable& brackets() const { return brackets_; }

  /// [e_i, e_j] with antisymmetry applied.
  SparseVector bracket_basis(std::size_t i, std::size_t j) const;
  Rational structure_constant(std::size_t i, std::size_t j, std::size_t k) const;

  /// k: 0 if there are no negative degrees.
  int depth() const;
  /// l: the largest degree, or 0 if the algebra is empty.
  int height() const;
  bool is_non_positively_graded() const { return height() <= 0 && max_degree() <= 0; }
  int min_degree() const;
  int max_degree() const;

  std::vector<std::size_t> indices_of_degree(int d) const;
  std::vector<std::size_t> negative_indices() const;
  std::size_t dim_of_degree(int d) const { return indices_of_degree(d).size(); }

  GradedLieAlgebra renamed(std::string name) const;

 private:
  std::string name_;
  std::vector<BasisElement> basis_;
  BracketTable brackets_;
};

Vector unit_vector(std::size_t n, std::size_t i);
Vector bracket(const GradedLieAlgebra& g, const Vector& x, const Vector& y);
/// Column j is [x, e_j].
Matrix ad_matrix(const GradedLieAlgebra& g, const Vector& x);
/// Matrix of L_x on the dual basis, (L_x a)(Y) = -a([x, Y]); equals -ad(x)^T.
Matrix coadjoint_matrix(const GradedLieAlgebra& g, const Vector& x);

enum class Axiom {
  kGrading,
  kJacobi,
  kPositiveDepth,
  kNontrivialDegreeZero,
  kGeneration,
  kExactness,
};

std::string to_string(Axiom a);

struct ValidationFailure {
  Axiom axiom;
  std::vector<std::string> witness;  // basis labels
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationFailure> failures;
  bool ok() const { return failures.empty(); }
};

/// With require_fundamental: positive depth, nonzero degree zero, generation by degree -1, and
/// (unless require_exact_action is false) injectivity of the degree-zero action on degree -1.
ValidationReport validate(const GradedLieAlgebra& g, bool require_fundamental, bool require_exact_action = true);
/// Throws Error(kValidationFailure) carrying the first failure.
void require_valid(const GradedLieAlgebra& g, bool require_fundamental, bool require_exact_action = true);

enum class CotangentGrading {
  /// The only case with the standard gradation g_i, g_0 + g_0^*, (g_{-i})^*.
  kNonPositiveOnly,
  /// h_i = g_i + (g_{-i})^* for any graded g.
  kAnyGrading,
};

/// t*(g) = g + g^* with [X + a, Y + b] = [X, Y] + L_X b - L_Y a. Basis: all of g,
/// then the dual basis in the same order (labels suffixed with '*').
GradedLieAlgebra cotangent(const GradedLieAlgebra& g, CotangentGrading grading = CotangentGrading::kNonPositiveOnly);

/// g = V + g0 with V = span(labels) in degree -1 and [A, X] = action(A) X.
GradedLieAlgebra from_representation(const std::string& name, const GradedLieAlgebra& g0,
                                     const std::vector<Matrix>& action,
                                     const std::vector<std::string>& v_labels = {});

/// Action matrices of g_0 on g_{-1} (in the order of indices_of_degree).
std::vector<Matrix> degree_zero_action(const GradedLieAlgebra& g);

bool is_abelian(const GradedLieAlgebra& g);

}  // namespace tanaka
