#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "tanaka/graded_lie.hpp"
#include "tanaka/matrix.hpp"

namespace tanaka {

/// Highest form degree for which cochain bases are built.
inline constexpr std::size_t kMaxFormDegree = 5;

/// e^{i_1} ^ ... ^ e^{i_k} (x) e_value with i_1 < ... < i_k indexing negative-degree basis elements.
struct WedgeBasisElement {
  std::vector<std::size_t> args;
  std::size_t value = 0;

  friend auto operator<=>(const WedgeBasisElement&, const WedgeBasisElement&) = default;
  friend bool operator==(const WedgeBasisElement&, const WedgeBasisElement&) = default;
};

/// deg(value) - sum of deg(args).
int homogeneous_degree(const GradedLieAlgebra& g, const WedgeBasisElement& e);

/// Canonical ordered basis of C^k_j(h_-, h), or of all of C^k when j is absent.
/// Order: lexicographic by multi-index, then by value index.
class CochainSpace {
 public:
  CochainSpace(const GradedLieAlgebra& g, std::size_t k, std::optional<int> j);

  std::size_t k() const { return k_; }
  std::optional<int> j() const { return j_; }
  std::size_t dim() const { return elements_.size(); }
  const std::vector<WedgeBasisElement>& elements() const { return elements_; }
  const WedgeBasisElement& operator[](std::size_t i) const { return elements_[i]; }
  std::optional<std::size_t> index_of(const WedgeBasisElement& e) const;

 private:
  std::size_t k_;
  std::optional<int> j_;
  std::vector<WedgeBasisElement> elements_;
  std::map<WedgeBasisElement, std::size_t> index_;
};

std::vector<WedgeBasisElement> basis(const GradedLieAlgebra& g, std::size_t k, int j);

/// Homogeneous degrees j with C^k_j nonzero, ascending.
std::vector<int> homogeneous_degrees(const GradedLieAlgebra& g, std::size_t k);

/// Matrix of the Lie algebra differential C^k_j -> C^{k+1}_j in canonical bases.
Matrix differential_matrix(const GradedLieAlgebra& g, std::size_t k, int j);
/// Same on the full spaces C^k -> C^{k+1}.
Matrix differential_matrix(const GradedLieAlgebra& g, std::size_t k);

/// Infinitesimal action of the basis element A (degree d >= 0) on cochains, C^k_j -> C^k_{j+d}:
/// (A.phi)(X_1..X_k) = [A, phi(X_1..X_k)] - sum_s phi(X_1, .., ad^-_A X_s, .., X_k),
/// where ad^-_A keeps only the h_- components of [A, X].
Matrix cochain_action_matrix(const GradedLieAlgebra& g, std::size_t a, std::size_t k, int j);

/// A (possibly mixed-degree) k-cochain as a sparse combination of wedge basis elements.
struct Cochain {
  std::size_t k = 0;
  std::map<WedgeBasisElement, Rational> terms;

  friend bool operator==(const Cochain&, const Cochain&) = default;
};

Cochain cochain_from_vector(const CochainSpace& space, const Vector& coeffs);
/// Throws Error(kDimensionMismatch) if c has a term outside the space.
Vector cochain_to_vector(const CochainSpace& space, const Cochain& c);
Cochain operator+(const Cochain& a, const Cochain& b);

/// The common homogeneous degree of all terms, or nullopt when mixed or zero.
std::optional<int> homogeneous_degree(const GradedLieAlgebra& g, const Cochain& c);

/// gr_j: the degree-j component.
Cochain gr_project(const GradedLieAlgebra& g, const Cochain& c, int j);

/// Alternating multilinear evaluation on k elements of h_-.
/// Throws kArgumentNotInNegativePart or kDimensionMismatch.
Vector evaluate(const GradedLieAlgebra& g, const Cochain& c, const std::vector<Vector>& args);

/// Sorts a multi-index, returning the permutation sign, or nullopt on a repeated entry.
std::optional<std::pair<std::vector<std::size_t>, int>> sort_with_sign(std::vector<std::size_t> idx);

}  // namespace tanaka
