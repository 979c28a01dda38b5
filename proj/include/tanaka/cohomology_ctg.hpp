#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tanaka/graded_lie.hpp"
#include "tanaka/hodge.hpp"
#include "tanaka/linalg.hpp"

namespace tanaka {

/// Degree-one cocycles of g with values in g, and their restrictions to g_{-1}.
struct SSpace {
  Subspace kernel;      // ker d_g on C^1_1(g_-, g), canonical coordinates
  Subspace restricted;  // image in Hom(g_{-1}, g_0), coordinate (x, a) at x * dim g_0 + a
  bool restriction_injective = false;
  /// dim ker d_g on C^1_l(g_-, g) for l = 2..depth; all zero for a fundamental g.
  std::vector<std::pair<int, std::size_t>> higher_kernels;
};

SSpace s_space(const GradedLieAlgebra& g);

/// Z_l and B_l inside Hom(g_{-1}, (g_{1-l})^*), coordinate (x, z) at x * dim g_{1-l} + z.
struct ZBSpaces {
  int l = 0;
  Subspace z;
  Subspace b;
  std::size_t cocycle_dim = 0;  // dim ker d on the g^*-valued part of C^1_l(t*(g))
  bool restriction_injective = false;
  bool b_in_z = false;
};

/// Throws kRangeError unless 1 <= l <= depth(g) + 1.
ZBSpaces zb_spaces(const GradedLieAlgebra& g, int l);

struct CtgDegreeRow {
  int l = 0;
  std::optional<std::size_t> s_dim;  // l = 1 only
  std::size_t z_dim = 0;
  std::size_t b_dim = 0;
  std::size_t closed_form = 0;
  std::size_t general = 0;
  bool agree = false;
};

struct CtgCohomologyReport {
  std::string algebra;
  std::vector<CtgDegreeRow> rows;  // l = 1 .. height(t*(g)) + 2
  bool all_agree = false;
};

/// Closed-form H^1_l of t*(g) (S + Z_1/B_1 at l = 1, Z_l/B_l above) against the Hodge computation on
/// t*(g) with the cotangent standard metric built from gram_g.
CtgCohomologyReport ctg_cohomology_report(const GradedLieAlgebra& g, const AdaptedMetric& gram_g,
                                          bool parallel = false);

/// Checks that the g-valued part of d_h(alpha) equals d_g(alpha_g) and the g^*-valued part equals
/// d_{g*}(alpha_{g*}), on `samples` seeded random C^1 cochains of t*(g) in each homogeneous degree.
bool decomposition_lemma_holds(const GradedLieAlgebra& g, std::uint64_t seed, std::size_t samples);

struct WordRelationCheck {
  std::size_t word_pairs = 0;
  bool all_hold = true;
};

/// Spot-check of the bracket-word relations characterizing Z_l: for every pair of words in g_{-1}
/// basis elements of length 2..min(l, depth) with proportional values, each basis element of Z_l
/// produces proportional functionals.
WordRelationCheck word_relation_check(const GradedLieAlgebra& g, int l);

/// Maps f: V -> g_0 with f(X)Y + f(Y)X = 0, coordinate (x, a) at x * dim g_0 + a.
Subspace skew_prolongation(const std::vector<Matrix>& action, std::size_t dim_v);
/// Maps f: V -> g_0 with f(X)Y = f(Y)X.
Subspace symmetric_prolongation(const std::vector<Matrix>& action, std::size_t dim_v);
/// (dim of g_0-invariant skew forms, dim of symmetric forms making every A symmetric).
std::pair<std::size_t, std::size_t> invariant_forms(const std::vector<Matrix>& action, std::size_t dim_v);
/// Bilinear forms b with b(X, AY) = b(Y, AX) for all A.
std::size_t compatible_bilinear_forms(const std::vector<Matrix>& action, std::size_t dim_v);
/// Matrix of mu^*: V^* -> Hom(V, g_0^*), mu^*(beta)(X)(A) = beta(A X).
Matrix contraction_dual(const std::vector<Matrix>& action, std::size_t dim_v);

struct DepthOneStructure {
  std::size_t dim_v = 0;
  std::size_t dim_g0 = 0;
  std::size_t skew_prolongation = 0;
  std::size_t symmetric_prolongation = 0;
  std::size_t hom_dim = 0;  // dim Hom(V, g_0^*)
  std::size_t mu_rank = 0;
  Subspace quotient_complement;  // complement of mu^*(V^*) in Hom(V, g_0^*)
  std::size_t invariant_skew = 0;
  std::size_t compatible_symmetric = 0;
  std::size_t compatible_bilinear = 0;

  std::size_t h1_1_formula = 0;  // skew + hom - rank
  std::size_t h1_2_formula = 0;  // invariant_skew + compatible_symmetric
  std::size_t h1_1_general = 0;
  std::size_t h1_2_general = 0;
  std::size_t h1_above_2_max = 0;  // max over l >= 3 of the general dimension
  bool h1_1_holds = false;
  bool h1_2_holds = false;
  bool vanishing_holds = false;
};

/// The depth-one structural formula for t*(V + g_0) against the general machinery.
DepthOneStructure depth_one_structure(const GradedLieAlgebra& g, const AdaptedMetric& gram_g);

}  // namespace tanaka
