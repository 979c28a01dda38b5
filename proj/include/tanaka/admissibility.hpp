#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tanaka/graded_lie.hpp"
#include "tanaka/hodge.hpp"
#include "tanaka/matrix.hpp"

namespace tanaka {

struct AdmissibilityWitness {
  std::string a;  // basis element of q
  std::string z;  // basis element of h_-
  std::string w;  // basis element of h (of h_- for the second identity)
  int identity = 1;
  Vector lhs;
  Vector rhs;
};

struct AdmissibilityVerdict {
  bool admissible = true;
  std::optional<AdmissibilityWitness> witness;
};

/// Infinitesimal admissibility test over q = h_0 + h_+: for every basis A of q, Z of h_-, W of h,
///   (ad_A)^*[Z, W] = [(ad^-_A)^* Z, W] + [Z, (ad_A)^* W]
/// and, for Z, W in h_-,
///   (ad^-_A)^*[Z, W]_- = [(ad^-_A)^* Z, W]_- + [Z, (ad^-_A)^* W]_-.
/// The first failure in (A, Z, W) order is returned as the witness.
AdmissibilityVerdict check_admissible(const GradedLieAlgebra& g, const AdaptedMetric& metric, bool parallel = false);

struct EquivarianceResult {
  bool commutes = true;
  std::optional<std::string> failing_element;  // label of the first A in q that fails
  std::optional<int> failing_degree;           // homogeneous degree of the source block
};

/// Whether d^*: C^{k+1} -> C^k commutes with the infinitesimal action of every basis element of q.
/// k must be 0 or 1 (kRangeError otherwise).
EquivarianceResult check_equivariance_direct(const GradedLieAlgebra& g, const AdaptedMetric& metric, std::size_t k);

struct Involution {
  Matrix matrix;
};

/// Checks theta^2 = 1 and theta(h_i) = h_{-i}; throws kInvalidInvolution.
Involution make_involution(const GradedLieAlgebra& g, const Matrix& theta);

struct NeutralForm {
  Matrix form;
  bool symmetric = false;
  bool nondegenerate = false;
  bool invariant = false;  // B([x, y], z) + B(y, [x, z]) = 0 on all basis triples
};

NeutralForm make_neutral_form(const GradedLieAlgebra& g, const Matrix& form);

/// B(x, y) = trace(ad_x ad_y).
NeutralForm killing_form(const GradedLieAlgebra& g);

/// -B(., theta .) as an adapted metric. Throws kDegenerateKilling, kInvalidInvolution,
/// kNotAdapted or kNotPositiveDefinite.
AdaptedMetric btheta_metric(const GradedLieAlgebra& g, const Involution& theta);

struct CotangentMetric {
  GradedLieAlgebra algebra;  // t*(g)
  AdaptedMetric metric;      // g-blocks from gram_g, dual blocks from its inverse
  Involution theta;          // X -> X^sharp, alpha -> alpha^flat
  NeutralForm pairing;       // B(X + xi, Y + eta) = xi(Y) + eta(X)
};

CotangentMetric cotangent_standard_metric(const GradedLieAlgebra& g, const AdaptedMetric& gram_g,
                                          CotangentGrading grading = CotangentGrading::kNonPositiveOnly);

/// Evaluates theta([X+xi, theta([Y, Z+a])]) = [theta([X, theta(Y)]), Z+a] + [Y, theta([X+xi, theta(Z+a)])]
/// for X+xi over the basis of g_0 + g^*, Y over g_-, Z+a over t*(g).
AdmissibilityVerdict check_theta_condition(const GradedLieAlgebra& g, const CotangentMetric& ctg);

struct CotangentObstructionReport {
  bool g0_abelian = false;
  bool gram_invariant = false;  // <[A, x], y> + <x, [A, y]> = 0 for A in g_0
  bool cotangent_admissible = false;
  AdmissibilityVerdict verdict;
  /// cotangent_admissible implies (g0_abelian and not gram_invariant).
  bool implication_holds = true;
};

CotangentObstructionReport cotangent_obstruction_diagnostics(const GradedLieAlgebra& g, const AdaptedMetric& gram_g);

}  // namespace tanaka
