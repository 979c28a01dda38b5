#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "tanaka/graded_lie.hpp"
#include "tanaka/hodge.hpp"

namespace tanaka {

/// Components K_m in C^2_m(h_-, h), canonical coordinates; absent degrees are zero.
struct FormalCurvature {
  std::map<int, Vector> components;
  friend bool operator==(const FormalCurvature&, const FormalCurvature&) = default;
};

/// Components phi_m in C^1_m(h_-, h); absent degrees are zero.
struct GaugeCorrection {
  std::map<int, Vector> components;
  friend bool operator==(const GaugeCorrection&, const GaugeCorrection&) = default;
};

/// Given the degree m, the applied increment phi_m and the current curvature, returns a curvature
/// supported in degrees > m that is added on top of the leading update.
using TailOperator = std::function<FormalCurvature(int m, const Vector& phi_m, const FormalCurvature& k)>;

/// height + 2 depth, the largest homogeneous degree of C^2.
int max_curvature_degree(const GradedLieAlgebra& g);

/// Drops zero components; throws kRangeError for degrees < 1 or > max_curvature_degree, and
/// kDimensionMismatch for wrongly sized components.
FormalCurvature canonical(const GradedLieAlgebra& g, FormalCurvature k);
GaugeCorrection canonical(const GradedLieAlgebra& g, GaugeCorrection phi);

/// K'_m = K_m + d phi_m, lower degrees unchanged, higher degrees shifted by the tail.
/// Throws kTailDegreeViolation when the tail touches a degree <= m.
FormalCurvature curvature_update(const GradedLieAlgebra& g, const FormalCurvature& k, int m, const Vector& phi_m,
                                 const TailOperator* tail = nullptr);

struct NormalizationStep {
  int m = 0;
  std::size_t block_dim = 0;
  std::size_t harmonic_dim = 0;
  std::size_t coexact_dim = 0;
  std::size_t exact_dim = 0;
  bool corrected = false;  // the exact part was nonzero
};

struct NormalizationResult {
  FormalCurvature normal;
  GaugeCorrection phi;  // phi_m solved at each step; the update applied -phi_m
  std::vector<NormalizationStep> trace;
  std::size_t steps = 0;
};

/// Per-degree Hodge data for one (algebra, metric) pair, computed once and reused.
class Normalizer {
 public:
  /// With parallel set the per-degree data is built concurrently; results are identical.
  Normalizer(const GradedLieAlgebra& g, const AdaptedMetric& metric, bool parallel = false);

  const GradedLieAlgebra& algebra() const { return g_; }
  int max_degree() const { return m_max_; }

  NormalizationResult normalize(const FormalCurvature& k, const TailOperator* tail = nullptr) const;
  bool is_normal(const FormalCurvature& k) const;
  /// K minus its exact part, degreewise.
  FormalCurvature coexact_harmonic_projection(const FormalCurvature& k) const;
  /// The degreewise image d phi.
  FormalCurvature differential(const GaugeCorrection& phi) const;
  /// Minimal-norm phi_m with d phi_m equal to the exact part of x (x in C^2_m).
  Vector minimal_preimage(int m, const Vector& x) const;

 private:
  struct Block {
    std::size_t c1_dim = 0;
    std::size_t c2_dim = 0;
    Matrix d1;        // C^1_m -> C^2_m
    Matrix codiff2;   // C^2_m -> C^1_m
    // With C a basis of the coimage of d1 (columns) and D = d1 C:
    // coefficients(x) = (D^T G D)^{-1} D^T G x, exact part = D coefficients,
    // minimal-norm preimage = C coefficients.
    Matrix coimage;
    Matrix image;
    Matrix normal_inverse;
    Matrix moment;  // D^T G
    Vector coefficients(const Vector& x) const;
    std::size_t harmonic_dim = 0;
    std::size_t coexact_dim = 0;
  };
  const Block* block(int m) const;

  GradedLieAlgebra g_;
  AdaptedMetric metric_;
  int m_max_ = 0;
  std::map<int, Block> blocks_;
};

NormalizationResult normalize(const GradedLieAlgebra& g, const AdaptedMetric& metric, const FormalCurvature& k,
                              const TailOperator* tail = nullptr, bool parallel = false);
bool is_normal(const GradedLieAlgebra& g, const AdaptedMetric& metric, const FormalCurvature& k);

/// phi - d psi per degree, psi_l in C^0_l = h_l with l >= 1 (kRangeError otherwise).
GaugeCorrection gauge_leading(const GradedLieAlgebra& g, const GaugeCorrection& phi, const std::map<int, Vector>& psi);

struct UniquenessReport {
  std::size_t trials = 0;
  std::size_t equal = 0;
  bool all_equal = true;
  std::map<int, std::size_t> h1;  // dim H^1_l for l >= 1 with C^1_l nonzero
  bool h1_vanishes = true;
};

/// Checks normalize(K + d phi) = normalize(K) for seeded random gauge corrections phi (tail absent)
/// and reports whether H^1_l vanishes for all l >= 1.
UniquenessReport uniqueness_probe(const GradedLieAlgebra& g, const AdaptedMetric& metric, const FormalCurvature& k,
                                  std::size_t trials, std::uint64_t seed);

/// Seeded random regular curvature with small integer coefficients in every degree 1..max.
FormalCurvature random_curvature(const GradedLieAlgebra& g, std::uint64_t seed);
/// Seeded random gauge correction in every degree m >= 1 where C^1_m is nonzero.
GaugeCorrection random_gauge(const GradedLieAlgebra& g, std::uint64_t seed);

}  // namespace tanaka
