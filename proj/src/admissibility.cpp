#include "tanaka/admissibility.hpp"


#include "tanaka/cochain.hpp"
#include "tanaka/error.hpp"
#include "tanaka/linalg.hpp"
#include "tanaka/parallel.hpp"

namespace tanaka {

namespace {

std::vector<std::size_t> q_indices(const GradedLieAlgebra& g) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.dim(); ++i)
    if (g.degree(i) >= 0) out.push_back(i);
  return out;
}

Vector negative_part(const GradedLieAlgebra& g, Vector v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (g.degree(i) >= 0) v[i] = Rational(0);
  return v;
}

std::optional<AdmissibilityWitness> first_failure_for(const GradedLieAlgebra& g, const AdaptedMetric& metric,
                                                      std::size_t a) {
  const auto neg = g.negative_indices();
  const Vector ea = unit_vector(g.dim(), a);
  const Matrix ad = ad_matrix(g, ea);
  const Matrix ad_star = metric.adjoint(ad);
  // Compression of ad_A to h_-, and its adjoint for the h_- Gram, both acting on full vectors.
  Matrix ad_minus(g.dim(), g.dim());
  for (auto r : neg)
    for (const auto& [c, x] : ad.row(r))
      if (g.degree(c) < 0) ad_minus.set(r, c, x);
  const Matrix ad_minus_star = metric.adjoint(ad_minus);

  for (auto z : neg) {
    const Vector ez = unit_vector(g.dim(), z);
    const Vector z_star = ad_minus_star.apply(ez);
    for (std::size_t w = 0; w < g.dim(); ++w) {
      const Vector ew = unit_vector(g.dim(), w);
      const Vector zw = bracket(g, ez, ew);
      {
        const Vector lhs = ad_star.apply(zw);
        const Vector rhs = bracket(g, z_star, ew) + bracket(g, ez, ad_star.apply(ew));
        if (lhs != rhs) return AdmissibilityWitness{g.label(a), g.label(z), g.label(w), 1, lhs, rhs};
      }
      if (g.degree(w) < 0) {
        const Vector w_star = ad_minus_star.apply(ew);
        const Vector lhs = ad_minus_star.apply(negative_part(g, zw));
        const Vector rhs = negative_part(g, bracket(g, z_star, ew)) + negative_part(g, bracket(g, ez, w_star));
        if (lhs != rhs) return AdmissibilityWitness{g.label(a), g.label(z), g.label(w), 2, lhs, rhs};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

AdmissibilityVerdict check_admissible(const GradedLieAlgebra& g, const AdaptedMetric& metric, bool parallel) {
  const auto q = q_indices(g);
  const auto failures = indexed_map<std::optional<AdmissibilityWitness>>(
      q.size(), [&](std::size_t i) { return first_failure_for(g, metric, q[i]); }, parallel);
  for (const auto& f : failures) {
    if (f) return {false, f};
  }
  return {true, std::nullopt};
}

EquivarianceResult check_equivariance_direct(const GradedLieAlgebra& g, const AdaptedMetric& metric, std::size_t k) {
  if (k > 1) throw Error(ErrorCode::kRangeError, "direct equivariance check is defined for k = 0, 1");
  const auto degrees = homogeneous_degrees(g, k + 1);
  for (auto a : q_indices(g)) {
    const int d = g.degree(a);
    for (int j : degrees) {
      // d^*_{j+d} rho_{k+1}(A) = rho_k(A) d^*_j on C^{k+1}_j
      const Matrix lhs = codifferential_adjoint(g, metric, k, j + d) * cochain_action_matrix(g, a, k + 1, j);
      const Matrix rhs = cochain_action_matrix(g, a, k, j) * codifferential_adjoint(g, metric, k, j);
      if (!(lhs == rhs)) return {false, g.label(a), j};
    }
  }
  return {true, std::nullopt, std::nullopt};
}

Involution make_involution(const GradedLieAlgebra& g, const Matrix& theta) {
  if (theta.rows() != g.dim() || theta.cols() != g.dim()) {
    throw Error(ErrorCode::kInvalidInvolution, "involution must be " + std::to_string(g.dim()) + "x" +
                                                   std::to_string(g.dim()));
  }
  if (!(theta * theta == Matrix::identity(g.dim()))) {
    throw Error(ErrorCode::kInvalidInvolution, "theta^2 is not the identity");
  }
  for (std::size_t r = 0; r < theta.rows(); ++r) {
    for (const auto& [c, x] : theta.row(r)) {
      if (g.degree(r) != -g.degree(c)) {
        throw Error(ErrorCode::kInvalidInvolution,
                    "theta sends " + g.label(c) + " outside degree " + std::to_string(-g.degree(c)));
      }
    }
  }
  return Involution{theta};
}

NeutralForm make_neutral_form(const GradedLieAlgebra& g, const Matrix& form) {
  if (form.rows() != g.dim() || form.cols() != g.dim()) throw Error(ErrorCode::kDimensionMismatch, "form size");
  NeutralForm b{form, form.is_symmetric(), rank(form) == g.dim(), true};
  for (std::size_t x = 0; x < g.dim() && b.invariant; ++x) {
    const Matrix ad = ad_matrix(g, unit_vector(g.dim(), x));
    // B(ad_x y, z) + B(y, ad_x z) = (ad^T B + B ad)[y, z]
    b.invariant = (ad.transpose() * form + form * ad).is_zero();
  }
  return b;
}

NeutralForm killing_form(const GradedLieAlgebra& g) {
  std::vector<Matrix> ads;
  for (std::size_t i = 0; i < g.dim(); ++i) ads.push_back(ad_matrix(g, unit_vector(g.dim(), i)));
  Matrix form(g.dim(), g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t j = i; j < g.dim(); ++j) {
      const Matrix p = ads[i] * ads[j];
      Rational tr;
      for (std::size_t r = 0; r < p.rows(); ++r) tr += p.at(r, r);
      form.set(i, j, tr);
      form.set(j, i, tr);
    }
  }
  return make_neutral_form(g, form);
}

AdaptedMetric btheta_metric(const GradedLieAlgebra& g, const Involution& theta) {
  const NeutralForm b = killing_form(g);
  if (!b.nondegenerate) throw Error(ErrorCode::kDegenerateKilling, g.name() + " has a degenerate Killing form");
  make_involution(g, theta.matrix);
  const Matrix gram = Rational(-1) * (b.form * theta.matrix);
  if (!gram.is_symmetric()) throw Error(ErrorCode::kNonSymmetric, "-B(., theta .) is not symmetric");
  if (!is_positive_definite(gram)) throw Error(ErrorCode::kNotPositiveDefinite, "-B(., theta .) is not positive definite");
  return AdaptedMetric::from_full(g, gram);
}

CotangentMetric cotangent_standard_metric(const GradedLieAlgebra& g, const AdaptedMetric& gram_g,
                                          CotangentGrading grading) {
  GradedLieAlgebra h = cotangent(g, grading);
  const std::size_t n = g.dim();
  const Matrix& gm = gram_g.gram();
  const Matrix& gi = gram_g.gram_inverse();
  Matrix full(2 * n, 2 * n);
  Matrix theta(2 * n, 2 * n);
  Matrix pairing(2 * n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (const auto& [c, x] : gm.row(r)) {
      full.set(r, c, x);
      theta.set(n + r, c, x);  // theta(e_c) = sum_r G[r, c] e^r
    }
    for (const auto& [c, x] : gi.row(r)) {
      full.set(n + r, n + c, x);
      theta.set(r, n + c, x);  // theta(e^c) = sum_r G^{-1}[r, c] e_r
    }
    pairing.set(r, n + r, Rational(1));
    pairing.set(n + r, r, Rational(1));
  }
  AdaptedMetric metric = AdaptedMetric::from_full(h, full);
  Involution inv = make_involution(h, theta);
  NeutralForm b = make_neutral_form(h, pairing);
  return CotangentMetric{std::move(h), std::move(metric), std::move(inv), std::move(b)};
}

AdmissibilityVerdict check_theta_condition(const GradedLieAlgebra& g, const CotangentMetric& ctg) {
  const GradedLieAlgebra& h = ctg.algebra;
  const std::size_t n = g.dim();
  const Matrix& th = ctg.theta.matrix;
  auto br = [&](const Vector& x, const Vector& y) { return bracket(h, x, y); };

  std::vector<std::size_t> first;  // basis of g_0 + g^*
  for (auto i : g.indices_of_degree(0)) first.push_back(i);
  for (std::size_t i = 0; i < n; ++i) first.push_back(n + i);

  for (auto u : first) {
    const Vector xi = unit_vector(2 * n, u);
    Vector x = zero_vector(2 * n);  // the g-component of X + xi
    if (u < n) x[u] = Rational(1);
    for (auto y : g.negative_indices()) {
      const Vector ey = unit_vector(2 * n, y);
      const Vector left_inner = th.apply(br(x, th.apply(ey)));
      for (std::size_t z = 0; z < 2 * n; ++z) {
        const Vector ez = unit_vector(2 * n, z);
        const Vector lhs = th.apply(br(xi, th.apply(br(ey, ez))));
        const Vector rhs = br(left_inner, ez) + br(ey, th.apply(br(xi, th.apply(ez))));
        if (lhs != rhs) return {false, AdmissibilityWitness{h.label(u), h.label(y), h.label(z), 3, lhs, rhs}};
      }
    }
  }
  return {true, std::nullopt};
}

CotangentObstructionReport cotangent_obstruction_diagnostics(const GradedLieAlgebra& g, const AdaptedMetric& gram_g) {
  CotangentObstructionReport report;
  const auto g0 = g.indices_of_degree(0);
  report.g0_abelian = true;
  for (std::size_t s = 0; s < g0.size() && report.g0_abelian; ++s)
    for (std::size_t t = s + 1; t < g0.size(); ++t)
      if (!g.bracket_basis(g0[s], g0[t]).empty()) report.g0_abelian = false;
  report.gram_invariant = true;
  for (auto a : g0) {
    const Matrix ad = ad_matrix(g, unit_vector(g.dim(), a));
    if (!(ad.transpose() * gram_g.gram() + gram_g.gram() * ad).is_zero()) report.gram_invariant = false;
  }
  const CotangentMetric ctg = cotangent_standard_metric(g, gram_g);
  report.verdict = check_admissible(ctg.algebra, ctg.metric);
  report.cotangent_admissible = report.verdict.admissible;
  report.implication_holds = !report.cotangent_admissible || (report.g0_abelian && !report.gram_invariant);
  return report;
}

}  // namespace tanaka
