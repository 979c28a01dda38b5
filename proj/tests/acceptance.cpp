// Acceptance suite. Each criterion prints one line "criterion N: PASS|FAIL <summary>" after any
// diagnostics. Run one criterion with --criterion N, or all of them with no arguments.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli_runner.hpp"
#include "support.hpp"
#include "tanaka/admissibility.hpp"
#include "tanaka/cochain.hpp"
#include "tanaka/cohomology_ctg.hpp"
#include "tanaka/document.hpp"
#include "tanaka/hodge.hpp"
#include "tanaka/linalg.hpp"
#include "tanaka/normalization.hpp"
#include "tanaka/prolongation.hpp"
#include "tanaka/registry.hpp"

using namespace tanaka;
using test_support::Dense;
using test_support::oracle_rank;

namespace {

constexpr std::size_t kTopForm = 3;

/// Collects failures; prints each one as a diagnostic line.
class Audit {
 public:
  void require(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 20) std::cout << "  failed: " << what << "\n";
  }
  void note(const std::string& line) { std::cout << "  " << line << "\n"; }
  bool ok() const { return failures_ == 0; }
  std::size_t checks() const { return checks_; }
  std::size_t failures() const { return failures_; }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
};

std::string block(const GradedLieAlgebra& g, std::size_t k, int j) {
  return g.name() + " C^" + std::to_string(k) + "_" + std::to_string(j);
}

std::vector<AdaptedMetric> random_metrics(const GradedLieAlgebra& g) {
  return {random_adapted_metric(g, 11), random_adapted_metric(g, 12), random_adapted_metric(g, 13, true)};
}

std::vector<int> degrees_up_to(const GradedLieAlgebra& g, std::size_t k_max) {
  std::set<int> all;
  for (std::size_t k = 0; k <= k_max + 1; ++k)
    for (int j : homogeneous_degrees(g, k)) all.insert(j);
  return {all.begin(), all.end()};
}

bool criterion_1(Audit& audit) {
  for (const auto& g : test_support::corpus()) {
    for (std::size_t k = 0; k <= kTopForm; ++k)
      for (int j : degrees_up_to(g, k + 1)) {
        const Matrix d0 = differential_matrix(g, k, j);
        const Matrix d1 = differential_matrix(g, k + 1, j);
        audit.require((d1 * d0).is_zero(), "d d != 0 on " + block(g, k, j));
      }
  }
  return audit.ok();
}

bool criterion_2(Audit& audit) {
  for (const auto& g : test_support::corpus()) {
    for (const auto& metric : random_metrics(g))
      for (std::size_t k = 0; k <= kTopForm; ++k)
        for (int j : degrees_up_to(g, k + 1)) {
          audit.require(codifferential_explicit(g, metric, k, j) == codifferential_adjoint(g, metric, k, j),
                        "explicit != adjoint codifferential on " + block(g, k + 1, j));
        }
  }
  return audit.ok();
}

/// <a_i, b_j> = 0 for all basis pairs; the Gram matrix is applied to the smaller basis.
bool pairwise_orthogonal(const Subspace& a, const Subspace& b, const Matrix& gram) {
  const Subspace& few = a.dim() <= b.dim() ? a : b;
  const Subspace& many = a.dim() <= b.dim() ? b : a;
  for (const auto& u : few.basis) {
    const Vector gu = gram.apply(u);
    for (const auto& v : many.basis)
      if (!dot(gu, v).is_zero()) return false;
  }
  return true;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string timing(const GradedLieAlgebra& g, double secs) {
  std::ostringstream os;
  os.precision(1);
  os << std::fixed << g.name() << ": " << secs << " s";
  return os.str();
}

bool criterion_3(Audit& audit) {
  for (const auto& g : test_support::corpus()) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<AdaptedMetric> metrics = random_metrics(g);
    metrics.push_back(AdaptedMetric::identity(g));
    for (const auto& metric : metrics)
      for (std::size_t k = 0; k <= kTopForm; ++k)
        for (int j : homogeneous_degrees(g, k)) {
          const std::string where = block(g, k, j);
          const HodgeSplit s = hodge_decompose(g, metric, k, j);
          audit.require(pairwise_orthogonal(s.harmonic, s.coexact, s.gram), "harmonic not orthogonal to coexact on " + where);
          audit.require(pairwise_orthogonal(s.harmonic, s.exact, s.gram), "harmonic not orthogonal to exact on " + where);
          audit.require(pairwise_orthogonal(s.coexact, s.exact, s.gram), "coexact not orthogonal to exact on " + where);
          audit.require(s.harmonic.dim() + s.coexact.dim() + s.exact.dim() == s.gram.rows(),
                        "dimensions do not sum on " + where);

          // ker d cap ker d^* from the two operators directly.
          const Matrix d = differential_matrix(g, k, j);
          const Matrix co_out = codifferential_explicit(g, metric, k, j);
          Subspace closed = kernel_basis(d);
          std::optional<Matrix> d_in, co_in;
          if (k > 0) {
            d_in = differential_matrix(g, k - 1, j);
            co_in = codifferential_explicit(g, metric, k - 1, j);
            closed = kernel_basis(stack_rows(d, *co_in));
          }
          audit.require(same_subspace(closed, s.harmonic), "harmonic part != ker d cap ker d* on " + where);

          // ker Laplacian: the harmonic part is annihilated and the certified nullity matches.
          bool killed = true;
          for (const auto& h : s.harmonic.basis) {
            Vector lap_h = co_out.apply(d.apply(h));
            if (k > 0) lap_h = lap_h + d_in->apply(co_in->apply(h));
            killed = killed && is_zero(lap_h);
          }
          audit.require(killed, "Laplacian does not kill the harmonic part on " + where);
          audit.require(laplacian_nullity(g, metric, k, j, s.harmonic) == closed.dim(),
                        "dim ker Laplacian != dim(ker d cap ker d*) on " + where);
        }
    audit.note(timing(g, seconds_since(start)));
  }
  return audit.ok();
}

bool criterion_4(Audit& audit) {
  for (const auto& g : test_support::corpus()) {
    std::vector<AdaptedMetric> metrics = random_metrics(g);
    metrics.push_back(AdaptedMetric::identity(g));
    for (std::size_t k = 0; k <= kTopForm; ++k)
      for (int j : homogeneous_degrees(g, k)) {
        const std::size_t reference = betti(g, k, j);
        for (const auto& metric : metrics) {
          const HodgeSplit s = hodge_decompose(g, metric, k, j);
          const std::size_t harmonic = laplacian_nullity(g, metric, k, j, s.harmonic);
          audit.require(harmonic == reference, "harmonic " + std::to_string(harmonic) + " != ker/im " +
                                                   std::to_string(reference) + " on " + block(g, k, j));
        }
      }
  }
  return audit.ok();
}

struct MetricCase {
  GradedLieAlgebra algebra;
  AdaptedMetric metric;
  std::string label;
};

std::vector<MetricCase> admissibility_cases() {
  std::vector<MetricCase> cases;
  for (const auto& g : test_support::corpus()) {
    cases.push_back({g, AdaptedMetric::identity(g), g.name() + " identity"});
    cases.push_back({g, random_adapted_metric(g, 21), g.name() + " random:21"});
    cases.push_back({g, random_adapted_metric(g, 22, true), g.name() + " diagonal:22"});
  }
  const auto sl2 = registry_get("sl2-graded");
  cases.push_back({sl2, btheta_metric(sl2, make_involution(sl2, *registry_involution("sl2-graded"))), "sl2 B_theta"});
  for (const auto& name : registry_names()) {
    const auto g = registry_get(name);
    if (!g.is_non_positively_graded()) continue;
    const auto ctg = cotangent_standard_metric(g, AdaptedMetric::identity(g));
    cases.push_back({ctg.algebra, ctg.metric, ctg.algebra.name() + " standard"});
  }
  return cases;
}

bool criterion_5(Audit& audit) {
  std::size_t admissible = 0, inadmissible = 0;
  for (const auto& c : admissibility_cases()) {
    const bool verdict = check_admissible(c.algebra, c.metric).admissible;
    const bool direct = check_equivariance_direct(c.algebra, c.metric, 0).commutes &&
                        check_equivariance_direct(c.algebra, c.metric, 1).commutes;
    audit.require(verdict == direct, "verdicts differ on " + c.label);
    (verdict ? admissible : inadmissible) += 1;
  }
  audit.note(std::to_string(admissible) + " admissible, " + std::to_string(inadmissible) + " inadmissible pairs");
  audit.require(admissible > 0, "no admissible instance in the corpus");
  audit.require(inadmissible > 0, "no inadmissible instance in the corpus");
  return audit.ok();
}

bool criterion_6(Audit& audit) {
  const auto sl2 = registry_get("sl2-graded");
  const auto bt = btheta_metric(sl2, make_involution(sl2, *registry_involution("sl2-graded")));
  audit.require(check_admissible(sl2, bt).admissible, "sl2-graded with B_theta is not admissible");

  const auto so2 = registry_get("so2-V2");
  audit.require(check_admissible(so2, AdaptedMetric::identity(so2)).admissible,
                "so2-V2 with the identity metric is not admissible");
  const AdaptedMetric scaled(
      so2, std::map<int, Matrix>{{-1, Rational(3) * Matrix::identity(2)}, {0, Rational(5, 2) * Matrix::identity(1)}});
  audit.require(check_admissible(so2, scaled).admissible, "so2-V2 with scaled invariant blocks is not admissible");
  return audit.ok();
}

bool criterion_7(Audit& audit) {
  const auto nonab = registry_get("nonab-g0");
  const auto ctg = cotangent_standard_metric(nonab, AdaptedMetric::identity(nonab));
  const auto verdict = check_admissible(ctg.algebra, ctg.metric);
  audit.require(!verdict.admissible, "t*(nonab-g0) with the standard metric is admissible");
  audit.require(verdict.witness.has_value(), "t*(nonab-g0) verdict carries no witness");
  if (verdict.witness) {
    const auto& w = *verdict.witness;
    audit.note("witness A=" + w.a + " Z=" + w.z + " W=" + w.w + " identity=" + std::to_string(w.identity));
    audit.require(w.lhs != w.rhs, "witness sides agree");
  }

  const auto so2 = registry_get("so2-V2");
  const auto so2_ctg = cotangent_standard_metric(so2, AdaptedMetric::identity(so2));
  audit.require(!check_admissible(so2_ctg.algebra, so2_ctg.metric).admissible,
                "t*(so2-V2) with an ad-invariant metric is admissible");

  std::size_t audited = 0;
  for (const auto& name : registry_names()) {
    const auto g = registry_get(name);
    if (!g.is_non_positively_graded()) continue;
    for (const auto& gram : {AdaptedMetric::identity(g), random_adapted_metric(g, 31), random_adapted_metric(g, 32, true)}) {
      const auto report = cotangent_obstruction_diagnostics(g, gram);
      const bool expected = !report.cotangent_admissible || (report.g0_abelian && !report.gram_invariant);
      audit.require(report.implication_holds && expected, "implication violated on " + name);
      ++audited;
    }
  }
  audit.note(std::to_string(audited) + " (algebra, metric) pairs audited");
  return audit.ok();
}

bool criterion_8(Audit& audit) {
  for (const auto& name : {"so2-V2", "nonab-g0", "heis3"}) {
    const auto g = registry_get(name);
    const auto report = ctg_cohomology_report(g, AdaptedMetric::identity(g));
    std::ostringstream line;
    line << name << ": H^1_l for l=1..";
    for (const auto& row : report.rows) {
      line << " " << row.general;
      audit.require(row.closed_form == row.general, std::string(name) + " l=" + std::to_string(row.l) +
                                                        " closed form " + std::to_string(row.closed_form) +
                                                        " != general " + std::to_string(row.general));
      const std::size_t independent = betti(cotangent(g), 1, row.l);
      audit.require(independent == row.general, std::string(name) + " l=" + std::to_string(row.l) +
                                                    " report differs from ker/im");
      if (g.depth() == 1 && row.l >= 3) audit.require(row.general == 0, std::string(name) + " H^1_l != 0 for l >= 3");
    }
    audit.note(line.str());
    audit.require(report.all_agree, std::string(name) + " report flags disagreement");
  }
  const auto nonab = cotangent(registry_get("nonab-g0"));
  audit.require(betti(nonab, 1, 1) > 0, "H^1_1(t*(nonab-g0)) vanishes");
  return audit.ok();
}

mpq_class entry(const Matrix& a, std::size_t r, std::size_t c) { return a.at(r, c).raw(); }

/// Maps f: V -> g0 with coefficients c[x][a] and f(X)Y + sign * f(Y)X = 0.
std::size_t solve_prolongation(const std::vector<Matrix>& action, std::size_t n, int sign) {
  const std::size_t m = action.size();
  Dense rows;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<mpq_class> r(n * m, 0);
        for (std::size_t a = 0; a < m; ++a) {
          r[x * m + a] += entry(action[a], i, y);
          r[y * m + a] += sign * entry(action[a], i, x);
        }
        rows.push_back(r);
      }
  return n * m - oracle_rank(rows);
}

/// Bilinear forms b (unknowns b[x][y]) in the kernel of the given linear conditions.
std::size_t solve_forms(std::size_t n,
                        const std::function<void(std::vector<std::vector<mpq_class>>&,
                                                 const std::function<std::size_t(std::size_t, std::size_t)>&)>& build) {
  Dense rows;
  build(rows, [n](std::size_t x, std::size_t y) { return x * n + y; });
  if (rows.empty()) return n * n;
  return n * n - oracle_rank(rows);
}

std::size_t invariant_skew_forms(const std::vector<Matrix>& action, std::size_t n) {
  return solve_forms(n, [&](Dense& rows, const auto& var) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        std::vector<mpq_class> r(n * n, 0);
        r[var(x, y)] += 1;
        r[var(y, x)] += 1;
        rows.push_back(r);
      }
    for (const auto& a : action)
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
          std::vector<mpq_class> r(n * n, 0);
          for (std::size_t z = 0; z < n; ++z) {
            r[var(z, y)] += entry(a, z, x);
            r[var(x, z)] += entry(a, z, y);
          }
          rows.push_back(r);
        }
  });
}

/// Symmetric s with s(Ax, y) = s(x, Ay).
std::size_t compatible_symmetric_forms(const std::vector<Matrix>& action, std::size_t n) {
  return solve_forms(n, [&](Dense& rows, const auto& var) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        std::vector<mpq_class> r(n * n, 0);
        r[var(x, y)] += 1;
        r[var(y, x)] -= 1;
        rows.push_back(r);
      }
    for (const auto& a : action)
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
          std::vector<mpq_class> r(n * n, 0);
          for (std::size_t z = 0; z < n; ++z) {
            r[var(z, y)] += entry(a, z, x);
            r[var(x, z)] -= entry(a, z, y);
          }
          rows.push_back(r);
        }
  });
}

/// General b with b(x, Ay) = b(y, Ax).
std::size_t compatible_general_forms(const std::vector<Matrix>& action, std::size_t n) {
  return solve_forms(n, [&](Dense& rows, const auto& var) {
    for (const auto& a : action)
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
          std::vector<mpq_class> r(n * n, 0);
          for (std::size_t z = 0; z < n; ++z) {
            r[var(x, z)] += entry(a, z, y);
            r[var(y, z)] -= entry(a, z, x);
          }
          rows.push_back(r);
        }
  });
}

/// rank of xi -> (v -> (A -> xi(A v))) from V^* to Hom(V, g0^*).
std::size_t mu_dual_rank(const std::vector<Matrix>& action, std::size_t n) {
  Dense m(n * action.size(), std::vector<mpq_class>(n, 0));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t a = 0; a < action.size(); ++a)
      for (std::size_t xi = 0; xi < n; ++xi) m[x * action.size() + a][xi] = entry(action[a], xi, x);
  return oracle_rank(m);
}

bool criterion_9(Audit& audit) {
  for (const auto& name : {"so2-V2", "nonab-g0"}) {
    const auto g = registry_get(name);
    const auto action = degree_zero_action(g);
    const std::size_t n = g.dim_of_degree(-1);
    const std::size_t skew = solve_prolongation(action, n, 1);
    const std::size_t hom = n * action.size();
    const std::size_t mu = mu_dual_rank(action, n);
    const std::size_t inv_skew = invariant_skew_forms(action, n);
    const std::size_t compat_sym = compatible_symmetric_forms(action, n);
    const std::size_t h11 = skew + hom - mu;
    const std::size_t h12 = inv_skew + compat_sym;

    const auto ctg = cotangent(g);
    const std::size_t general1 = betti(ctg, 1, 1);
    const std::size_t general2 = betti(ctg, 1, 2);
    audit.note(std::string(name) + ": dim g0^[1]=" + std::to_string(skew) + " dim Hom(V,g0*)=" + std::to_string(hom) +
               " rank mu*=" + std::to_string(mu) + " -> H^1_1 formula " + std::to_string(h11) + ", computed " +
               std::to_string(general1));
    audit.note(std::string(name) + ": invariant skew=" + std::to_string(inv_skew) + " compatible symmetric=" +
               std::to_string(compat_sym) + " -> H^1_2 formula " + std::to_string(h12) + ", computed " +
               std::to_string(general2));
    audit.note(std::string(name) + ": symmetric prolongation=" + std::to_string(solve_prolongation(action, n, -1)) +
               " compatible bilinear=" + std::to_string(compatible_general_forms(action, n)));

    const auto lib = depth_one_structure(g, AdaptedMetric::identity(g));
    audit.require(lib.skew_prolongation == skew && lib.hom_dim == hom && lib.mu_rank == mu &&
                      lib.invariant_skew == inv_skew && lib.compatible_symmetric == compat_sym,
                  std::string(name) + ": library module data differ from the test-side solvers");
    audit.require(lib.h1_1_general == general1 && lib.h1_2_general == general2,
                  std::string(name) + ": library cohomology differs from ker/im");
    audit.require(h11 == general1, std::string(name) + ": dim H^1_1 " + std::to_string(general1) + " != " +
                                       std::to_string(h11));
    audit.require(h12 == general2, std::string(name) + ": dim H^1_2 " + std::to_string(general2) + " != " +
                                       std::to_string(h12));
  }
  return audit.ok();
}

FormalCurvature slot_difference(const FormalCurvature& a, const FormalCurvature& b) {
  FormalCurvature out = a;
  for (const auto& [m, v] : b.components) {
    auto it = out.components.find(m);
    if (it == out.components.end()) {
      out.components[m] = Rational(-1) * v;
    } else {
      it->second = it->second - v;
    }
  }
  return out;
}

/// K - N lies in im d (C^1 -> C^2) and N is coclosed, degree by degree.
bool projection_characterization(const GradedLieAlgebra& g, const AdaptedMetric& metric, const FormalCurvature& k,
                                 const FormalCurvature& n) {
  const FormalCurvature diff = slot_difference(k, n);
  for (int m = 1; m <= max_curvature_degree(g); ++m) {
    const std::size_t dim = CochainSpace(g, 2, m).dim();
    if (dim == 0) continue;
    const Matrix d1 = differential_matrix(g, 1, m);
    const auto dit = diff.components.find(m);
    if (dit != diff.components.end() && !solve(d1, dit->second)) return false;
    const auto nit = n.components.find(m);
    if (nit != n.components.end() &&
        !is_zero(d1.transpose().apply(induced_gram(g, metric, 2, m).apply(nit->second))))
      return false;
  }
  return true;
}

bool criterion_10(Audit& audit) {
  for (const auto& g : test_support::corpus()) {
    const auto metric = random_adapted_metric(g, 41);
    const Normalizer normalizer(g, metric);
    const auto m_max = static_cast<std::size_t>(max_curvature_degree(g));
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const std::string where = g.name() + " seed " + std::to_string(seed);
      const auto k = random_curvature(g, 1000 + seed);
      const auto plain = normalizer.normalize(k);
      audit.require(plain.steps <= m_max, "too many steps on " + where);
      audit.require(normalizer.is_normal(plain.normal), "output not normal on " + where);
      audit.require(normalizer.normalize(plain.normal).normal == plain.normal, "not idempotent on " + where);
      audit.require(projection_characterization(g, metric, k, plain.normal),
                    "tail-free output is not the coexact-plus-harmonic part on " + where);

      const auto tail = test_support::random_tail(g, seed);
      const auto tailed = normalizer.normalize(k, &tail);
      audit.require(tailed.steps <= m_max, "too many steps with tail on " + where);
      audit.require(normalizer.is_normal(tailed.normal), "output with tail not normal on " + where);
      audit.require(normalizer.normalize(tailed.normal, &tail).normal == tailed.normal,
                    "not idempotent with tail on " + where);
    }
    const auto probe = uniqueness_probe(g, metric, random_curvature(g, 77), 20, 99);
    audit.require(probe.trials == 20 && probe.all_equal && probe.equal == 20,
                  "exact perturbation changed the normal form on " + g.name());
  }
  return audit.ok();
}

bool criterion_11(Audit& audit) {
  for (std::size_t n : {2u, 3u}) {
    const auto dims = prolongation_dims(gl_representation_algebra(n), 1);
    const std::size_t oracle = test_support::oracle_first_prolongation(gl_defining_action(n), n);
    audit.note("gl(" + std::to_string(n) + "): level 1 = " + std::to_string(dims.at(0)) + ", symmetric-tensor solver " +
               std::to_string(oracle) + ", classical n^2(n+1)/2 = " + std::to_string(n * n * (n + 1) / 2));
    audit.require(dims.at(0) == oracle && oracle == n * n * (n + 1) / 2,
                  "first prolongation of gl(" + std::to_string(n) + ") wrong");
  }
  const auto heis = prolong(registry_get("heis3"), 6);
  std::ostringstream levels;
  for (const auto& level : heis.levels) levels << " " << level.dim();
  audit.note("heis3 levels:" + levels.str());
  audit.require(heis.finite_type, "heis3 not reported finite type");
  audit.require(heis.levels.size() >= 2 && heis.levels.back().dim() == 0 &&
                    heis.levels[heis.levels.size() - 2].dim() == 0,
                "heis3 finite type without two consecutive zero levels");
  audit.require(!prolong(registry_get("heis3"), 1).finite_type, "finite type reported from a single level");
  audit.require(!prolong(scalar_line(), 5).finite_type, "scalar line reported finite type");
  return audit.ok();
}

bool criterion_12(Audit& audit) {
  using cli_runner::quote;
  using cli_runner::tanaka;
  cli_runner::TempDir dir;

  std::vector<std::string> names;
  for (const auto& name : registry_names()) {
    names.push_back(name);
    if (registry_get(name).is_non_positively_graded()) names.push_back("t*(" + name + ")");
  }
  for (const auto& name : names) {
    const auto emitted = tanaka("registry emit " + quote(name));
    audit.require(emitted.status == 0, "registry emit failed for " + name);
    const std::string again = emit_document(parse_document(emitted.out));
    audit.require(again == emitted.out, "emit/parse/emit differs for " + name);
    const std::string path = dir.file("doc.json", emitted.out);
    const auto from_file = tanaka("--json validate " + quote(path));
    const auto from_registry = tanaka("--json validate " + quote("registry:" + name));
    const auto digest = [](const std::string& out) {
      const auto pos = out.find("\"sha256\"");
      return pos == std::string::npos ? std::string() : out.substr(pos, 80);
    };
    audit.require(from_file.status == 0 && !digest(from_file.out).empty() &&
                      digest(from_file.out) == digest(from_registry.out),
                  "file and registry inputs differ for " + name);
  }
  {
    const auto out = dir.sub("any");
    const auto run = tanaka("--out-dir " + quote(out.string()) +
                            " cotangent registry:sl2-graded --grading any --output sl2-ctg.json");
    audit.require(run.status == 0, "cotangent --grading any failed for sl2-graded");
    const std::string text = cli_runner::slurp(out / "sl2-ctg.json");
    audit.require(!text.empty() && emit_document(parse_document(text)) == text,
                  "emit/parse/emit differs for the cotangent of sl2-graded");
  }

  const auto heis_ctg = cotangent(registry_get("heis3"));
  const std::string curvature = dir.file("curvature.json", emit_curvature(random_curvature(heis_ctg, 5)));
  const std::vector<std::string> commands = {
      "cohomology registry:heis3 --k 1 --l-min 0 --l-max 3 --metric random:7",
      "cohomology 'registry:t*(so2-V2)' --k 2 --l-min 1 --l-max 4",
      "admissible registry:sl2-graded --metric btheta",
      "admissible 'registry:t*(nonab-g0)'",
      "ctg-report registry:so2-V2 --metric random:3",
      "ctg-report registry:heis3",
      "prolong registry:free-nilp-2-3 --max-k 3",
      "normalize 'registry:t*(heis3)' " + quote(curvature) + " --metric random:9",
  };
  std::size_t run_id = 0;
  for (const auto& command : commands) {
    for (const std::string json : {"", "--json "}) {
      std::vector<std::string> outputs;
      std::vector<std::string> files;
      int status = -1;
      for (const std::string parallel : {"", "--parallel ", "", "--parallel "}) {
        const auto out = dir.sub("run" + std::to_string(run_id++));
        const auto r = tanaka(json + parallel + "--out-dir " + quote(out.string()) + " " + command);
        if (status < 0) status = r.status;
        audit.require(r.status == status, "exit status varies for " + command);
        std::string written;
        for (const auto& name : {"normal_curvature.json", "gauge_correction.json"}) {
          if (std::filesystem::exists(out / name)) written += cli_runner::slurp(out / name);
        }
        // The report names the output directory; compare with the run directory masked.
        std::string report = r.out;
        for (std::size_t p; (p = report.find(out.string())) != std::string::npos;)
          report.replace(p, out.string().size(), "<out>");
        outputs.push_back(report);
        files.push_back(written);
      }
      audit.require(status == 0, "non-zero exit (" + std::to_string(status) + ") for " + json + command);
      for (std::size_t i = 1; i < outputs.size(); ++i) {
        audit.require(outputs[i] == outputs[0], "report differs between runs for " + json + command);
        audit.require(files[i] == files[0], "written files differ between runs for " + json + command);
      }
    }
  }
  return audit.ok();
}

struct Criterion {
  const char* summary;
  std::function<bool(Audit&)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {"d^2 = 0 exactly for k = 0..3 on 10 algebras", criterion_1},
      {"explicit and adjoint codifferentials agree for 3 random metrics", criterion_2},
      {"Hodge parts orthogonal, complete, and ker Laplacian = ker d cap ker d*", criterion_3},
      {"harmonic and ker/im dimensions agree and do not depend on the metric", criterion_4},
      {"admissibility identity check agrees with direct equivariance", criterion_5},
      {"sl2 with B_theta and so2-V2 with invariant blocks are admissible", criterion_6},
      {"cotangent standard metrics are inadmissible and the implication audit is clean", criterion_7},
      {"closed-form cotangent H^1_l equals the general computation", criterion_8},
      {"depth-one structural formula for H^1_1 and H^1_2", criterion_9},
      {"normalization terminates, is normal, idempotent, projective and gauge invariant", criterion_10},
      {"first prolongation of gl(n) and the finite-type flag", criterion_11},
      {"CLI round trip and bit-identical repeated runs", criterion_12},
  };
  return all;
}

bool run_criterion(std::size_t n) {
  const auto& c = criteria().at(n - 1);
  Audit audit;
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = c.run(audit);
  } catch (const std::exception& e) {
    audit.note(std::string("exception: ") + e.what());
    ok = false;
  }
  const double secs = seconds_since(start);
  std::ostringstream tail;
  tail.precision(1);
  tail << std::fixed << " (" << audit.checks() << " checks, " << audit.failures() << " failed, " << secs << " s)";
  std::cout << "criterion " << n << ": " << (ok ? "PASS " : "FAIL ") << c.summary << tail.str() << std::endl;
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::size_t> selected;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      const long n = std::strtol(argv[++i], nullptr, 10);
      if (n < 1 || n > static_cast<long>(criteria().size())) {
        std::cerr << "criterion must lie in 1.." << criteria().size() << "\n";
        return 64;
      }
      selected.push_back(static_cast<std::size_t>(n));
    } else {
      std::cerr << "usage: acceptance [--criterion N]...\n";
      return 64;
    }
  }
  if (selected.empty())
    for (std::size_t n = 1; n <= criteria().size(); ++n) selected.push_back(n);
  bool all = true;
  for (std::size_t n : selected) all = run_criterion(n) && all;
  return all ? 0 : 1;
}
