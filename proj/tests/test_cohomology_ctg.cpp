#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "tanaka/admissibility.hpp"
#include "tanaka/cohomology_ctg.hpp"
#include "tanaka/error.hpp"
#include "tanaka/registry.hpp"

using namespace tanaka;
using test_support::Dense;
using test_support::oracle_rank;

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

mpq_class entry(const Matrix& a, std::size_t r, std::size_t c) { return a.at(r, c).raw(); }

/// Forms b (n x n unknowns b[x][y]) with b(x, y) = sign * b(y, x) and b(Ax, y) + twist * b(x, Ay) = 0.
std::size_t oracle_form_count(const std::vector<Matrix>& action, std::size_t n, int sign, int twist) {
  Dense rows;
  auto var = [n](std::size_t x, std::size_t y) { return x * n + y; };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      std::vector<mpq_class> r(n * n, 0);
      r[var(x, y)] += 1;
      r[var(y, x)] -= sign;
      rows.push_back(r);
    }
  for (const auto& a : action)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        std::vector<mpq_class> r(n * n, 0);
        for (std::size_t z = 0; z < n; ++z) {
          r[var(z, y)] += entry(a, z, x);
          r[var(x, z)] += twist * entry(a, z, y);
        }
        rows.push_back(r);
      }
  return n * n - oracle_rank(rows);
}

/// Maps f: V -> g0 (unknowns c[x][a]) with f(X)Y + sign * f(Y)X = 0.
std::size_t oracle_prolongation(const std::vector<Matrix>& action, std::size_t n, int sign) {
  const std::size_t m = action.size();
  if (m == 0) return 0;
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

std::vector<Matrix> so2_action() { return degree_zero_action(registry_get("so2-V2")); }

}  // namespace

TEST_CASE("invariant forms") {
  CHECK(invariant_forms(so2_action(), 2) == std::pair<std::size_t, std::size_t>{1, 2});
  for (std::size_t n : {2u, 3u}) {
    CHECK(invariant_forms(gl_defining_action(n), n) == std::pair<std::size_t, std::size_t>{0, 0});
    CHECK(invariant_forms({}, n) == std::pair<std::size_t, std::size_t>{binomial(n, 2), n * (n + 1) / 2});
  }
  for (const auto& name : {"so2-V2", "nonab-g0"}) {
    const auto action = degree_zero_action(registry_get(name));
    const auto [skew, sym] = invariant_forms(action, 2);
    CHECK(skew == oracle_form_count(action, 2, -1, 1));
    CHECK(sym == oracle_form_count(action, 2, 1, -1));
  }
}

TEST_CASE("first prolongations of the degree-zero action") {
  for (std::size_t n : {2u, 3u}) {
    const auto gl = gl_defining_action(n);
    CHECK(skew_prolongation(gl, n).dim() == n * binomial(n, 2));
    CHECK(skew_prolongation(gl, n).dim() == oracle_prolongation(gl, n, 1));
    CHECK(symmetric_prolongation(gl, n).dim() == oracle_prolongation(gl, n, -1));
  }
  CHECK(skew_prolongation({}, 3).dim() == 0);
  for (const auto& name : {"so2-V2", "nonab-g0"}) {
    CAPTURE(name);
    const auto g = registry_get(name);
    const auto action = degree_zero_action(g);
    const std::size_t skew = skew_prolongation(action, 2).dim();
    CHECK(skew == oracle_prolongation(action, 2, 1));
    // Degree-one cocycles restrict to maps with f(X)Y = f(Y)X.
    const auto s = s_space(g);
    CHECK(s.restricted.dim() == oracle_prolongation(action, 2, -1));
    CHECK(s.restriction_injective);
  }
}

TEST_CASE("S space above degree one vanishes") {
  for (const auto& name : {"heis3", "free-nilp-2-3"}) {
    CAPTURE(name);
    const auto s = s_space(registry_get(name));
    REQUIRE_FALSE(s.higher_kernels.empty());
    for (const auto& [l, dim] : s.higher_kernels) CHECK(dim == 0);
  }
  CHECK_THROWS_AS(s_space(registry_get("sl2-graded")), Error);
}

TEST_CASE("Z and B spaces") {
  const auto so2 = registry_get("so2-V2");
  const auto zb = zb_spaces(so2, 1);
  CHECK(zb.z.dim() == 2);
  CHECK(zb.b.dim() == rank(contraction_dual(so2_action(), 2)));

  const auto nonab = registry_get("nonab-g0");
  const auto zb1 = zb_spaces(nonab, 1);
  CHECK(zb1.z.dim() == 4);
  CHECK(oracle_rank(contraction_dual(degree_zero_action(nonab), 2)) == 1);
  CHECK(zb1.z.dim() - zb1.b.dim() == 3);

  for (const auto& name : registry_names()) {
    const auto g = registry_get(name);
    if (!g.is_non_positively_graded()) continue;
    CAPTURE(name);
    for (int l = 1; l <= g.depth() + 1; ++l) {
      const auto s = zb_spaces(g, l);
      CHECK(s.b_in_z);
      CHECK(s.restriction_injective);
      if (l == 1) CHECK(s.z.dim() == g.dim_of_degree(-1) * g.dim_of_degree(0));
    }
    CHECK_THROWS_AS(zb_spaces(g, 0), Error);
    CHECK_THROWS_AS(zb_spaces(g, g.depth() + 2), Error);
  }
}

TEST_CASE("closed form against the general machinery") {
  for (const auto& name : {"so2-V2", "nonab-g0", "heis3"}) {
    CAPTURE(name);
    const auto g = registry_get(name);
    const auto report = ctg_cohomology_report(g, AdaptedMetric::identity(g));
    CHECK(report.all_agree);
    CHECK(report.rows.size() == static_cast<std::size_t>(cotangent(g).height() + 2));
    if (g.depth() == 1) {
      for (const auto& row : report.rows)
        if (row.l >= 3) CHECK(row.general == 0);
    }
  }
  const auto so2 = registry_get("so2-V2");
  const auto report = ctg_cohomology_report(so2, random_adapted_metric(so2, 4));
  CHECK(report.rows.at(1).general == 3);
  CHECK(report.rows.at(1).closed_form == 3);
  const auto nonab = registry_get("nonab-g0");
  CHECK(ctg_cohomology_report(nonab, AdaptedMetric::identity(nonab), true).rows.at(0).general > 0);
}

TEST_CASE("decomposition of the cotangent differential") {
  for (const auto& name : {"so2-V2", "nonab-g0", "heis3", "free-nilp-2-3"}) {
    CAPTURE(name);
    CHECK(decomposition_lemma_holds(registry_get(name), 19, 5));
  }
}

TEST_CASE("bracket-word relations") {
  for (const auto& name : {"heis3", "free-nilp-2-3"}) {
    const auto g = registry_get(name);
    for (int l = 2; l <= g.depth() + 1; ++l) CHECK(word_relation_check(g, l).all_hold);
  }
}

TEST_CASE("depth-one structure pieces") {
  const auto so2 = registry_get("so2-V2");
  const auto s = depth_one_structure(so2, AdaptedMetric::identity(so2));
  CHECK(s.dim_v == 2);
  CHECK(s.dim_g0 == 1);
  CHECK(s.hom_dim == 2);
  CHECK(s.invariant_skew == 1);
  CHECK(s.compatible_symmetric == 2);
  CHECK(s.quotient_complement.dim() == s.hom_dim - s.mu_rank);
  CHECK(s.h1_2_holds);
  CHECK(s.vanishing_holds);
  CHECK_THROWS_AS(depth_one_structure(registry_get("heis3"), AdaptedMetric::identity(registry_get("heis3"))), Error);
}
