#pragma once

// Shared fixtures and independent oracles for the test suites. The oracles use
// plain dense mpq_class arithmetic and never call into the library's linear algebra.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "tanaka/graded_lie.hpp"
#include "tanaka/hodge.hpp"
#include "tanaka/matrix.hpp"
#include "tanaka/normalization.hpp"
#include "tanaka/registry.hpp"

namespace test_support {

using tanaka::GradedLieAlgebra;
using tanaka::Matrix;
using tanaka::Rational;
using tanaka::Vector;

/// The five built-in algebras followed by their cotangent images (10 in total).
inline std::vector<GradedLieAlgebra> corpus() {
  std::vector<GradedLieAlgebra> out;
  for (const auto& n : tanaka::registry_names()) out.push_back(tanaka::registry_get(n));
  for (const auto& n : tanaka::registry_names()) {
    out.push_back(tanaka::cotangent(tanaka::registry_get(n), tanaka::CotangentGrading::kAnyGrading));
  }
  return out;
}

inline std::vector<GradedLieAlgebra> small_corpus() {
  std::vector<GradedLieAlgebra> out;
  for (auto& g : corpus()) {
    if (g.name().find("free-nilp") == std::string::npos) out.push_back(std::move(g));
  }
  return out;
}

using Dense = std::vector<std::vector<mpq_class>>;

inline Dense dense_of(const Matrix& m) {
  Dense d(m.rows(), std::vector<mpq_class>(m.cols(), 0));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) d[r][c] = m.at(r, c).raw();
  return d;
}

/// Rank by textbook dense Gaussian elimination.
inline std::size_t oracle_rank(Dense a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (a[r][c] == 0) continue;
      const mpq_class f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

inline std::size_t oracle_rank(const Matrix& m) { return oracle_rank(dense_of(m)); }

/// Determinant by the Leibniz permutation expansion (small matrices only).
inline mpq_class leibniz_det(const Dense& a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  mpq_class total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    mpq_class term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= a[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Inner product of e^I (x) e_v and e^J (x) e_w computed from scratch: the determinant of the
/// dual pairings <e^{i_s}, e^{j_t}> (entries of the inverse negative Gram) times <e_v, e_w>.
inline mpq_class oracle_wedge_inner(const tanaka::AdaptedMetric& metric, const GradedLieAlgebra& g,
                                    const std::vector<std::size_t>& args_i, std::size_t v,
                                    const std::vector<std::size_t>& args_j, std::size_t w) {
  const auto neg = g.negative_indices();
  auto pos = [&neg](std::size_t idx) {
    return static_cast<std::size_t>(std::find(neg.begin(), neg.end(), idx) - neg.begin());
  };
  const Dense dual = dense_of(metric.negative_dual_gram());
  Dense pairing(args_i.size(), std::vector<mpq_class>(args_j.size()));
  for (std::size_t s = 0; s < args_i.size(); ++s)
    for (std::size_t t = 0; t < args_j.size(); ++t) pairing[s][t] = dual[pos(args_i[s])][pos(args_j[t])];
  return leibniz_det(pairing) * metric.gram().at(v, w).raw();
}

/// dim of g0 (x) V* cap V (x) S^2 V* for g0 spanned by the given n x n matrices A_i, solved over
/// tensors S^a_{bc} (b <= c stored once) together with coefficients lambda_{c,i} of each slice
/// (S^a_{b c})_{a,b} = sum_i lambda_{c,i} A_i. The A_i are assumed linearly independent.
inline std::size_t oracle_first_prolongation(const std::vector<Matrix>& gens, std::size_t n) {
  const std::size_t m = gens.size();
  auto sym = [n](std::size_t a, std::size_t b, std::size_t c) {
    if (b > c) std::swap(b, c);
    return a * n * n + b * n + c;
  };
  std::vector<std::size_t> used;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = b; c < n; ++c) used.push_back(sym(a, b, c));
  std::map<std::size_t, std::size_t> column;
  for (auto u : used) column.emplace(u, column.size());
  const std::size_t s_count = column.size();
  const std::size_t unknowns = s_count + n * m;
  Dense rows;
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        std::vector<mpq_class> r(unknowns, 0);
        r[column.at(sym(a, b, c))] += 1;
        for (std::size_t i = 0; i < m; ++i) r[s_count + c * m + i] -= gens[i].at(a, b).raw();
        rows.push_back(r);
      }
  return unknowns - oracle_rank(rows);
}

/// A seeded nonlinear tail: each degree d in (m, max] receives r_d * s + t_d * s^2 where s is a fixed
/// random functional of phi_m and r_d, t_d are fixed random cochains.
inline tanaka::TailOperator random_tail(const GradedLieAlgebra& g, std::uint64_t seed) {
  const int top = tanaka::max_curvature_degree(g);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-2, 2);
  std::map<int, std::pair<Vector, Vector>> shapes;
  std::map<int, Vector> functionals;
  for (int d = 1; d <= top; ++d) {
    const std::size_t n2 = tanaka::CochainSpace(g, 2, d).dim();
    const std::size_t n1 = tanaka::CochainSpace(g, 1, d).dim();
    Vector r, t, w;
    for (std::size_t i = 0; i < n2; ++i) {
      r.push_back(Rational(coef(rng)));
      t.push_back(Rational(coef(rng)));
    }
    for (std::size_t i = 0; i < n1; ++i) w.push_back(Rational(coef(rng)));
    shapes[d] = {r, t};
    functionals[d] = w;
  }
  return [=](int m, const Vector& phi_m, const tanaka::FormalCurvature&) {
    tanaka::FormalCurvature out;
    const Rational s = tanaka::dot(functionals.at(m), phi_m);
    if (s.is_zero()) return out;
    for (int d = m + 1; d <= top; ++d) {
      const auto& [r, t] = shapes.at(d);
      if (r.empty()) continue;
      out.components[d] = s * r + (s * s) * t;
    }
    return out;
  };
}

inline Vector as_vector(const std::vector<long>& xs) {
  Vector v;
  for (long x : xs) v.push_back(Rational(x));
  return v;
}

inline Matrix dense_matrix(const std::vector<std::vector<long>>& rows) {
  std::vector<Vector> r;
  for (const auto& row : rows) r.push_back(as_vector(row));
  return Matrix::from_dense(r);
}

}  // namespace test_support
