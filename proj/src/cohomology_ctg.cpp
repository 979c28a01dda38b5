#include "tanaka/cohomology_ctg.hpp"

#include <functional>
#include <map>
#include <random>

#include "tanaka/admissibility.hpp"
#include "tanaka/cochain.hpp"
#include "tanaka/error.hpp"
#include "tanaka/parallel.hpp"

namespace tanaka {

namespace {

// Kernel of the linear conditions whose residual on the u-th basis unknown is residual(u).
Subspace solve_conditions(std::size_t unknowns, std::size_t conditions,
                          const std::function<Vector(std::size_t)>& residual) {
  std::vector<Vector> columns;
  columns.reserve(unknowns);
  for (std::size_t u = 0; u < unknowns; ++u) columns.push_back(residual(u));
  return kernel_basis(Matrix::from_columns(conditions, columns));
}

std::size_t position_in(const std::vector<std::size_t>& v, std::size_t x) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] == x) return i;
  throw Error(ErrorCode::kInternalInconsistency, "index not found");
}

Vector restrict_to_generators(const GradedLieAlgebra& g, const CochainSpace& space, const Vector& coeffs,
                              const std::vector<std::size_t>& targets, std::size_t value_offset) {
  const auto gens = g.indices_of_degree(-1);
  Vector out = zero_vector(gens.size() * targets.size());
  for (std::size_t i = 0; i < space.dim(); ++i) {
    if (coeffs[i].is_zero()) continue;
    const auto& e = space[i];
    if (g.degree(e.args[0]) != -1) continue;
    const std::size_t v = e.value - value_offset;
    out[position_in(gens, e.args[0]) * targets.size() + position_in(targets, v)] = coeffs[i];
  }
  return out;
}

}  // namespace

SSpace s_space(const GradedLieAlgebra& g) {
  if (g.max_degree() > 0) throw Error(ErrorCode::kNotNonPositivelyGraded, g.name() + " has positive degrees");
  SSpace s;
  const CochainSpace space(g, 1, 1);
  s.kernel = kernel_basis(differential_matrix(g, 1, 1));
  std::vector<Vector> restricted;
  for (const auto& v : s.kernel.basis)
    restricted.push_back(restrict_to_generators(g, space, v, g.indices_of_degree(0), 0));
  s.restricted = span_of(g.dim_of_degree(-1) * g.dim_of_degree(0), restricted);
  s.restriction_injective = s.restricted.dim() == s.kernel.dim();
  for (int l = 2; l <= g.depth(); ++l) {
    s.higher_kernels.emplace_back(l, kernel_basis(differential_matrix(g, 1, l)).dim());
  }
  return s;
}

ZBSpaces zb_spaces(const GradedLieAlgebra& g, int l) {
  if (l < 1 || l > g.depth() + 1) {
    throw Error(ErrorCode::kRangeError, "l = " + std::to_string(l) + " outside 1.." + std::to_string(g.depth() + 1));
  }
  const GradedLieAlgebra h = cotangent(g);
  const std::size_t n = g.dim();
  const CochainSpace space(h, 1, l);
  std::vector<std::size_t> dual_columns;
  for (std::size_t i = 0; i < space.dim(); ++i)
    if (space[i].value >= n) dual_columns.push_back(i);
  const Matrix d = differential_matrix(h, 1, l);
  std::vector<std::size_t> all_rows(d.rows());
  for (std::size_t r = 0; r < d.rows(); ++r) all_rows[r] = r;
  const Subspace cocycles = kernel_basis(d.select(all_rows, dual_columns));

  ZBSpaces out;
  out.l = l;
  out.cocycle_dim = cocycles.dim();
  const auto targets = g.indices_of_degree(1 - l);
  const auto gens = g.indices_of_degree(-1);
  const std::size_t ambient = gens.size() * targets.size();
  std::vector<Vector> restricted;
  for (const auto& v : cocycles.basis) {
    Vector full = zero_vector(space.dim());
    for (std::size_t i = 0; i < dual_columns.size(); ++i) full[dual_columns[i]] = v[i];
    restricted.push_back(restrict_to_generators(g, space, full, targets, n));
  }
  out.z = span_of(ambient, restricted);
  out.restriction_injective = out.z.dim() == out.cocycle_dim;

  // beta-hat(X)(Z) = -beta([X, Z]) for beta in (g_{-l})^*
  std::vector<Vector> hats;
  for (auto b : g.indices_of_degree(-l)) {
    Vector hat = zero_vector(ambient);
    for (std::size_t x = 0; x < gens.size(); ++x)
      for (std::size_t z = 0; z < targets.size(); ++z)
        hat[x * targets.size() + z] = -g.structure_constant(gens[x], targets[z], b);
    hats.push_back(hat);
  }
  out.b = span_of(ambient, hats);
  out.b_in_z = is_subspace_of(out.b, out.z);
  return out;
}

CtgCohomologyReport ctg_cohomology_report(const GradedLieAlgebra& g, const AdaptedMetric& gram_g, bool parallel) {
  const CotangentMetric ctg = cotangent_standard_metric(g, gram_g);
  CtgCohomologyReport report;
  report.algebra = ctg.algebra.name();
  const int top = ctg.algebra.height() + 2;
  const std::size_t s_dim = s_space(g).restricted.dim();
  report.rows = indexed_map<CtgDegreeRow>(
      static_cast<std::size_t>(top),
      [&](std::size_t i) {
        CtgDegreeRow row;
        row.l = static_cast<int>(i) + 1;
        if (row.l <= g.depth() + 1) {
          const ZBSpaces zb = zb_spaces(g, row.l);
          row.z_dim = zb.z.dim();
          row.b_dim = zb.b.dim();
          row.closed_form = row.z_dim - row.b_dim;
        }
        if (row.l == 1) {
          row.s_dim = s_dim;
          row.closed_form += s_dim;
        }
        row.general = cohomology_dim(ctg.algebra, ctg.metric, 1, row.l).harmonic;
        row.agree = row.general == row.closed_form;
        return row;
      },
      parallel);
  report.all_agree = true;
  for (const auto& r : report.rows) report.all_agree = report.all_agree && r.agree;
  return report;
}

bool decomposition_lemma_holds(const GradedLieAlgebra& g, std::uint64_t seed, std::size_t samples) {
  const GradedLieAlgebra h = cotangent(g);
  const std::size_t n = g.dim();
  const auto neg = g.negative_indices();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-3, 3);

  for (int l : homogeneous_degrees(h, 1)) {
    const CochainSpace c1(h, 1, l);
    const CochainSpace c2(h, 2, l);
    const Matrix d = differential_matrix(h, 1, l);
    for (std::size_t trial = 0; trial < samples; ++trial) {
      Vector alpha = zero_vector(c1.dim());
      for (auto& x : alpha) x = Rational(coeff(rng));
      const Vector d_alpha = d.apply(alpha);
      // alpha(e_p) split into its g-valued and g^*-valued parts.
      std::map<std::size_t, Vector> part_g, part_dual;
      for (auto p : neg) {
        part_g[p] = zero_vector(n);
        part_dual[p] = zero_vector(n);
      }
      for (std::size_t i = 0; i < c1.dim(); ++i) {
        const auto& e = c1[i];
        if (e.value < n) {
          part_g[e.args[0]][e.value] = alpha[i];
        } else {
          part_dual[e.args[0]][e.value - n] = alpha[i];
        }
      }
      for (std::size_t s = 0; s < neg.size(); ++s) {
        for (std::size_t t = s + 1; t < neg.size(); ++t) {
          const std::size_t p = neg[s];
          const std::size_t q = neg[t];
          const Vector ep = unit_vector(n, p);
          const Vector eq = unit_vector(n, q);
          const Vector pq = bracket(g, ep, eq);
          Vector value_g = bracket(g, ep, part_g[q]) - bracket(g, eq, part_g[p]);
          Vector value_dual = coadjoint_matrix(g, ep).apply(part_dual[q]) - coadjoint_matrix(g, eq).apply(part_dual[p]);
          for (std::size_t m = 0; m < n; ++m) {
            if (pq[m].is_zero()) continue;
            value_g = value_g - pq[m] * part_g[m];
            value_dual = value_dual - pq[m] * part_dual[m];
          }
          for (std::size_t v = 0; v < 2 * n; ++v) {
            const Rational expected = v < n ? value_g[v] : value_dual[v - n];
            auto idx = c2.index_of({{p, q}, v});
            const Rational actual = idx ? d_alpha[*idx] : Rational(0);
            if (actual != expected) return false;
          }
        }
      }
    }
  }
  return true;
}

WordRelationCheck word_relation_check(const GradedLieAlgebra& g, int l) {
  if (l < 2 || l > g.depth() + 1) throw Error(ErrorCode::kRangeError, "word relations are checked for 2 <= l <= depth + 1");
  const ZBSpaces zb = zb_spaces(g, l);
  const auto gens = g.indices_of_degree(-1);
  const auto targets = g.indices_of_degree(1 - l);
  const std::size_t n = g.dim();
  WordRelationCheck check;

  for (const auto& alpha : zb.z.basis) {
    auto alpha_of = [&](std::size_t gen_pos, const Vector& z) {
      Rational out;
      for (std::size_t q = 0; q < targets.size(); ++q) out += alpha[gen_pos * targets.size() + q] * z[targets[q]];
      return out;
    };
    for (int s = 2; s <= std::min(l, g.depth()); ++s) {
      const auto domain = g.indices_of_degree(s - l);
      if (domain.empty()) continue;
      // key: value normalized by its first nonzero coefficient -> expression / that coefficient
      std::map<std::vector<Rational>, std::vector<Rational>> seen;
      std::vector<std::size_t> word(static_cast<std::size_t>(s), 0);
      while (true) {
        std::vector<Vector> xs;
        for (auto w : word) xs.push_back(unit_vector(n, gens[w]));
        Vector value = xs.back();
        for (int i = s - 2; i >= 0; --i) value = bracket(g, xs[static_cast<std::size_t>(i)], value);

        std::vector<Rational> expr;
        for (auto zi : domain) {
          Rational total;
          for (int i = 1; i <= s; ++i) {
            Vector w = unit_vector(n, zi);
            for (int r = 1; r <= i - 1; ++r) w = bracket(g, xs[static_cast<std::size_t>(r - 1)], w);
            if (i < s) {
              Vector y = xs.back();
              for (int r = s - 1; r >= i + 1; --r) y = bracket(g, xs[static_cast<std::size_t>(r - 1)], y);
              w = bracket(g, y, w);
            }
            const Rational term = alpha_of(word[static_cast<std::size_t>(i - 1)], w);
            total += (i % 2 == 1) ? term : -term;
          }
          expr.push_back(total);
        }

        std::size_t lead = 0;
        while (lead < value.size() && value[lead].is_zero()) ++lead;
        ++check.word_pairs;
        if (lead == value.size()) {
          for (const auto& x : expr)
            if (!x.is_zero()) check.all_hold = false;
        } else {
          const Rational c = value[lead];
          std::vector<Rational> key;
          for (const auto& x : value) key.push_back(x / c);
          std::vector<Rational> scaled;
          for (const auto& x : expr) scaled.push_back(x / c);
          auto [it, inserted] = seen.emplace(key, scaled);
          if (!inserted && it->second != scaled) check.all_hold = false;
        }

        std::size_t pos = 0;
        while (pos < word.size() && ++word[pos] == gens.size()) word[pos++] = 0;
        if (pos == word.size()) break;
      }
    }
  }
  return check;
}

Subspace skew_prolongation(const std::vector<Matrix>& action, std::size_t dim_v) {
  const std::size_t m = action.size();
  return solve_conditions(dim_v * m, dim_v * dim_v * dim_v, [&](std::size_t u) {
    const std::size_t fx = u / m;
    const std::size_t fa = u % m;
    Vector r = zero_vector(dim_v * dim_v * dim_v);
    // f(X)Y + f(Y)X with f = e^{fx} (x) A_{fa}
    for (std::size_t x = 0; x < dim_v; ++x)
      for (std::size_t y = 0; y < dim_v; ++y)
        for (std::size_t i = 0; i < dim_v; ++i) {
          Rational v;
          if (x == fx) v += action[fa].at(i, y);
          if (y == fx) v += action[fa].at(i, x);
          r[(x * dim_v + y) * dim_v + i] = v;
        }
    return r;
  });
}

Subspace symmetric_prolongation(const std::vector<Matrix>& action, std::size_t dim_v) {
  const std::size_t m = action.size();
  return solve_conditions(dim_v * m, dim_v * dim_v * dim_v, [&](std::size_t u) {
    const std::size_t fx = u / m;
    const std::size_t fa = u % m;
    Vector r = zero_vector(dim_v * dim_v * dim_v);
    for (std::size_t x = 0; x < dim_v; ++x)
      for (std::size_t y = 0; y < dim_v; ++y)
        for (std::size_t i = 0; i < dim_v; ++i) {
          Rational v;
          if (x == fx) v += action[fa].at(i, y);
          if (y == fx) v -= action[fa].at(i, x);
          r[(x * dim_v + y) * dim_v + i] = v;
        }
    return r;
  });
}

namespace {

// b(A x, y) for the bilinear form with matrix b (b(u, v) = u^T b v) on basis vectors.
Rational form_on(const Matrix& b, const Matrix& a_left, const Matrix* a_right, std::size_t x, std::size_t y) {
  const std::size_t n = b.rows();
  Rational out;
  for (std::size_t k = 0; k < n; ++k) {
    const Rational left = a_left.at(k, x);
    if (left.is_zero()) continue;
    if (a_right) {
      for (std::size_t j = 0; j < n; ++j) out += left * b.at(k, j) * a_right->at(j, y);
    } else {
      out += left * b.at(k, y);
    }
  }
  return out;
}

std::size_t count_forms(const std::vector<Matrix>& action, std::size_t n, const std::vector<Matrix>& forms,
                        const std::function<Rational(const Matrix&, const Matrix&, std::size_t, std::size_t)>& cond) {
  const std::size_t conditions = std::max<std::size_t>(1, action.size()) * n * n;
  return solve_conditions(forms.size(), conditions, [&](std::size_t u) {
           Vector r = zero_vector(conditions);
           for (std::size_t a = 0; a < action.size(); ++a)
             for (std::size_t x = 0; x < n; ++x)
               for (std::size_t y = 0; y < n; ++y) r[(a * n + x) * n + y] = cond(forms[u], action[a], x, y);
           return r;
         })
      .dim();
}

}  // namespace

std::pair<std::size_t, std::size_t> invariant_forms(const std::vector<Matrix>& action, std::size_t dim_v) {
  const std::size_t n = dim_v;
  const Matrix id = Matrix::identity(n);
  std::vector<Matrix> skew, sym;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Matrix s(n, n);
      s.set(i, j, Rational(1));
      s.set(j, i, Rational(1));
      sym.push_back(s);
      if (i == j) continue;
      Matrix w(n, n);
      w.set(i, j, Rational(1));
      w.set(j, i, Rational(-1));
      skew.push_back(w);
    }
  }
  // w(Ax, y) + w(x, Ay) = 0
  const std::size_t skew_dim = count_forms(action, n, skew, [&](const Matrix& w, const Matrix& a, auto x, auto y) {
    return form_on(w, a, nullptr, x, y) + form_on(w, id, &a, x, y);
  });
  // s(Ax, y) - s(x, Ay) = 0
  const std::size_t sym_dim = count_forms(action, n, sym, [&](const Matrix& s, const Matrix& a, auto x, auto y) {
    return form_on(s, a, nullptr, x, y) - form_on(s, id, &a, x, y);
  });
  return {skew_dim, sym_dim};
}

std::size_t compatible_bilinear_forms(const std::vector<Matrix>& action, std::size_t dim_v) {
  const std::size_t n = dim_v;
  const Matrix id = Matrix::identity(n);
  std::vector<Matrix> all;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix b(n, n);
      b.set(i, j, Rational(1));
      all.push_back(b);
    }
  // b(x, Ay) - b(y, Ax) = 0
  return count_forms(action, n, all, [&](const Matrix& b, const Matrix& a, auto x, auto y) {
    return form_on(b, id, &a, x, y) - form_on(b, id, &a, y, x);
  });
}

Matrix contraction_dual(const std::vector<Matrix>& action, std::size_t dim_v) {
  const std::size_t m = action.size();
  Matrix mu(dim_v * m, dim_v);
  for (std::size_t x = 0; x < dim_v; ++x)
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t beta = 0; beta < dim_v; ++beta) mu.set(x * m + a, beta, action[a].at(beta, x));
  return mu;
}

DepthOneStructure depth_one_structure(const GradedLieAlgebra& g, const AdaptedMetric& gram_g) {
  if (g.depth() != 1 || g.max_degree() > 0) {
    throw Error(ErrorCode::kRangeError, g.name() + " is not a depth-one non-positively graded algebra");
  }
  DepthOneStructure s;
  const auto action = degree_zero_action(g);
  s.dim_v = g.dim_of_degree(-1);
  s.dim_g0 = g.dim_of_degree(0);
  s.skew_prolongation = skew_prolongation(action, s.dim_v).dim();
  s.symmetric_prolongation = symmetric_prolongation(action, s.dim_v).dim();
  s.hom_dim = s.dim_v * s.dim_g0;
  const Matrix mu = contraction_dual(action, s.dim_v);
  s.mu_rank = rank(mu);
  s.quotient_complement = orthogonal_complement(image_basis(mu), Matrix::identity(s.hom_dim));
  std::tie(s.invariant_skew, s.compatible_symmetric) = invariant_forms(action, s.dim_v);
  s.compatible_bilinear = compatible_bilinear_forms(action, s.dim_v);
  s.h1_1_formula = s.skew_prolongation + s.hom_dim - s.mu_rank;
  s.h1_2_formula = s.invariant_skew + s.compatible_symmetric;

  const CotangentMetric ctg = cotangent_standard_metric(g, gram_g);
  s.h1_1_general = cohomology_dim(ctg.algebra, ctg.metric, 1, 1).harmonic;
  s.h1_2_general = cohomology_dim(ctg.algebra, ctg.metric, 1, 2).harmonic;
  for (int l = 3; l <= ctg.algebra.height() + 2; ++l) {
    s.h1_above_2_max = std::max(s.h1_above_2_max, cohomology_dim(ctg.algebra, ctg.metric, 1, l).harmonic);
  }
  s.h1_1_holds = s.h1_1_formula == s.h1_1_general;
  s.h1_2_holds = s.h1_2_formula == s.h1_2_general;
  s.vanishing_holds = s.h1_above_2_max == 0;
  return s;
}

}  // namespace tanaka
