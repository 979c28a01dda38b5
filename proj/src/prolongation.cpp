#include "tanaka/prolongation.hpp"

#include "tanaka/error.hpp"
#include "tanaka/linalg.hpp"

namespace tanaka {

Vector ProlongationLevel::component(const Vector& element, std::size_t p) const {
  for (std::size_t i = 0; i < negative.size(); ++i) {
    if (negative[i] != p) continue;
    const std::size_t len = (i + 1 < offset.size() ? offset[i + 1] : unknowns) - offset[i];
    return Vector(element.begin() + static_cast<std::ptrdiff_t>(offset[i]),
                  element.begin() + static_cast<std::ptrdiff_t>(offset[i] + len));
  }
  throw Error(ErrorCode::kArgumentNotInNegativePart, "component requested for a non-negative index");
}

namespace {

std::size_t space_dim(const GradedLieAlgebra& g, const std::vector<ProlongationLevel>& lower, int j) {
  if (j <= 0) return g.dim_of_degree(j);
  return lower.at(static_cast<std::size_t>(j - 1)).dim();
}

}  // namespace

Vector prolongation_act(const GradedLieAlgebra& g, const std::vector<ProlongationLevel>& lower, int j, const Vector& w,
                        std::size_t q) {
  const int target = j + g.degree(q);
  Vector out = zero_vector(space_dim(g, lower, target));
  if (j <= 0) {
    const auto src = g.indices_of_degree(j);
    const auto dst = g.indices_of_degree(target);
    for (std::size_t s = 0; s < src.size(); ++s) {
      if (w[s].is_zero()) continue;
      for (const auto& [u, c] : g.bracket_basis(src[s], q)) {
        for (std::size_t t = 0; t < dst.size(); ++t)
          if (dst[t] == u) out[t] += w[s] * c;
      }
    }
    return out;
  }
  const auto& level = lower.at(static_cast<std::size_t>(j - 1));
  for (std::size_t b = 0; b < level.dim(); ++b) {
    if (w[b].is_zero()) continue;
    out = out + w[b] * level.component(level.basis[b], q);
  }
  return out;
}

ProlongationResult prolong(const GradedLieAlgebra& g, int max_k) {
  if (max_k < 1) throw Error(ErrorCode::kRangeError, "max_k must be at least 1");
  if (g.max_degree() > 0) throw Error(ErrorCode::kNotNonPositivelyGraded, g.name() + " has positive degrees");
  require_valid(g, true);

  ProlongationResult result;
  const auto neg = g.negative_indices();
  int zero_run = 0;
  for (int k = 1; k <= max_k; ++k) {
    ProlongationLevel level;
    level.k = k;
    level.negative = neg;
    for (auto p : neg) {
      level.target_degree.push_back(g.degree(p) + k);
      level.offset.push_back(level.unknowns);
      level.unknowns += space_dim(g, result.levels, g.degree(p) + k);
    }

    // One residual block per pair X < Y of negative basis elements.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<std::size_t> row_offset;
    std::size_t rows = 0;
    for (std::size_t a = 0; a < neg.size(); ++a)
      for (std::size_t b = a + 1; b < neg.size(); ++b) {
        pairs.emplace_back(a, b);
        row_offset.push_back(rows);
        rows += space_dim(g, result.levels, g.degree(neg[a]) + g.degree(neg[b]) + k);
      }

    Matrix system(rows, level.unknowns);
    for (std::size_t pi = 0; pi < neg.size(); ++pi) {
      const std::size_t p = neg[pi];
      const int j = level.target_degree[pi];
      const std::size_t width = space_dim(g, result.levels, j);
      for (std::size_t t = 0; t < width; ++t) {
        const std::size_t col = level.offset[pi] + t;
        const Vector tau = unit_vector(width, t);
        for (std::size_t r = 0; r < pairs.size(); ++r) {
          const std::size_t x = neg[pairs[r].first];
          const std::size_t y = neg[pairs[r].second];
          // u([X, Y]) - act(u(X), Y) + act(u(Y), X)
          Vector residual = zero_vector(space_dim(g, result.levels, g.degree(x) + g.degree(y) + k));
          const Rational c = g.structure_constant(x, y, p);
          if (!c.is_zero()) residual = residual + c * tau;
          if (x == p) residual = residual - prolongation_act(g, result.levels, j, tau, y);
          if (y == p) residual = residual + prolongation_act(g, result.levels, j, tau, x);
          for (std::size_t i = 0; i < residual.size(); ++i) system.add(row_offset[r] + i, col, residual[i]);
        }
      }
    }
    level.basis = kernel_basis(system).basis;

    // Determinacy: the g_{-1} blocks of the basis are independent.
    std::vector<Vector> restricted;
    for (const auto& u : level.basis) {
      Vector r;
      for (std::size_t pi = 0; pi < neg.size(); ++pi) {
        if (g.degree(neg[pi]) != -1) continue;
        const Vector c = level.component(u, neg[pi]);
        r.insert(r.end(), c.begin(), c.end());
      }
      restricted.push_back(r);
    }
    if (!restricted.empty() && rank(Matrix::from_dense(restricted)) != level.dim()) {
      result.determined_by_generators = false;
    }

    const bool zero = level.dim() == 0;
    result.levels.push_back(std::move(level));
    zero_run = zero ? zero_run + 1 : 0;
    if (zero_run == 2) {
      result.finite_type = true;
      break;
    }
  }
  return result;
}

std::vector<std::size_t> prolongation_dims(const GradedLieAlgebra& g, int max_k) {
  std::vector<std::size_t> out;
  for (const auto& level : prolong(g, max_k).levels) out.push_back(level.dim());
  return out;
}

}  // namespace tanaka
