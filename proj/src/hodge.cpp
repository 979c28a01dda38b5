#include "tanaka/hodge.hpp"

#include <random>

#include "tanaka/error.hpp"

namespace tanaka {

namespace {

Matrix place_blocks(const GradedLieAlgebra& g, const std::map<int, Matrix>& blocks) {
  Matrix full(g.dim(), g.dim());
  for (const auto& [d, b] : blocks) {
    const auto idx = g.indices_of_degree(d);
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (const auto& [c, x] : b.row(r)) full.set(idx[r], idx[c], x);
  }
  return full;
}

Matrix restrict_to_negative(const GradedLieAlgebra& g, const Matrix& full) {
  const auto neg = g.negative_indices();
  return full.select(neg, neg);
}

}  // namespace

AdaptedMetric::AdaptedMetric(const GradedLieAlgebra& g, std::map<int, Matrix> blocks) : blocks_(std::move(blocks)) {
  for (const auto& [d, b] : blocks_) {
    const std::size_t n = g.dim_of_degree(d);
    if (n == 0) throw Error(ErrorCode::kDimensionMismatch, "metric block for empty degree " + std::to_string(d));
    if (b.rows() != n || b.cols() != n) {
      throw Error(ErrorCode::kDimensionMismatch, "metric block for degree " + std::to_string(d) + " must be " +
                                                     std::to_string(n) + "x" + std::to_string(n));
    }
    require_positive_definite(b);
  }
  for (int d = g.min_degree(); d <= g.max_degree(); ++d) {
    if (g.dim_of_degree(d) > 0 && !blocks_.count(d)) {
      throw Error(ErrorCode::kDimensionMismatch, "missing metric block for degree " + std::to_string(d));
    }
  }
  gram_ = place_blocks(g, blocks_);
  std::map<int, Matrix> inverses;
  for (const auto& [d, b] : blocks_) inverses.emplace(d, inverse(b));
  gram_inverse_ = place_blocks(g, inverses);
  negative_gram_ = restrict_to_negative(g, gram_);
  negative_dual_gram_ = restrict_to_negative(g, gram_inverse_);
}

AdaptedMetric AdaptedMetric::identity(const GradedLieAlgebra& g) {
  std::map<int, Matrix> blocks;
  for (int d = g.min_degree(); d <= g.max_degree(); ++d) {
    const std::size_t n = g.dim_of_degree(d);
    if (n > 0) blocks.emplace(d, Matrix::identity(n));
  }
  return AdaptedMetric(g, std::move(blocks));
}

AdaptedMetric AdaptedMetric::from_full(const GradedLieAlgebra& g, const Matrix& gram) {
  if (gram.rows() != g.dim() || gram.cols() != g.dim()) throw Error(ErrorCode::kDimensionMismatch, "gram size");
  for (std::size_t r = 0; r < gram.rows(); ++r) {
    for (const auto& [c, x] : gram.row(r)) {
      if (g.degree(r) != g.degree(c)) {
        throw Error(ErrorCode::kNotAdapted, "gram pairs " + g.label(r) + " with " + g.label(c));
      }
    }
  }
  std::map<int, Matrix> blocks;
  for (int d = g.min_degree(); d <= g.max_degree(); ++d) {
    const auto idx = g.indices_of_degree(d);
    if (!idx.empty()) blocks.emplace(d, gram.select(idx, idx));
  }
  return AdaptedMetric(g, std::move(blocks));
}

Rational AdaptedMetric::inner(const Vector& x, const Vector& y) const { return dot(x, gram_.apply(y)); }

Matrix AdaptedMetric::adjoint(const Matrix& m) const { return gram_inverse_ * (m.transpose() * gram_); }

AdaptedMetric random_adapted_metric(const GradedLieAlgebra& g, std::uint64_t seed, bool diagonal_only) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> off(-2, 2);
  std::uniform_int_distribution<int> num(1, 5);
  std::uniform_int_distribution<int> den(1, 3);
  std::map<int, Matrix> blocks;
  for (int d = g.min_degree(); d <= g.max_degree(); ++d) {
    const std::size_t n = g.dim_of_degree(d);
    if (n == 0) continue;
    Matrix l = Matrix::identity(n);
    Matrix diag(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      const int p = num(rng);
      const int q = den(rng);
      diag.set(i, i, Rational(p, q));
      if (!diagonal_only) {
        for (std::size_t c = 0; c < i; ++c) l.set(i, c, Rational(off(rng)));
      }
    }
    blocks.emplace(d, l * (diag * l.transpose()));
  }
  return AdaptedMetric(g, std::move(blocks));
}

namespace {

// det(dual[I, J]) * value_gram[v, w] over the canonical basis of C^k_j.
Matrix tensor_gram(const GradedLieAlgebra& g, const Matrix& dual, const Matrix& value_gram, std::size_t k, int j) {
  const CochainSpace space(g, k, j);
  const auto neg = g.negative_indices();
  std::map<std::size_t, std::size_t> position;
  for (std::size_t i = 0; i < neg.size(); ++i) position[neg[i]] = i;

  std::map<std::size_t, std::vector<std::size_t>> by_value;
  for (std::size_t i = 0; i < space.dim(); ++i) by_value[space[i].value].push_back(i);

  std::map<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>, Rational> det_cache;
  auto pairing_det = [&](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) -> Rational {
    if (a.empty()) return Rational(1);
    auto key = std::make_pair(a, b);
    auto it = det_cache.find(key);
    if (it != det_cache.end()) return it->second;
    std::vector<std::size_t> pa, pb;
    for (auto x : a) pa.push_back(position.at(x));
    for (auto x : b) pb.push_back(position.at(x));
    Rational d = determinant(dual.select(pa, pb));
    det_cache.emplace(std::move(key), d);
    return d;
  };

  Matrix out(space.dim(), space.dim());
  for (std::size_t r = 0; r < space.dim(); ++r) {
    const auto& e = space[r];
    for (const auto& [w, gw] : value_gram.row(e.value)) {
      auto it = by_value.find(w);
      if (it == by_value.end()) continue;
      for (auto c : it->second) {
        const Rational det = pairing_det(e.args, space[c].args);
        if (!det.is_zero()) out.set(r, c, det * gw);
      }
    }
  }
  return out;
}

}  // namespace

Matrix induced_gram(const GradedLieAlgebra& g, const AdaptedMetric& metric, std::size_t k, int j) {
  return tensor_gram(g, metric.negative_dual_gram(), metric.gram(), k, j);
}

Matrix induced_gram_inverse(const GradedLieAlgebra& g, const AdaptedMetric& metric, std::size_t k, int j) {
  return tensor_gram(g, metric.negative_gram(), metric.gram_inverse(), k, j);
}

Matrix codifferential_adjoint(const GradedLieAlgebra& g, const AdaptedMetric& metric, std::size_t k, int j) {
  const Matrix d = differential_matrix(g, k, j);
  return induced_gram_inverse(g, metric, k, j) * (d.transpose() * induced_gram(g, metric, k + 1, j));
}

Matrix codifferential_explicit(const GradedLieAlgebra& g, const AdaptedMetric& metric, std::size_t k, int j) {
  const CochainSpace from(g, k + 1, j);
  const CochainSpace to(g, k, j);
  const auto neg = g.negative_indices();
  const Matrix& dual = metric.negative_dual_gram();
  const Matrix& gm = metric.negative_gram();

  // flat[i]: (e^{neg[i]})^flat as an algebra vector; its ad adjoint is cached lazily.
  std::vector<Vector> flat(neg.size());
  std::map<std::size_t, std::size_t> position;
  for (std::size_t i = 0; i < neg.size(); ++i) {
    position[neg[i]] = i;
    flat[i] = zero_vector(g.dim());
    for (std::size_t a = 0; a < neg.size(); ++a) flat[i][neg[a]] = dual.at(a, i);
  }
  std::map<std::size_t, Matrix> ad_star;
  auto ad_star_of = [&](std::size_t i) -> const Matrix& {
    auto it = ad_star.find(i);
    if (it == ad_star.end()) it = ad_star.emplace(i, metric.adjoint(ad_matrix(g, flat[i]))).first;
    return it->second;
  };
  auto sharp = [&](const Vector& x) {
    Vector out = zero_vector(neg.size());
    for (std::size_t b = 0; b < neg.size(); ++b)
      for (const auto& [a, gba] : gm.row(b)) out[b] += gba * x[neg[a]];
    return out;
  };

  Matrix m(to.dim(), from.dim());
  auto emit = [&](const std::vector<std::size_t>& args, std::size_t v, std::size_t col, const Rational& c) {
    if (c.is_zero()) return;
    auto sorted = sort_with_sign(args);
    if (!sorted) return;
    auto row = to.index_of({sorted->first, v});
    if (!row) throw Error(ErrorCode::kInternalInconsistency, "codifferential left its homogeneous block");
    m.add(*row, col, sorted->second > 0 ? c : -c);
  };

  for (std::size_t col = 0; col < from.dim(); ++col) {
    const auto& e = from[col];
    const auto& args = e.args;
    // sum_i (-1)^i (a_0 ^ .. omit a_i .. ^ a_k) (x) (ad_{a_i^flat})^* V
    for (std::size_t s = 0; s < args.size(); ++s) {
      std::vector<std::size_t> rest = args;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(s));
      const Vector image = ad_star_of(position.at(args[s])).column(e.value);
      for (std::size_t u = 0; u < image.size(); ++u) {
        if (image[u].is_zero()) continue;
        emit(rest, u, col, s % 2 == 0 ? image[u] : -image[u]);
      }
    }
    // sum_{i<j} (-1)^{i+j} ([a_i^flat, a_j^flat]^sharp ^ rest) (x) V
    for (std::size_t s = 0; s < args.size(); ++s) {
      for (std::size_t t = s + 1; t < args.size(); ++t) {
        const Vector br = bracket(g, flat[position.at(args[s])], flat[position.at(args[t])]);
        if (is_zero(br)) continue;
        const Vector coeffs = sharp(br);
        std::vector<std::size_t> rest;
        for (std::size_t r = 0; r < args.size(); ++r)
          if (r != s && r != t) rest.push_back(args[r]);
        const bool negative = (s + t) % 2 == 1;
        for (std::size_t b = 0; b < coeffs.size(); ++b) {
          if (coeffs[b].is_zero()) continue;
          std::vector<std::size_t> word{neg[b]};
          word.insert(word.end(), rest.begin(), rest.end());
          emit(word, e.value, col, negative ? -coeffs[b] : coeffs[b]);
        }
      }
    }
  }
  return m;
}

Matrix laplacian(const GradedLieAlgebra& g, const AdaptedMetric& metric, std::size_t k, int j) {
  Matrix lap = codifferential_adjoint(g, metric, k, j) * differential_matrix(g, k, j);
  if (k > 0) lap += differential_matrix(g, k - 1, j) * codifferential_adjoint(g, metric, k - 1, j);
  return lap;
}

HodgeSplit hodge_decompose(const GradedLieAlgebra& g, const AdaptedMetric& metric, std::size_t k, int j) {
  HodgeSplit split;
  split.k = k;
  split.j = j;
  split.gram = induced_gram(g, metric, k, j);
  const std::size_t n = split.gram.rows();
  const Matrix d_out = differential_matrix(g, k, j);
  // ker d^* on C^k is ker(d_in^T G_k), since d^* = G_{k-1}^{-1} d_in^T G_k.
  Matrix cocycle_conditions = d_out;
  split.exact = Subspace{n, {}};
  if (k > 0) {
    const Matrix d_in = differential_matrix(g, k - 1, j);
    cocycle_conditions = stack_rows(d_out, d_in.transpose() * split.gram);
    split.exact = image_basis(d_in);
  }
  split.harmonic = kernel_basis(cocycle_conditions);
  // im d^* = G_k^{-1} (row space of d_out)^T.
  const Matrix gram_inverse = induced_gram_inverse(g, metric, k, j);
  split.coexact = Subspace{n, {}};
  for (const auto& r : row_space(d_out).basis) split.coexact.basis.push_back(gram_inverse.apply(r));
  return split;
}

std::size_t laplacian_nullity(const GradedLieAlgebra& g, const AdaptedMetric& metric, std::size_t k, int j,
                              const Subspace& harmonic) {
  const Matrix lap = laplacian(g, metric, k, j);
  for (const auto& h : harmonic.basis) {
    if (!is_zero(lap.apply(h))) {
      throw Error(ErrorCode::kInternalInconsistency, "harmonic candidate is not killed by the Laplacian");
    }
  }
  const std::size_t n = lap.cols();
  for (const std::uint64_t p : {4611686018427387847ULL, 4611686018427387817ULL, 4611686018427387787ULL}) {
    const auto r = rank_mod_prime(lap, p);
    if (r && *r + harmonic.dim() == n) return harmonic.dim();
  }
  return n - rank(lap);
}

std::size_t betti(const GradedLieAlgebra& g, std::size_t k, int l) {
  const Matrix d_out = differential_matrix(g, k, l);
  const std::size_t kernel = d_out.cols() - rank(d_out);
  const std::size_t image = k > 0 ? rank(differential_matrix(g, k - 1, l)) : 0;
  return kernel - image;
}

CohomologyDims cohomology_dim(const GradedLieAlgebra& g, const AdaptedMetric& metric, std::size_t k, int l) {
  CohomologyDims dims;
  dims.harmonic = laplacian_nullity(g, metric, k, l, hodge_decompose(g, metric, k, l).harmonic);
  dims.kernel_image = betti(g, k, l);
  if (dims.harmonic != dims.kernel_image) {
    throw Error(ErrorCode::kInternalInconsistency, "harmonic dimension " + std::to_string(dims.harmonic) +
                                                       " differs from ker/im dimension " +
                                                       std::to_string(dims.kernel_image));
  }
  return dims;
}

bool hodge_projectors_degree_zero_equivariant(const GradedLieAlgebra& g, const AdaptedMetric& metric,
                                              std::size_t k, int j) {
  // The three parts are complementary, so the projectors commute with rho
  // exactly when rho preserves each part.
  const HodgeSplit split = hodge_decompose(g, metric, k, j);
  for (auto a : g.indices_of_degree(0)) {
    const Matrix rho = cochain_action_matrix(g, a, k, j);
    for (const Subspace* part : {&split.harmonic, &split.coexact, &split.exact}) {
      Subspace moved{part->ambient_dim, {}};
      for (const auto& v : part->basis) moved.basis.push_back(rho.apply(v));
      if (!is_subspace_of(span_of(moved.ambient_dim, moved.basis), *part)) return false;
    }
  }
  return true;
}

}  // namespace tanaka
