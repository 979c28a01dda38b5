#include "tanaka/normalization.hpp"

#include <algorithm>
#include <random>

#include "tanaka/cochain.hpp"
#include "tanaka/error.hpp"
#include "tanaka/linalg.hpp"
#include "tanaka/parallel.hpp"

namespace tanaka {

int max_curvature_degree(const GradedLieAlgebra& g) { return g.height() + 2 * g.depth(); }

namespace {

template <typename Family>
Family canonical_family(const GradedLieAlgebra& g, Family f, std::size_t form_degree) {
  const int top = max_curvature_degree(g);
  Family out;
  for (auto& [m, v] : f.components) {
    if (m < 1 || m > top) {
      throw Error(ErrorCode::kRangeError, "degree " + std::to_string(m) + " outside 1.." + std::to_string(top));
    }
    const std::size_t expected = CochainSpace(g, form_degree, m).dim();
    if (v.size() != expected) {
      throw Error(ErrorCode::kDimensionMismatch, "degree " + std::to_string(m) + " component has " +
                                                     std::to_string(v.size()) + " coefficients, expected " +
                                                     std::to_string(expected));
    }
    if (!is_zero(v)) out.components.emplace(m, std::move(v));
  }
  return out;
}

Vector component_or_zero(const std::map<int, Vector>& c, int m, std::size_t dim) {
  auto it = c.find(m);
  return it == c.end() ? zero_vector(dim) : it->second;
}

void store(std::map<int, Vector>& c, int m, Vector v) {
  if (is_zero(v)) {
    c.erase(m);
  } else {
    c[m] = std::move(v);
  }
}

}  // namespace

FormalCurvature canonical(const GradedLieAlgebra& g, FormalCurvature k) { return canonical_family(g, std::move(k), 2); }

GaugeCorrection canonical(const GradedLieAlgebra& g, GaugeCorrection phi) {
  return canonical_family(g, std::move(phi), 1);
}

FormalCurvature curvature_update(const GradedLieAlgebra& g, const FormalCurvature& k, int m, const Vector& phi_m,
                                 const TailOperator* tail) {
  if (m < 1) throw Error(ErrorCode::kRangeError, "gauge degree must be at least 1");
  FormalCurvature out = canonical(g, k);
  const Matrix d = differential_matrix(g, 1, m);
  if (phi_m.size() != d.cols()) throw Error(ErrorCode::kDimensionMismatch, "phi_m has the wrong length");
  if (d.rows() > 0) store(out.components, m, component_or_zero(out.components, m, d.rows()) + d.apply(phi_m));
  if (tail && *tail) {
    const FormalCurvature extra = canonical(g, (*tail)(m, phi_m, out));
    for (const auto& [j, v] : extra.components) {
      if (j <= m) {
        throw Error(ErrorCode::kTailDegreeViolation,
                    "tail contributes in degree " + std::to_string(j) + " at step " + std::to_string(m));
      }
      store(out.components, j, component_or_zero(out.components, j, v.size()) + v);
    }
  }
  return out;
}

Normalizer::Normalizer(const GradedLieAlgebra& g, const AdaptedMetric& metric, bool parallel)
    : g_(g), metric_(metric), m_max_(max_curvature_degree(g)) {
  auto build = [this](std::size_t i) {
    const int m = static_cast<int>(i) + 1;
    Block b;
    b.d1 = differential_matrix(g_, 1, m);
    b.c1_dim = b.d1.cols();
    b.c2_dim = b.d1.rows();
    b.codiff2 = codifferential_adjoint(g_, metric_, 1, m);
    // The coimage (ker d1)^perp is G1^{-1} applied to the row space of d1.
    const Matrix gram1_inverse = induced_gram_inverse(g_, metric_, 1, m);
    std::vector<Vector> coimage;
    for (const auto& r : row_space(b.d1).basis) coimage.push_back(gram1_inverse.apply(r));
    const std::size_t exact_dim = coimage.size();
    b.coimage = Matrix::from_columns(b.c1_dim, coimage);
    b.image = b.d1 * b.coimage;
    b.moment = b.image.transpose() * induced_gram(g_, metric_, 2, m);
    b.normal_inverse = exact_dim > 0 ? inverse(b.moment * b.image) : Matrix(0, 0);
    const std::size_t cocycles = b.c2_dim - (b.c2_dim == 0 ? 0 : rank(differential_matrix(g_, 2, m)));
    b.harmonic_dim = cocycles - exact_dim;
    b.coexact_dim = b.c2_dim - cocycles;
    return b;
  };
  auto built = indexed_map<Block>(static_cast<std::size_t>(std::max(m_max_, 0)), build, parallel);
  for (std::size_t i = 0; i < built.size(); ++i) blocks_.emplace(static_cast<int>(i) + 1, std::move(built[i]));
}

Vector Normalizer::Block::coefficients(const Vector& x) const {
  if (x.size() != c2_dim) throw Error(ErrorCode::kDimensionMismatch, "curvature component has the wrong length");
  return normal_inverse.apply(moment.apply(x));
}

const Normalizer::Block* Normalizer::block(int m) const {
  auto it = blocks_.find(m);
  return it == blocks_.end() ? nullptr : &it->second;
}

Vector Normalizer::minimal_preimage(int m, const Vector& x) const {
  const Block* b = block(m);
  if (!b) throw Error(ErrorCode::kRangeError, "no curvature block in degree " + std::to_string(m));
  return b->coimage.apply(b->coefficients(x));
}

NormalizationResult Normalizer::normalize(const FormalCurvature& k, const TailOperator* tail) const {
  NormalizationResult result;
  result.normal = canonical(g_, k);
  for (int m = 1; m <= m_max_; ++m) {
    const Block* b = block(m);
    ++result.steps;
    NormalizationStep step;
    step.m = m;
    step.block_dim = b->c2_dim;
    step.harmonic_dim = b->harmonic_dim;
    step.coexact_dim = b->coexact_dim;
    step.exact_dim = b->c2_dim - b->harmonic_dim - b->coexact_dim;
    if (b->c2_dim > 0) {
      const Vector x = component_or_zero(result.normal.components, m, b->c2_dim);
      if (!is_zero(b->moment.apply(x))) {
        const Vector phi = minimal_preimage(m, x);
        step.corrected = true;
        store(result.phi.components, m, phi);
        result.normal = curvature_update(g_, result.normal, m, Rational(-1) * phi, tail);
      }
    }
    result.trace.push_back(step);
  }
  if (!is_normal(result.normal)) {
    throw Error(ErrorCode::kInternalInconsistency, "normalization output is not coclosed");
  }
  return result;
}

bool Normalizer::is_normal(const FormalCurvature& k) const {
  for (const auto& [m, v] : k.components) {
    const Block* b = block(m);
    if (!b) throw Error(ErrorCode::kRangeError, "no curvature block in degree " + std::to_string(m));
    if (!is_zero(b->codiff2.apply(v))) return false;
  }
  return true;
}

FormalCurvature Normalizer::coexact_harmonic_projection(const FormalCurvature& k) const {
  FormalCurvature out;
  for (const auto& [m, v] : canonical(g_, k).components) {
    const Block* b = block(m);
    store(out.components, m, v - b->image.apply(b->coefficients(v)));
  }
  return out;
}

FormalCurvature Normalizer::differential(const GaugeCorrection& phi) const {
  FormalCurvature out;
  for (const auto& [m, v] : canonical(g_, phi).components) {
    const Block* b = block(m);
    if (!b) throw Error(ErrorCode::kRangeError, "gauge degree " + std::to_string(m) + " has no curvature block");
    store(out.components, m, b->d1.apply(v));
  }
  return out;
}

NormalizationResult normalize(const GradedLieAlgebra& g, const AdaptedMetric& metric, const FormalCurvature& k,
                              const TailOperator* tail, bool parallel) {
  return Normalizer(g, metric, parallel).normalize(k, tail);
}

bool is_normal(const GradedLieAlgebra& g, const AdaptedMetric& metric, const FormalCurvature& k) {
  return Normalizer(g, metric).is_normal(k);
}

GaugeCorrection gauge_leading(const GradedLieAlgebra& g, const GaugeCorrection& phi, const std::map<int, Vector>& psi) {
  GaugeCorrection out = canonical(g, phi);
  for (const auto& [l, v] : psi) {
    if (l < 1) throw Error(ErrorCode::kRangeError, "psi must live in positive degrees");
    const Matrix d = differential_matrix(g, 0, l);
    if (v.size() != d.cols()) throw Error(ErrorCode::kDimensionMismatch, "psi component has the wrong length");
    if (d.rows() == 0) continue;
    store(out.components, l, component_or_zero(out.components, l, d.rows()) - d.apply(v));
  }
  return out;
}

namespace {

Vector random_vector(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  Vector v = zero_vector(n);
  for (auto& x : v) x = Rational(coeff(rng));
  return v;
}

}  // namespace

FormalCurvature random_curvature(const GradedLieAlgebra& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  FormalCurvature k;
  for (int m = 1; m <= max_curvature_degree(g); ++m) {
    const std::size_t n = CochainSpace(g, 2, m).dim();
    if (n > 0) store(k.components, m, random_vector(rng, n));
  }
  return k;
}

GaugeCorrection random_gauge(const GradedLieAlgebra& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  GaugeCorrection phi;
  for (int m = 1; m <= max_curvature_degree(g); ++m) {
    const std::size_t n = CochainSpace(g, 1, m).dim();
    if (n > 0) store(phi.components, m, random_vector(rng, n));
  }
  return phi;
}

UniquenessReport uniqueness_probe(const GradedLieAlgebra& g, const AdaptedMetric& metric, const FormalCurvature& k,
                                  std::size_t trials, std::uint64_t seed) {
  const Normalizer normalizer(g, metric);
  const FormalCurvature base = normalizer.normalize(k).normal;
  UniquenessReport report;
  report.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    const GaugeCorrection phi = random_gauge(g, seed + t);
    FormalCurvature shifted = canonical(g, k);
    for (const auto& [m, v] : normalizer.differential(phi).components) {
      store(shifted.components, m, component_or_zero(shifted.components, m, v.size()) + v);
    }
    if (normalizer.normalize(shifted).normal == base) ++report.equal;
  }
  report.all_equal = report.equal == report.trials;
  for (int l = 1; l <= max_curvature_degree(g); ++l) {
    if (CochainSpace(g, 1, l).dim() == 0) continue;
    const std::size_t h = cohomology_dim(g, metric, 1, l).harmonic;
    report.h1[l] = h;
    if (h != 0) report.h1_vanishes = false;
  }
  return report;
}

}  // namespace tanaka
