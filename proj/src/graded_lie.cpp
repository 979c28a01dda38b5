#include "tanaka/graded_lie.hpp"

#include <algorithm>
#include <set>

#include "tanaka/error.hpp"
#include "tanaka/linalg.hpp"

namespace tanaka {

namespace {

SparseVector normalized(SparseVector v) {
  std::map<std::size_t, Rational> acc;
  for (auto& [k, c] : v) acc[k] += c;
  SparseVector out;
  for (auto& [k, c] : acc) {
    if (!c.is_zero()) out.emplace_back(k, c);
  }
  return out;
}

SparseVector negated(SparseVector v) {
  for (auto& [k, c] : v) c = -c;
  return v;
}

}  // namespace

GradedLieAlgebra::GradedLieAlgebra(std::string name, std::vector<BasisElement> basis,
                                   const BracketTable& brackets)
    : name_(std::move(name)), basis_(std::move(basis)) {
  std::set<std::string> seen;
  for (const auto& b : basis_) {
    if (!seen.insert(b.label).second) throw Error(ErrorCode::kValidationFailure, "duplicate label '" + b.label + "'");
  }
  const std::size_t n = basis_.size();
  for (const auto& [ij, value] : brackets) {
    auto [i, j] = ij;
    if (i >= n || j >= n) throw Error(ErrorCode::kValidationFailure, "bracket index out of range");
    for (const auto& [k, c] : value) {
      if (k >= n) throw Error(ErrorCode::kValidationFailure, "bracket value index out of range");
    }
    SparseVector v = normalized(value);
    if (v.empty()) continue;
    if (i == j) throw Error(ErrorCode::kValidationFailure, "[" + label(i) + ", " + label(i) + "] must vanish");
    if (i > j) {
      std::swap(i, j);
      v = negated(std::move(v));
    }
    auto& slot = brackets_[{i, j}];
    SparseVector merged = slot;
    merged.insert(merged.end(), v.begin(), v.end());
    slot = normalized(std::move(merged));
    if (slot.empty()) brackets_.erase({i, j});
  }
}

std::optional<std::size_t> GradedLieAlgebra::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i].label == label) return i;
  }
  return std::nullopt;
}

SparseVector GradedLieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  if (i == j) return {};
  if (i < j) {
    auto it = brackets_.find({i, j});
    return it == brackets_.end() ? SparseVector{} : it->second;
  }
  auto it = brackets_.find({j, i});
  return it == brackets_.end() ? SparseVector{} : negated(it->second);
}

Rational GradedLieAlgebra::structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
  for (const auto& [idx, c] : bracket_basis(i, j)) {
    if (idx == k) return c;
  }
  return Rational(0);
}

int GradedLieAlgebra::min_degree() const {
  int m = 0;
  bool first = true;
  for (const auto& b : basis_) {
    if (first || b.degree < m) m = b.degree;
    first = false;
  }
  return m;
}

int GradedLieAlgebra::max_degree() const {
  int m = 0;
  bool first = true;
  for (const auto& b : basis_) {
    if (first || b.degree > m) m = b.degree;
    first = false;
  }
  return m;
}

int GradedLieAlgebra::depth() const { return std::max(0, -min_degree()); }
int GradedLieAlgebra::height() const { return std::max(0, max_degree()); }

std::vector<std::size_t> GradedLieAlgebra::indices_of_degree(int d) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i].degree == d) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> GradedLieAlgebra::negative_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i].degree < 0) out.push_back(i);
  }
  return out;
}

GradedLieAlgebra GradedLieAlgebra::renamed(std::string name) const {
  GradedLieAlgebra copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v = zero_vector(n);
  v.at(i) = Rational(1);
  return v;
}

Vector bracket(const GradedLieAlgebra& g, const Vector& x, const Vector& y) {
  if (x.size() != g.dim() || y.size() != g.dim()) throw Error(ErrorCode::kDimensionMismatch, "bracket arguments");
  Vector out = zero_vector(g.dim());
  for (const auto& [ij, value] : g.brackets()) {
    const auto [i, j] = ij;
    // [x, y] picks up x_i y_j - x_j y_i on the stored pair (i < j).
    Rational w = x[i] * y[j] - x[j] * y[i];
    if (w.is_zero()) continue;
    for (const auto& [k, c] : value) out[k] += w * c;
  }
  return out;
}

Matrix ad_matrix(const GradedLieAlgebra& g, const Vector& x) {
  if (x.size() != g.dim()) throw Error(ErrorCode::kDimensionMismatch, "ad_matrix argument");
  Matrix m(g.dim(), g.dim());
  for (const auto& [ij, value] : g.brackets()) {
    const auto [i, j] = ij;
    if (!x[i].is_zero()) {
      for (const auto& [k, c] : value) m.add(k, j, x[i] * c);
    }
    if (!x[j].is_zero()) {
      for (const auto& [k, c] : value) m.add(k, i, -(x[j] * c));
    }
  }
  return m;
}

Matrix coadjoint_matrix(const GradedLieAlgebra& g, const Vector& x) {
  return Rational(-1) * ad_matrix(g, x).transpose();
}

std::string to_string(Axiom a) {
  switch (a) {
    case Axiom::kGrading: return "grading";
    case Axiom::kJacobi: return "jacobi";
    case Axiom::kPositiveDepth: return "positive-depth";
    case Axiom::kNontrivialDegreeZero: return "nontrivial-degree-zero";
    case Axiom::kGeneration: return "generation";
    case Axiom::kExactness: return "exactness";
  }
  return "unknown";
}

namespace {

void check_grading(const GradedLieAlgebra& g, ValidationReport& report) {
  for (const auto& [ij, value] : g.brackets()) {
    const auto [i, j] = ij;
    for (const auto& [k, c] : value) {
      if (g.degree(k) != g.degree(i) + g.degree(j)) {
        report.failures.push_back({Axiom::kGrading, {g.label(i), g.label(j)},
                                   "[" + g.label(i) + ", " + g.label(j) + "] has a component on " + g.label(k) +
                                       " of degree " + std::to_string(g.degree(k)) + ", expected " +
                                       std::to_string(g.degree(i) + g.degree(j))});
        break;
      }
    }
  }
}

SparseVector bracket_with_sparse(const GradedLieAlgebra& g, std::size_t i, const SparseVector& v) {
  std::map<std::size_t, Rational> acc;
  for (const auto& [k, c] : v) {
    for (const auto& [m, d] : g.bracket_basis(i, k)) acc[m] += c * d;
  }
  SparseVector out;
  for (auto& [k, c] : acc) {
    if (!c.is_zero()) out.emplace_back(k, c);
  }
  return out;
}

void check_jacobi(const GradedLieAlgebra& g, ValidationReport& report) {
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        std::map<std::size_t, Rational> acc;
        for (const auto& [m, c] : bracket_with_sparse(g, i, g.bracket_basis(j, k))) acc[m] += c;
        for (const auto& [m, c] : bracket_with_sparse(g, j, g.bracket_basis(k, i))) acc[m] += c;
        for (const auto& [m, c] : bracket_with_sparse(g, k, g.bracket_basis(i, j))) acc[m] += c;
        bool zero = std::all_of(acc.begin(), acc.end(), [](const auto& kv) { return kv.second.is_zero(); });
        if (!zero) {
          report.failures.push_back(
              {Axiom::kJacobi, {g.label(i), g.label(j), g.label(k)}, "Jacobi identity fails on this triple"});
        }
      }
    }
  }
}

void check_generation(const GradedLieAlgebra& g, ValidationReport& report) {
  const std::size_t n = g.dim();
  const auto gens = g.indices_of_degree(-1);
  std::vector<Vector> all;
  std::vector<Vector> layer;
  for (auto i : gens) layer.push_back(unit_vector(n, i));
  all = layer;
  for (int step = 1; step < g.depth() && !layer.empty(); ++step) {
    std::vector<Vector> next;
    for (auto i : gens) {
      for (const auto& y : layer) {
        Vector z = bracket(g, unit_vector(n, i), y);
        if (!is_zero(z)) next.push_back(std::move(z));
      }
    }
    layer = next.empty() ? next : span_of(n, next).basis;
    all.insert(all.end(), layer.begin(), layer.end());
  }
  Subspace generated = span_of(n, all);
  for (auto i : g.negative_indices()) {
    if (!contains(generated, unit_vector(n, i))) {
      report.failures.push_back({Axiom::kGeneration, {g.label(i)},
                                 "negative part is not generated by degree -1; " + g.label(i) + " is missed"});
      return;
    }
  }
}

void check_exactness(const GradedLieAlgebra& g, ValidationReport& report) {
  const auto zero = g.indices_of_degree(0);
  const auto minus_one = g.indices_of_degree(-1);
  const std::size_t m = minus_one.size();
  Matrix flat(m * m, zero.size());
  for (std::size_t a = 0; a < zero.size(); ++a) {
    for (std::size_t p = 0; p < m; ++p) {
      for (const auto& [k, c] : g.bracket_basis(zero[a], minus_one[p])) {
        auto it = std::find(minus_one.begin(), minus_one.end(), k);
        if (it != minus_one.end()) flat.add(static_cast<std::size_t>(it - minus_one.begin()) * m + p, a, c);
      }
    }
  }
  auto ker = kernel_basis(flat);
  if (!ker.empty()) {
    std::vector<std::string> witness;
    for (std::size_t a = 0; a < zero.size(); ++a) {
      if (!ker.basis[0][a].is_zero()) witness.push_back(g.label(zero[a]));
    }
    report.failures.push_back({Axiom::kExactness, witness,
                               "degree-zero action on degree -1 has a kernel of dimension " +
                                   std::to_string(ker.dim())});
  }
}

}  // namespace

ValidationReport validate(const GradedLieAlgebra& g, bool require_fundamental, bool require_exact_action) {
  ValidationReport report;
  check_grading(g, report);
  check_jacobi(g, report);
  if (require_fundamental) {
    if (g.depth() < 1) {
      report.failures.push_back({Axiom::kPositiveDepth, {}, "no negative degrees"});
    }
    if (g.dim_of_degree(0) == 0) {
      report.failures.push_back({Axiom::kNontrivialDegreeZero, {}, "degree-zero part is trivial"});
    }
    if (g.depth() >= 1) {
      check_generation(g, report);
      if (require_exact_action) check_exactness(g, report);
    }
  }
  return report;
}

void require_valid(const GradedLieAlgebra& g, bool require_fundamental, bool require_exact_action) {
  auto report = validate(g, require_fundamental, require_exact_action);
  if (!report.ok()) {
    const auto& f = report.failures.front();
    throw Error(ErrorCode::kValidationFailure, g.name() + ": " + to_string(f.axiom) + ": " + f.detail);
  }
}

GradedLieAlgebra cotangent(const GradedLieAlgebra& g, CotangentGrading grading) {
  if (grading == CotangentGrading::kNonPositiveOnly) {
    if (g.max_degree() > 0) {
      throw Error(ErrorCode::kNotNonPositivelyGraded, g.name() + " has positive degrees");
    }
    require_valid(g, true);
  } else {
    require_valid(g, false);
  }
  const std::size_t n = g.dim();
  std::vector<BasisElement> basis = g.basis();
  for (const auto& b : g.basis()) basis.push_back({b.label + "*", -b.degree});
  GradedLieAlgebra::BracketTable table;
  for (const auto& [ij, value] : g.brackets()) table[ij] = value;
  // [e_i, e^m] = L_{e_i} e^m = -sum_p c_{ip}^m e^p
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t p = 0; p < n; ++p) {
      for (const auto& [m, c] : g.bracket_basis(i, p)) table[{i, n + m}].emplace_back(n + p, -c);
    }
  }
  GradedLieAlgebra h("t*(" + g.name() + ")", std::move(basis), table);
  require_valid(h, grading == CotangentGrading::kNonPositiveOnly, false);
  return h;
}

GradedLieAlgebra from_representation(const std::string& name, const GradedLieAlgebra& g0,
                                     const std::vector<Matrix>& action,
                                     const std::vector<std::string>& v_labels) {
  for (std::size_t a = 0; a < g0.dim(); ++a) {
    if (g0.degree(a) != 0) throw Error(ErrorCode::kValidationFailure, "g0 must be concentrated in degree 0");
  }
  require_valid(g0, false);
  if (action.size() != g0.dim()) throw Error(ErrorCode::kDimensionMismatch, "one action matrix per g0 basis element");
  const std::size_t n = action.empty() ? v_labels.size() : action.front().rows();
  for (const auto& m : action) {
    if (m.rows() != n || m.cols() != n) throw Error(ErrorCode::kDimensionMismatch, "action matrices must be n x n");
  }
  // Homomorphism: rho([A_a, A_b]) = [rho(A_a), rho(A_b)].
  for (std::size_t a = 0; a < g0.dim(); ++a) {
    for (std::size_t b = a + 1; b < g0.dim(); ++b) {
      Matrix lhs(n, n);
      for (const auto& [k, c] : g0.bracket_basis(a, b)) lhs += c * action[k];
      Matrix rhs = action[a] * action[b] - action[b] * action[a];
      if (lhs != rhs) {
        throw Error(ErrorCode::kNotARepresentation,
                    "bracket relation fails on (" + g0.label(a) + ", " + g0.label(b) + ")");
      }
    }
  }
  Matrix flat(n * n, g0.dim());
  for (std::size_t a = 0; a < g0.dim(); ++a) {
    for (std::size_t r = 0; r < n; ++r) {
      for (const auto& [c, v] : action[a].row(r)) flat.set(r * n + c, a, v);
    }
  }
  if (!kernel_basis(flat).empty()) throw Error(ErrorCode::kNotExact, "g0 does not act faithfully on V");

  std::vector<BasisElement> basis;
  for (std::size_t p = 0; p < n; ++p) {
    basis.push_back({p < v_labels.size() ? v_labels[p] : "v" + std::to_string(p + 1), -1});
  }
  for (const auto& b : g0.basis()) basis.push_back({b.label, 0});
  GradedLieAlgebra::BracketTable table;
  for (const auto& [ij, value] : g0.brackets()) {
    SparseVector shifted;
    for (const auto& [k, c] : value) shifted.emplace_back(n + k, c);
    table[{n + ij.first, n + ij.second}] = shifted;
  }
  // [v_p, A_a] = -A_a v_p
  for (std::size_t a = 0; a < g0.dim(); ++a) {
    for (std::size_t p = 0; p < n; ++p) {
      SparseVector value;
      for (std::size_t r = 0; r < n; ++r) {
        Rational c = action[a].at(r, p);
        if (!c.is_zero()) value.emplace_back(r, -c);
      }
      if (!value.empty()) table[{p, n + a}] = value;
    }
  }
  GradedLieAlgebra g(name, std::move(basis), table);
  require_valid(g, true);
  return g;
}

std::vector<Matrix> degree_zero_action(const GradedLieAlgebra& g) {
  const auto zero = g.indices_of_degree(0);
  const auto minus_one = g.indices_of_degree(-1);
  std::vector<Matrix> out;
  for (auto a : zero) {
    Matrix m(minus_one.size(), minus_one.size());
    for (std::size_t p = 0; p < minus_one.size(); ++p) {
      for (const auto& [k, c] : g.bracket_basis(a, minus_one[p])) {
        auto it = std::find(minus_one.begin(), minus_one.end(), k);
        if (it != minus_one.end()) m.add(static_cast<std::size_t>(it - minus_one.begin()), p, c);
      }
    }
    out.push_back(std::move(m));
  }
  return out;
}

bool is_abelian(const GradedLieAlgebra& g) { return g.brackets().empty(); }

}  // namespace tanaka
