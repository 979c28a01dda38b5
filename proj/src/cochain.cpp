#include "tanaka/cochain.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

#include "tanaka/error.hpp"
#include "tanaka/linalg.hpp"

namespace tanaka {

int homogeneous_degree(const GradedLieAlgebra& g, const WedgeBasisElement& e) {
  int d = g.degree(e.value);
  for (auto i : e.args) d -= g.degree(i);
  return d;
}

namespace {

void for_each_subset(const std::vector<std::size_t>& pool, std::size_t k, std::size_t start,
                     std::vector<std::size_t>& current,
                     const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (current.size() == k) {
    fn(current);
    return;
  }
  for (std::size_t i = start; i < pool.size(); ++i) {
    current.push_back(pool[i]);
    for_each_subset(pool, k, i + 1, current, fn);
    current.pop_back();
  }
}

}  // namespace

CochainSpace::CochainSpace(const GradedLieAlgebra& g, std::size_t k, std::optional<int> j) : k_(k), j_(j) {
  if (k > kMaxFormDegree) {
    throw Error(ErrorCode::kRangeError, "form degree " + std::to_string(k) + " exceeds " +
                                            std::to_string(kMaxFormDegree));
  }
  const auto neg = g.negative_indices();
  std::vector<std::size_t> current;
  for_each_subset(neg, k, 0, current, [&](const std::vector<std::size_t>& args) {
    int arg_sum = 0;
    for (auto a : args) arg_sum += g.degree(a);
    for (std::size_t v = 0; v < g.dim(); ++v) {
      if (j && g.degree(v) - arg_sum != *j) continue;
      elements_.push_back({args, v});
    }
  });
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
}

std::optional<std::size_t> CochainSpace::index_of(const WedgeBasisElement& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<WedgeBasisElement> basis(const GradedLieAlgebra& g, std::size_t k, int j) {
  return CochainSpace(g, k, j).elements();
}

std::vector<int> homogeneous_degrees(const GradedLieAlgebra& g, std::size_t k) {
  std::vector<int> out;
  const CochainSpace space(g, k, std::nullopt);
  for (const auto& e : space.elements()) out.push_back(homogeneous_degree(g, e));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<std::pair<std::vector<std::size_t>, int>> sort_with_sign(std::vector<std::size_t> idx) {
  int sign = 1;
  // insertion sort, counting transpositions
  for (std::size_t i = 1; i < idx.size(); ++i) {
    for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
      if (idx[j - 1] == idx[j]) return std::nullopt;
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < idx.size(); ++i) {
    if (idx[i - 1] == idx[i]) return std::nullopt;
  }
  return std::make_pair(std::move(idx), sign);
}

namespace {

std::size_t position_of(const std::vector<std::size_t>& sorted, std::size_t x) {
  return static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin());
}

std::vector<std::size_t> insert_sorted(std::vector<std::size_t> v, std::size_t x) {
  v.insert(std::lower_bound(v.begin(), v.end(), x), x);
  return v;
}

using TermMap = std::map<WedgeBasisElement, Rational>;

// For each m in h_-, the pairs p < q in h_- with c_{pq}^m != 0.
std::map<std::size_t, std::vector<std::tuple<std::size_t, std::size_t, Rational>>> negative_bracket_index(
    const GradedLieAlgebra& g) {
  std::map<std::size_t, std::vector<std::tuple<std::size_t, std::size_t, Rational>>> out;
  for (const auto& [ij, value] : g.brackets()) {
    const auto [p, q] = ij;
    if (g.degree(p) >= 0 || g.degree(q) >= 0) continue;
    for (const auto& [m, c] : value) out[m].emplace_back(p, q, c);
  }
  return out;
}

// d(e^I (x) e_v), accumulated into `out` with weight `w`.
void differential_of(const GradedLieAlgebra& g, const std::vector<std::size_t>& neg,
                     const std::map<std::size_t, std::vector<std::tuple<std::size_t, std::size_t, Rational>>>& pairs,
                     const WedgeBasisElement& e, const Rational& w, TermMap& out) {
  const auto& args = e.args;
  // sum_i (-1)^i [X_i, phi(..., X_i omitted, ...)]
  for (auto a : neg) {
    if (std::binary_search(args.begin(), args.end(), a)) continue;
    auto target = insert_sorted(args, a);
    const std::size_t i = position_of(target, a);
    const Rational sign = (i % 2 == 0) ? w : -w;
    for (const auto& [u, c] : g.bracket_basis(a, e.value)) {
      out[{target, u}] += sign * c;
    }
  }
  // sum_{i<j} (-1)^{i+j} phi([X_i, X_j], X_0, ..., omitted, ...)
  for (std::size_t s = 0; s < args.size(); ++s) {
    const std::size_t m = args[s];
    auto it = pairs.find(m);
    if (it == pairs.end()) continue;
    std::vector<std::size_t> rest = args;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(s));
    for (const auto& [p, q, c] : it->second) {
      if (std::binary_search(rest.begin(), rest.end(), p) || std::binary_search(rest.begin(), rest.end(), q)) continue;
      auto target = insert_sorted(insert_sorted(rest, p), q);
      const std::size_t i = position_of(target, p);
      const std::size_t j = position_of(target, q);
      const bool negative = ((i + j + s) % 2) == 1;
      out[{target, e.value}] += negative ? -(w * c) : w * c;
    }
  }
}

Matrix differential_between(const GradedLieAlgebra& g, const CochainSpace& from, const CochainSpace& to) {
  const auto neg = g.negative_indices();
  const auto pairs = negative_bracket_index(g);
  Matrix m(to.dim(), from.dim());
  for (std::size_t col = 0; col < from.dim(); ++col) {
    TermMap image;
    differential_of(g, neg, pairs, from[col], Rational(1), image);
    for (const auto& [elem, c] : image) {
      if (c.is_zero()) continue;
      auto row = to.index_of(elem);
      if (!row) throw Error(ErrorCode::kInternalInconsistency, "differential left its homogeneous block");
      m.set(*row, col, c);
    }
  }
  return m;
}

}  // namespace

Matrix differential_matrix(const GradedLieAlgebra& g, std::size_t k, int j) {
  return differential_between(g, CochainSpace(g, k, j), CochainSpace(g, k + 1, j));
}

Matrix differential_matrix(const GradedLieAlgebra& g, std::size_t k) {
  return differential_between(g, CochainSpace(g, k, std::nullopt), CochainSpace(g, k + 1, std::nullopt));
}

Matrix cochain_action_matrix(const GradedLieAlgebra& g, std::size_t a, std::size_t k, int j) {
  const CochainSpace from(g, k, j);
  const CochainSpace to(g, k, j + g.degree(a));
  Matrix m(to.dim(), from.dim());
  // ad_A restricted to h_-: column n lists [A, e_n] projected to negative degrees.
  std::map<std::size_t, SparseVector> ad_minus;
  for (auto n : g.negative_indices()) {
    for (const auto& [i, c] : g.bracket_basis(a, n)) {
      if (g.degree(i) < 0) ad_minus[n].emplace_back(i, c);
    }
  }
  for (std::size_t col = 0; col < from.dim(); ++col) {
    const auto& e = from[col];
    for (const auto& [u, c] : g.bracket_basis(a, e.value)) {
      auto row = to.index_of({e.args, u});
      if (!row) throw Error(ErrorCode::kInternalInconsistency, "action left its homogeneous block");
      m.add(*row, col, c);
    }
    // e^{i_s} o ad^-_A = sum_n (coefficient of e_{i_s} in [A, e_n]) e^n
    for (std::size_t s = 0; s < e.args.size(); ++s) {
      for (const auto& [n, image] : ad_minus) {
        for (const auto& [i, c] : image) {
          if (i != e.args[s]) continue;
          auto args = e.args;
          args[s] = n;
          auto sorted = sort_with_sign(args);
          if (!sorted) continue;
          auto row = to.index_of({sorted->first, e.value});
          if (!row) throw Error(ErrorCode::kInternalInconsistency, "action left its homogeneous block");
          m.add(*row, col, sorted->second > 0 ? -c : c);
        }
      }
    }
  }
  return m;
}

Cochain cochain_from_vector(const CochainSpace& space, const Vector& coeffs) {
  if (coeffs.size() != space.dim()) throw Error(ErrorCode::kDimensionMismatch, "cochain coefficient count");
  Cochain c{space.k(), {}};
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!coeffs[i].is_zero()) c.terms.emplace(space[i], coeffs[i]);
  }
  return c;
}

Vector cochain_to_vector(const CochainSpace& space, const Cochain& c) {
  if (c.k != space.k()) throw Error(ErrorCode::kDimensionMismatch, "form degree mismatch");
  Vector v = zero_vector(space.dim());
  for (const auto& [e, x] : c.terms) {
    auto idx = space.index_of(e);
    if (!idx) throw Error(ErrorCode::kDimensionMismatch, "cochain term outside the target block");
    v[*idx] = x;
  }
  return v;
}

Cochain operator+(const Cochain& a, const Cochain& b) {
  if (a.k != b.k) throw Error(ErrorCode::kDimensionMismatch, "adding cochains of different form degree");
  Cochain out = a;
  for (const auto& [e, x] : b.terms) {
    auto& slot = out.terms[e];
    slot += x;
    if (slot.is_zero()) out.terms.erase(e);
  }
  return out;
}

std::optional<int> homogeneous_degree(const GradedLieAlgebra& g, const Cochain& c) {
  std::optional<int> d;
  for (const auto& [e, x] : c.terms) {
    if (x.is_zero()) continue;
    const int de = homogeneous_degree(g, e);
    if (d && *d != de) return std::nullopt;
    d = de;
  }
  return d;
}

Cochain gr_project(const GradedLieAlgebra& g, const Cochain& c, int j) {
  Cochain out{c.k, {}};
  for (const auto& [e, x] : c.terms) {
    if (!x.is_zero() && homogeneous_degree(g, e) == j) out.terms.emplace(e, x);
  }
  return out;
}

Vector evaluate(const GradedLieAlgebra& g, const Cochain& c, const std::vector<Vector>& args) {
  if (args.size() != c.k) throw Error(ErrorCode::kDimensionMismatch, "evaluate: argument count");
  for (const auto& a : args) {
    if (a.size() != g.dim()) throw Error(ErrorCode::kDimensionMismatch, "evaluate: argument length");
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i].is_zero() && g.degree(i) >= 0) {
        throw Error(ErrorCode::kArgumentNotInNegativePart, "argument has a component on " + g.label(i));
      }
    }
  }
  Vector out = zero_vector(g.dim());
  for (const auto& [e, x] : c.terms) {
    Matrix minor(c.k, c.k);
    for (std::size_t s = 0; s < c.k; ++s)
      for (std::size_t t = 0; t < c.k; ++t) minor.set(s, t, args[t][e.args[s]]);
    const Rational det = c.k == 0 ? Rational(1) : determinant(minor);
    if (!det.is_zero()) out[e.value] += x * det;
  }
  return out;
}

}  // namespace tanaka
