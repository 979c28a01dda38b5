#include "tanaka/linalg.hpp"

#include <algorithm>
#include <string>

#include "tanaka/error.hpp"

namespace tanaka {

namespace {

using Row = Matrix::Row;

// row_i -= factor * row_p
void eliminate(Row& target, const Row& pivot_row, const Rational& factor) {
  for (const auto& [c, v] : pivot_row) {
    Rational delta = factor * v;
    auto [it, inserted] = target.try_emplace(c, -delta);
    if (!inserted) {
      it->second -= delta;
      if (it->second.is_zero()) target.erase(it);
    }
  }
}

struct SparseRref {
  std::vector<Row> rows;
  std::vector<std::size_t> pivots;
};

// Gauss-Jordan on sparse rows. The pivot row for each column is the sparsest
// candidate, which limits fill-in; the reduced form itself is unique.
SparseRref sparse_rref(std::vector<Row> rows, std::size_t cols) {
  SparseRref out;
  std::size_t next = 0;
  for (std::size_t col = 0; col < cols && next < rows.size(); ++col) {
    std::size_t best = rows.size();
    for (std::size_t r = next; r < rows.size(); ++r) {
      if (rows[r].empty() || rows[r].begin()->first != col) continue;
      if (best == rows.size() || rows[r].size() < rows[best].size()) best = r;
    }
    if (best == rows.size()) continue;
    std::swap(rows[next], rows[best]);
    Row& p = rows[next];
    const Rational inv = Rational(1) / p.begin()->second;
    if (inv != Rational(1)) {
      for (auto& [c, v] : p) v *= inv;
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == next) continue;
      auto it = rows[r].find(col);
      if (it == rows[r].end()) continue;
      const Rational factor = it->second;
      eliminate(rows[r], p, factor);
    }
    out.pivots.push_back(col);
    ++next;
  }
  out.rows = std::move(rows);
  return out;
}

std::vector<Row> rows_of(const Matrix& m) {
  std::vector<Row> rows(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows[r] = m.row(r);
  return rows;
}

Matrix matrix_from_rows(const std::vector<Row>& rows, std::size_t n_rows, std::size_t cols) {
  Matrix m(n_rows, cols);
  for (std::size_t r = 0; r < rows.size() && r < n_rows; ++r) {
    for (const auto& [c, v] : rows[r]) m.set(r, c, v);
  }
  return m;
}

}  // namespace

RrefResult rref(const Matrix& m) {
  auto s = sparse_rref(rows_of(m), m.cols());
  RrefResult out;
  out.reduced = matrix_from_rows(s.rows, m.rows(), m.cols());
  out.pivots = std::move(s.pivots);
  out.rank = out.pivots.size();
  return out;
}

std::size_t rank(const Matrix& m) {
  // Eliminating on the smaller side is cheaper; rank is transpose-invariant.
  if (m.rows() > m.cols()) return sparse_rref(rows_of(m.transpose()), m.rows()).pivots.size();
  return sparse_rref(rows_of(m), m.cols()).pivots.size();
}

Subspace kernel_basis(const Matrix& m) {
  auto s = sparse_rref(rows_of(m), m.cols());
  Subspace out{m.cols(), {}};
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : s.pivots) is_pivot[p] = true;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v = zero_vector(m.cols());
    v[f] = Rational(1);
    for (std::size_t i = 0; i < s.pivots.size(); ++i) {
      auto it = s.rows[i].find(f);
      if (it != s.rows[i].end()) v[s.pivots[i]] = -it->second;
    }
    out.basis.push_back(std::move(v));
  }
  return out;
}

Subspace image_basis(const Matrix& m) {
  auto s = sparse_rref(rows_of(m), m.cols());
  Subspace out{m.rows(), {}};
  for (auto p : s.pivots) out.basis.push_back(m.column(p));
  return out;
}

Subspace row_space(const Matrix& m) {
  auto s = sparse_rref(rows_of(m), m.cols());
  Subspace out{m.cols(), {}};
  for (std::size_t i = 0; i < s.pivots.size(); ++i) {
    Vector v = zero_vector(m.cols());
    for (const auto& [c, x] : s.rows[i]) v[c] = x;
    out.basis.push_back(std::move(v));
  }
  return out;
}

namespace {

using u64 = std::uint64_t;

u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p); }

u64 pow_mod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  for (; e; e >>= 1, a = mul_mod(a, a, p)) {
    if (e & 1) r = mul_mod(r, a, p);
  }
  return r;
}

static_assert(sizeof(unsigned long) == 8, "residues need 64-bit unsigned long");

u64 residue(const mpz_class& z, u64 p) { return mpz_fdiv_ui(z.get_mpz_t(), static_cast<unsigned long>(p)); }

}  // namespace

std::optional<std::size_t> rank_mod_prime(const Matrix& m, std::uint64_t p) {
  std::vector<std::vector<u64>> a(m.rows(), std::vector<u64>(m.cols(), 0));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (const auto& [c, v] : m.row(r)) {
      const u64 den = residue(v.raw().get_den(), p);
      if (den == 0) return std::nullopt;
      a[r][c] = mul_mod(residue(v.raw().get_num(), p), pow_mod(den, p - 2, p), p);
    }
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t piv = rank;
    while (piv < m.rows() && a[piv][col] == 0) ++piv;
    if (piv == m.rows()) continue;
    std::swap(a[piv], a[rank]);
    const u64 inv = pow_mod(a[rank][col], p - 2, p);
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      if (a[r][col] == 0) continue;
      const u64 f = mul_mod(a[r][col], inv, p);
      for (std::size_t c = col; c < m.cols(); ++c) {
        a[r][c] = (a[r][c] + p - mul_mod(f, a[rank][c], p)) % p;
      }
    }
    ++rank;
  }
  return rank;
}

Matrix stack_rows(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw Error(ErrorCode::kDimensionMismatch, "stack_rows: column counts differ");
  Matrix out(a.rows() + b.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (const auto& [c, v] : a.row(r)) out.set(r, c, v);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (const auto& [c, v] : b.row(r)) out.set(a.rows() + r, c, v);
  return out;
}

std::optional<Vector> solve(const Matrix& m, const Vector& rhs) {
  if (rhs.size() != m.rows()) throw Error(ErrorCode::kDimensionMismatch, "solve: rhs length");
  auto rows = rows_of(m);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (!rhs[r].is_zero()) rows[r].emplace(m.cols(), rhs[r]);
  }
  auto s = sparse_rref(std::move(rows), m.cols() + 1);
  Vector x = zero_vector(m.cols());
  for (std::size_t i = 0; i < s.pivots.size(); ++i) {
    if (s.pivots[i] == m.cols()) return std::nullopt;
    auto it = s.rows[i].find(m.cols());
    if (it != s.rows[i].end()) x[s.pivots[i]] = it->second;
  }
  return x;
}

namespace {

// Fraction-free (Bareiss) Gauss-Jordan on the integer matrix obtained by
// clearing denominators row by row. Every intermediate entry is a minor, so
// coefficient growth stays linear in the dimension.
Matrix dense_inverse(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(2 * n));
  std::vector<mpz_class> row_scale(n);
  for (std::size_t r = 0; r < n; ++r) {
    mpz_class l = 1;
    for (const auto& [c, v] : m.row(r)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.raw().get_den_mpz_t());
    row_scale[r] = l;
    for (const auto& [c, v] : m.row(r)) a[r][c] = v.raw().get_num() * (l / v.raw().get_den());
    a[r][n + r] = l;
  }
  mpz_class prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && sgn(a[p][k]) == 0) ++p;
    if (p == n) throw Error(ErrorCode::kInternalInconsistency, "inverse of singular matrix");
    if (p != k) std::swap(a[p], a[k]);
    const mpz_class pivot = a[k][k];
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const mpz_class factor = a[i][k];
      for (std::size_t j = 0; j < 2 * n; ++j) {
        if (j == k) continue;
        mpz_class t = pivot * a[i][j] - factor * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = pivot;
  }
  // The left half is now a common scalar times the identity.
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (sgn(a[r][n + c]) == 0) continue;
      inv.set(r, c, Rational(mpq_class(a[r][n + c], a[r][r])));
    }
  }
  return inv;
}

}  // namespace

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::kDimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  if (n >= 16 && 4 * m.nonzeros() >= n * n) return dense_inverse(m);
  auto rows = rows_of(m);
  for (std::size_t r = 0; r < n; ++r) rows[r].emplace(n + r, Rational(1));
  auto s = sparse_rref(std::move(rows), 2 * n);
  if (n > 0 && (s.pivots.size() < n || s.pivots[n - 1] != n - 1)) {
    throw Error(ErrorCode::kInternalInconsistency, "inverse of singular matrix");
  }
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (auto it = s.rows[r].lower_bound(n); it != s.rows[r].end(); ++it) inv.set(r, it->first - n, it->second);
  }
  return inv;
}

bool is_positive_definite(const Matrix& g) {
  if (!g.is_square()) throw Error(ErrorCode::kNonSymmetric, "non-square Gram matrix");
  if (!g.is_symmetric()) throw Error(ErrorCode::kNonSymmetric, "Gram matrix is not symmetric");
  // LDL^T by symmetric Gaussian elimination; the pivots are the entries of D.
  auto a = rows_of(g);
  const std::size_t n = g.rows();
  for (std::size_t k = 0; k < n; ++k) {
    auto it = a[k].find(k);
    if (it == a[k].end() || it->second.sign() <= 0) return false;
    const Rational pivot = it->second;
    for (std::size_t i = k + 1; i < n; ++i) {
      auto jt = a[i].find(k);
      if (jt == a[i].end()) continue;
      const Rational factor = jt->second / pivot;
      eliminate(a[i], a[k], factor);
    }
  }
  return true;
}

void require_positive_definite(const Matrix& gram) {
  if (!is_positive_definite(gram)) throw Error(ErrorCode::kNotPositiveDefinite, "Gram matrix is not positive definite");
}

Vector orthogonal_projection(const Vector& v, const Subspace& s, const Matrix& gram) {
  require_positive_definite(gram);
  if (v.size() != s.ambient_dim || gram.rows() != s.ambient_dim) {
    throw Error(ErrorCode::kDimensionMismatch, "orthogonal_projection");
  }
  if (s.empty()) return zero_vector(v.size());
  const Matrix b = s.as_columns();
  const Matrix bt_g = b.transpose() * gram;
  const Matrix normal = bt_g * b;
  auto coeffs = solve(normal, bt_g.apply(v));
  if (!coeffs) throw Error(ErrorCode::kInternalInconsistency, "normal equations inconsistent");
  return b.apply(*coeffs);
}

Matrix projection_matrix(const Subspace& s, const Matrix& gram) {
  const std::size_t n = s.ambient_dim;
  if (s.empty()) return Matrix(n, n);
  const Matrix b = s.as_columns();
  const Matrix bt_g = b.transpose() * gram;
  return b * (inverse(bt_g * b) * bt_g);
}

Subspace span_of(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  Matrix stacked = Matrix::from_dense(vectors);
  if (vectors.empty()) stacked = Matrix(0, ambient_dim);
  if (stacked.cols() != ambient_dim) throw Error(ErrorCode::kDimensionMismatch, "span_of: vector length");
  auto s = sparse_rref(rows_of(stacked), ambient_dim);
  Subspace out{ambient_dim, {}};
  for (std::size_t i = 0; i < s.pivots.size(); ++i) {
    Vector v = zero_vector(ambient_dim);
    for (const auto& [c, x] : s.rows[i]) v[c] = x;
    out.basis.push_back(std::move(v));
  }
  return out;
}

bool contains(const Subspace& s, const Vector& v) {
  if (is_zero(v)) return true;
  std::vector<Vector> rows = s.basis;
  rows.push_back(v);
  return rank(Matrix::from_dense(rows)) == s.dim();
}

bool is_subspace_of(const Subspace& a, const Subspace& b) {
  if (a.dim() > b.dim()) return false;
  if (a.empty()) return true;
  std::vector<Vector> rows = b.basis;
  rows.insert(rows.end(), a.basis.begin(), a.basis.end());
  return rank(Matrix::from_dense(rows)) == b.dim();
}

bool same_subspace(const Subspace& a, const Subspace& b) {
  return a.ambient_dim == b.ambient_dim && a.dim() == b.dim() && is_subspace_of(a, b);
}

Subspace intersection(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim != b.ambient_dim) throw Error(ErrorCode::kDimensionMismatch, "intersection");
  if (a.empty() || b.empty()) return Subspace{a.ambient_dim, {}};
  // x = A s = B t  <=>  [A | -B] (s, t) = 0
  Matrix joint(a.ambient_dim, a.dim() + b.dim());
  for (std::size_t c = 0; c < a.dim(); ++c)
    for (std::size_t r = 0; r < a.ambient_dim; ++r) joint.set(r, c, a.basis[c][r]);
  for (std::size_t c = 0; c < b.dim(); ++c)
    for (std::size_t r = 0; r < b.ambient_dim; ++r) joint.set(r, a.dim() + c, -b.basis[c][r]);
  auto ker = kernel_basis(joint);
  std::vector<Vector> vecs;
  const Matrix amat = a.as_columns();
  for (const auto& k : ker.basis) {
    Vector coeffs(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(a.dim()));
    vecs.push_back(amat.apply(coeffs));
  }
  return span_of(a.ambient_dim, vecs);
}

Subspace orthogonal_complement(const Subspace& s, const Matrix& gram) {
  if (s.empty()) {
    Subspace full{s.ambient_dim, {}};
    for (std::size_t i = 0; i < s.ambient_dim; ++i) {
      Vector e = zero_vector(s.ambient_dim);
      e[i] = Rational(1);
      full.basis.push_back(std::move(e));
    }
    return full;
  }
  return kernel_basis(s.as_columns().transpose() * gram);
}

Rational determinant(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::kDimensionMismatch, "determinant of non-square matrix");
  auto a = m.to_dense();
  const std::size_t n = a.size();
  Rational det(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k].is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != k) {
      std::swap(a[p], a[k]);
      det = -det;
    }
    det *= a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k].is_zero()) continue;
      const Rational f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return det;
}

}  // namespace tanaka
