#include "tanaka/matrix.hpp"

#include "tanaka/error.hpp"

namespace tanaka {

Vector zero_vector(std::size_t n) { return Vector(n, Rational(0)); }

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

namespace {
void require_same_size(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "vector lengths " + std::to_string(a.size()) +
                                                   " and " + std::to_string(b.size()));
  }
}
}  // namespace

Vector operator+(const Vector& a, const Vector& b) {
  require_same_size(a, b);
  Vector out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  require_same_size(a, b);
  Vector out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

Vector operator*(const Rational& s, const Vector& v) {
  Vector out(v);
  for (auto& x : out) x *= s;
  return out;
}

Rational dot(const Vector& a, const Vector& b) {
  require_same_size(a, b);
  Rational sum;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) sum += a[i] * b[i];
  }
  return sum;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace(i, Rational(1));
  return m;
}

Matrix Matrix::from_dense(const std::vector<Vector>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorCode::kDimensionMismatch, "ragged dense matrix");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vector>& columns) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw Error(ErrorCode::kDimensionMismatch, "column length");
    for (std::size_t r = 0; r < rows; ++r) m.set(r, c, columns[c][r]);
  }
  return m;
}

Rational Matrix::at(std::size_t r, std::size_t c) const {
  const auto& row = data_.at(r);
  auto it = row.find(c);
  return it == row.end() ? Rational(0) : it->second;
}

void Matrix::set(std::size_t r, std::size_t c, const Rational& value) {
  if (r >= rows_ || c >= cols_) throw Error(ErrorCode::kDimensionMismatch, "matrix index out of range");
  if (value.is_zero()) {
    data_[r].erase(c);
  } else {
    data_[r][c] = value;
  }
}

void Matrix::add(std::size_t r, std::size_t c, const Rational& value) {
  if (value.is_zero()) return;
  if (r >= rows_ || c >= cols_) throw Error(ErrorCode::kDimensionMismatch, "matrix index out of range");
  auto [it, inserted] = data_[r].try_emplace(c, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) data_[r].erase(it);
  }
}

std::size_t Matrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& row : data_) n += row.size();
  return n;
}

bool Matrix::is_zero() const { return nonzeros() == 0; }

bool Matrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& [c, v] : data_[r]) {
      if (at(c, r) != v) return false;
    }
  }
  return true;
}

Vector Matrix::column(std::size_t c) const {
  Vector out = zero_vector(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    auto it = data_[r].find(c);
    if (it != data_[r].end()) out[r] = it->second;
  }
  return out;
}

std::vector<Vector> Matrix::to_dense() const {
  std::vector<Vector> out(rows_, zero_vector(cols_));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& [c, v] : data_[r]) out[r][c] = v;
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& [c, v] : data_[r]) t.data_[c].emplace_hint(t.data_[c].end(), r, v);
  }
  return t;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw Error(ErrorCode::kDimensionMismatch, "matrix-vector product");
  Vector out = zero_vector(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& [c, x] : data_[r]) {
      if (!v[c].is_zero()) out[r] += x * v[c];
    }
  }
  return out;
}

Matrix Matrix::select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  std::map<std::size_t, std::size_t> col_pos;
  for (std::size_t i = 0; i < cols.size(); ++i) col_pos.emplace(cols[i], i);
  Matrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (const auto& [c, v] : data_.at(rows[i])) {
      auto it = col_pos.find(c);
      if (it != col_pos.end()) out.data_[i].emplace(it->second, v);
    }
  }
  return out;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::kDimensionMismatch, "matrix sum");
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& [c, v] : o.data_[r]) add(r, c, v);
  }
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::kDimensionMismatch, "matrix difference");
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& [c, v] : o.data_[r]) add(r, c, -v);
  }
  return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
  if (s.is_zero()) {
    for (auto& row : data_) row.clear();
    return *this;
  }
  for (auto& row : data_) {
    for (auto& [c, v] : row) v *= s;
  }
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix product " + std::to_string(a.rows_) + "x" +
                                                   std::to_string(a.cols_) + " * " +
                                                   std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  }
  Matrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    auto& acc = out.data_[r];
    for (const auto& [k, x] : a.data_[r]) {
      for (const auto& [c, y] : b.data_[k]) {
        auto [it, inserted] = acc.try_emplace(c, x * y);
        if (!inserted) it->second += x * y;
      }
    }
    std::erase_if(acc, [](const auto& kv) { return kv.second.is_zero(); });
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  for (std::size_t r = 0; r < m.rows_; ++r) {
    os << '[';
    for (std::size_t c = 0; c < m.cols_; ++c) {
      if (c) os << ' ';
      os << m.at(r, c);
    }
    os << "]\n";
  }
  return os;
}

}  // namespace tanaka
