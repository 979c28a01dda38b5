#pragma once

#include <cstddef>
#include <map>
#include <ostream>
#include <vector>

#include "tanaka/rational.hpp"

namespace tanaka {

using Vector = std::vector<Rational>;

Vector zero_vector(std::size_t n);
bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Rational& s, const Vector& v);
Rational dot(const Vector& a, const Vector& b);

/// Sparse rational matrix stored row-wise; explicit zeros are never stored.
class Matrix {
 public:
  using Row = std::map<std::size_t, Rational>;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

  static Matrix identity(std::size_t n);
  static Matrix from_dense(const std::vector<Vector>& rows);
  /// Builds the matrix whose columns are the given vectors (all of length `rows`).
  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Rational& value);
  void add(std::size_t r, std::size_t c, const Rational& value);
  const Row& row(std::size_t r) const { return data_[r]; }

  std::size_t nonzeros() const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;

  Vector column(std::size_t c) const;
  std::vector<Vector> to_dense() const;
  Matrix transpose() const;
  Vector apply(const Vector& v) const;
  /// Submatrix on the given rows and columns, in the given order.
  Matrix select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Rational& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Rational& s, Matrix m) { return m *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Row> data_;
};

}  // namespace tanaka
