#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tame/field.hpp"

namespace tame {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over a Field. Entries are always canonical.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix zero(Field field, std::size_t rows, std::size_t cols) { return {field, rows, cols}; }
  static Matrix identity(Field field, std::size_t n);
  /// Canonicalizes each entry. `entries` is row-major.
  static Matrix from_rows(Field field, std::size_t rows, std::size_t cols, const std::vector<Scalar>& entries);
  static Matrix from_ints(Field field, std::size_t rows, std::size_t cols, const std::vector<long>& entries);
  static Matrix column(Field field, const Vector& v);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  /// Callers must store canonical values.
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const std::vector<Scalar>& data() const { return data_; }

  Vector col(std::size_t j) const;
  Matrix transpose() const;
  Matrix operator*(const Matrix& other) const;
  Vector operator*(const Vector& v) const;
  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix scaled(const Scalar& s) const;
  Matrix negated() const { return scaled(field_.neg(field_.one())); }

  /// Columns [first, first+count).
  Matrix col_range(std::size_t first, std::size_t count) const;
  Matrix row_range(std::size_t first, std::size_t count) const;
  Matrix select_cols(const std::vector<std::size_t>& idx) const;
  Matrix select_rows(const std::vector<std::size_t>& idx) const;

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  std::string to_string() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
/// Block-diagonal sum.
Matrix direct_sum(const Matrix& a, const Matrix& b);

/// Reduced row echelon form. Pivot search scans columns left to right and
/// takes the first nonzero entry from the top.
struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_cols;
};

RowEchelon row_reduce(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Some x with M x = b, or nullopt if the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// Inverse of a square invertible matrix; throws FieldError otherwise.
Matrix inverse(const Matrix& m);

}  // namespace tame
