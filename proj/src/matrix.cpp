#include "tame/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace tame {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(Field field, std::size_t rows, std::size_t cols, const std::vector<Scalar>& entries) {
  require(entries.size() == rows * cols, "matrix entry count does not match its shape");
  Matrix m(field, rows, cols);
  for (std::size_t k = 0; k < entries.size(); ++k) m.data_[k] = field.canonical(entries[k]);
  return m;
}

Matrix Matrix::from_ints(Field field, std::size_t rows, std::size_t cols, const std::vector<long>& entries) {
  require(entries.size() == rows * cols, "matrix entry count does not match its shape");
  Matrix m(field, rows, cols);
  for (std::size_t k = 0; k < entries.size(); ++k) m.data_[k] = field.from_int(entries[k]);
  return m;
}

Matrix Matrix::column(Field field, const Vector& v) {
  Matrix m(field, v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m.data_[i] = v[i];
  return m;
}

Vector Matrix::col(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  require(cols_ == o.rows_, "matrix product shape mismatch");
  Matrix out(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (Field::is_zero(a)) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o(k, j);
        if (Field::is_zero(b)) continue;
        out(i, j) = field_.add(out(i, j), field_.mul(a, b));
      }
    }
  return out;
}

Vector Matrix::operator*(const Vector& v) const {
  require(cols_ == v.size(), "matrix-vector shape mismatch");
  Vector out(rows_, Scalar(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      if (!Field::is_zero((*this)(i, k)) && !Field::is_zero(v[k]))
        out[i] = field_.add(out[i], field_.mul((*this)(i, k), v[k]));
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_, "matrix sum shape mismatch");
  Matrix out(field_, rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = field_.add(data_[k], o.data_[k]);
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_, "matrix difference shape mismatch");
  Matrix out(field_, rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = field_.sub(data_[k], o.data_[k]);
  return out;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix out(field_, rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = field_.mul(data_[k], s);
  return out;
}

Matrix Matrix::col_range(std::size_t first, std::size_t count) const {
  require(first + count <= cols_, "column range out of bounds");
  Matrix out(field_, rows_, count);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j) out(i, j) = (*this)(i, first + j);
  return out;
}

Matrix Matrix::row_range(std::size_t first, std::size_t count) const {
  require(first + count <= rows_, "row range out of bounds");
  Matrix out(field_, count, cols_);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(first + i, j);
  return out;
}

Matrix Matrix::select_cols(const std::vector<std::size_t>& idx) const {
  Matrix out(field_, rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) out(i, j) = (*this)(i, idx[j]);
  return out;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const {
  Matrix out(field_, idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(idx[i], j);
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!Field::is_zero(x)) return false;
  return true;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ", ";
    os << "(";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ",";
      os << field_.to_string((*this)(i, j));
    }
    os << ")";
  }
  os << ")";
  return os.str();
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows(), "hstack row mismatch");
  Matrix out(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
  }
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  require(a.cols() == b.cols(), "vstack column mismatch");
  Matrix out(a.field(), a.rows() + b.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) out(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i) out(a.rows() + i, j) = b(i, j);
  }
  return out;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix out(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

RowEchelon row_reduce(const Matrix& m) {
  const Field& f = m.field();
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && Field::is_zero(a(piv, col))) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(row, j));
    Scalar inv = f.inv(a(row, col));
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) = f.mul(a(row, j), inv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || Field::is_zero(a(i, col))) continue;
      Scalar factor = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j)
        if (!Field::is_zero(a(row, j))) a(i, j) = f.sub(a(i, j), f.mul(factor, a(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
  if (m.empty()) return 0;
  return row_reduce(m).pivot_cols.size();
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  require(b.size() == m.rows(), "solve: right-hand side length does not match rows");
  RowEchelon e = row_reduce(hstack(m, Matrix::column(m.field(), b)));
  Vector x(m.cols(), Scalar(0));
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
    std::size_t c = e.pivot_cols[r];
    if (c == m.cols()) return std::nullopt;
    x[c] = e.reduced(r, m.cols());
  }
  return x;
}

Matrix inverse(const Matrix& m) {
  require(m.is_square(), "inverse of a non-square matrix");
  std::size_t n = m.rows();
  RowEchelon e = row_reduce(hstack(m, Matrix::identity(m.field(), n)));
  if (e.pivot_cols.size() < n || (n > 0 && e.pivot_cols[n - 1] != n - 1))
    throw FieldError("matrix is singular");
  return e.reduced.col_range(n, n);
}

}  // namespace tame
