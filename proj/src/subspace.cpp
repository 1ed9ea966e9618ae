#include "tame/subspace.hpp"

#include <stdexcept>

namespace tame {

Subspace::Subspace(const Matrix& generators) {
  const Field& f = generators.field();
  std::size_t n = generators.rows();
  RowEchelon e = row_reduce(generators.transpose());
  std::size_t k = e.pivot_cols.size();
  basis_ = Matrix(f, n, k);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < n; ++i) basis_(i, j) = e.reduced(j, i);
  pivots_ = std::move(e.pivot_cols);
}

Subspace Subspace::zero(Field field, std::size_t ambient) { return Subspace(Matrix(field, ambient, 0)); }

Subspace Subspace::full(Field field, std::size_t ambient) { return Subspace(Matrix::identity(field, ambient)); }

Vector Subspace::coordinates(const Vector& v) const {
  if (v.size() != ambient_dim()) throw std::invalid_argument("coordinates: ambient dimension mismatch");
  Vector c(dim());
  for (std::size_t j = 0; j < dim(); ++j) c[j] = v[pivots_[j]];
  return c;
}

Matrix Subspace::coordinates(const Matrix& m) const {
  if (m.rows() != ambient_dim()) throw std::invalid_argument("coordinates: ambient dimension mismatch");
  return m.select_rows(pivots_);
}

bool Subspace::contains(const Vector& v) const {
  const Field& f = field();
  // v - sum_j v[p_j] b_j must vanish.
  for (std::size_t i = 0; i < ambient_dim(); ++i) {
    Scalar acc = v[i];
    for (std::size_t j = 0; j < dim(); ++j)
      if (!Field::is_zero(basis_(i, j)) && !Field::is_zero(v[pivots_[j]]))
        acc = f.sub(acc, f.mul(v[pivots_[j]], basis_(i, j)));
    if (!Field::is_zero(acc)) return false;
  }
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t j = 0; j < other.dim(); ++j)
    if (!contains(other.basis().col(j))) return false;
  return true;
}

Subspace sum(const Subspace& a, const Subspace& b) { return Subspace(hstack(a.basis(), b.basis())); }

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("intersect: ambient mismatch");
  // A x = B y  <=>  [A | -B] (x, y) = 0.
  Subspace rel = nullspace(hstack(a.basis(), b.basis().negated()));
  Matrix xs = rel.basis().row_range(0, a.dim());
  return Subspace(a.basis() * xs);
}

Subspace nullspace(const Matrix& m) {
  const Field& f = m.field();
  std::size_t n = m.cols();
  if (m.rows() == 0) return Subspace::full(f, n);
  RowEchelon e = row_reduce(m);
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix gens(f, n, free_cols.size());
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    std::size_t fc = free_cols[j];
    gens(fc, j) = 1;
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) gens(e.pivot_cols[r], j) = f.neg(e.reduced(r, fc));
  }
  return Subspace(gens);
}

Subspace image(const Matrix& m) { return Subspace(m); }

Subspace image(const Matrix& m, const Subspace& u) {
  if (m.cols() != u.ambient_dim()) throw std::invalid_argument("image: dimension mismatch");
  return Subspace(m * u.basis());
}

Subspace preimage(const Matrix& m, const Subspace& u) {
  if (m.rows() != u.ambient_dim()) throw std::invalid_argument("preimage: dimension mismatch");
  // M v = U y  <=>  [M | -U] (v, y) = 0.
  Subspace rel = nullspace(hstack(m, u.basis().negated()));
  return Subspace(rel.basis().row_range(0, m.cols()));
}

Quotient quotient(std::size_t ambient_dim, const Subspace& u) {
  if (u.ambient_dim() != ambient_dim) throw std::invalid_argument("quotient: ambient mismatch");
  const Field& f = u.field();
  std::vector<bool> is_pivot(ambient_dim, false);
  for (auto p : u.pivot_rows()) is_pivot[p] = true;
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < ambient_dim; ++i)
    if (!is_pivot[i]) rest.push_back(i);

  // project(x) = (x - sum_k x[p_k] u_k) restricted to the non-pivot rows.
  Matrix proj(f, rest.size(), ambient_dim);
  for (std::size_t r = 0; r < rest.size(); ++r) {
    proj(r, rest[r]) = 1;
    for (std::size_t k = 0; k < u.dim(); ++k) {
      const Scalar& c = u.basis()(rest[r], k);
      if (!Field::is_zero(c)) proj(r, u.pivot_rows()[k]) = f.neg(c);
    }
  }
  Matrix sec(f, ambient_dim, rest.size());
  for (std::size_t r = 0; r < rest.size(); ++r) sec(rest[r], r) = 1;
  return {std::move(proj), std::move(sec)};
}

}  // namespace tame
