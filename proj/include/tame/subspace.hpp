#pragma once

#include <cstddef>
#include <vector>

#include "tame/matrix.hpp"

namespace tame {

/// A linear subspace of F^n stored by its canonical basis: the columns of an
/// n x k matrix in reduced column echelon form (pivot rows strictly
/// increasing, identity on the pivot rows). Span-equal inputs give identical
/// bases, so operator== is subspace equality.
class Subspace {
 public:
  Subspace() = default;
  /// Span of the columns of `generators`.
  explicit Subspace(const Matrix& generators);

  static Subspace zero(Field field, std::size_t ambient);
  static Subspace full(Field field, std::size_t ambient);

  const Field& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return basis_.rows(); }
  std::size_t dim() const { return basis_.cols(); }
  const Matrix& basis() const { return basis_; }
  /// Row index of the pivot of each basis column.
  const std::vector<std::size_t>& pivot_rows() const { return pivots_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v in the canonical basis; v must lie in the subspace.
  Vector coordinates(const Vector& v) const;
  /// Coordinates of every column of `m`.
  Matrix coordinates(const Matrix& m) const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

 private:
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

/// {v : M v = 0}.
Subspace nullspace(const Matrix& m);
/// Column space of M.
Subspace image(const Matrix& m);
/// M(U).
Subspace image(const Matrix& m, const Subspace& u);
/// {v : M v in U}.
Subspace preimage(const Matrix& m, const Subspace& u);

/// Projection onto the quotient F^n / U. `project` is surjective with kernel
/// exactly U; the complement is spanned by the non-pivot coordinates of U and
/// `section` is the matching right inverse (project * section = identity).
struct Quotient {
  Matrix project;
  Matrix section;
};

Quotient quotient(std::size_t ambient_dim, const Subspace& u);

}  // namespace tame
