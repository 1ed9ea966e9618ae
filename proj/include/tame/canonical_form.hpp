#pragma once

#include <cstddef>
#include <vector>

#include "tame/matrix.hpp"
#include "tame/polynomial.hpp"

namespace tame {

/// A split Jordan cell (lambda, k): the k x k matrix with lambda on the
/// diagonal and ones on the superdiagonal.
struct JordanCell {
  Scalar lambda;
  int size = 0;

  friend bool operator==(const JordanCell& a, const JordanCell& b) = default;
};

/// An elementary divisor p(x)^e with p of degree >= 2. `irreducible` is false
/// when the factorization search gave up and p may still split further.
struct ResidualBlock {
  Polynomial poly;
  int multiplicity = 1;
  bool irreducible = true;

  friend bool operator==(const ResidualBlock& a, const ResidualBlock& b) {
    return a.poly == b.poly && a.multiplicity == b.multiplicity && a.irreducible == b.irreducible;
  }
};

/// Similarity invariants of an endomorphism.
struct EndoCanonicalForm {
  std::size_t dimension = 0;
  Polynomial char_poly;
  /// Monic, nonconstant, each dividing the next.
  std::vector<Polynomial> invariant_factors;
  /// Sorted by (lambda, size).
  std::vector<JordanCell> split_cells;
  std::vector<ResidualBlock> residual_blocks;

  bool is_split() const { return residual_blocks.empty(); }
  /// Number of split cells with eigenvalue lambda (each cell counted once).
  std::size_t cells_with_eigenvalue(const Scalar& lambda) const;
  /// Similarity predicate: equal invariant-factor lists.
  bool similar_to(const EndoCanonicalForm& other) const { return invariant_factors == other.invariant_factors; }
};

EndoCanonicalForm canonical_form(const Matrix& t);

/// The Jordan cell matrix T(lambda, k).
Matrix jordan_cell_matrix(Field field, const Scalar& lambda, int k);

/// Companion matrix of a monic polynomial (ones on the subdiagonal, last
/// column = -coefficients).
Matrix companion_matrix(const Polynomial& monic);

/// Largest p for which eigenvalue search enumerates all of GF(p).
inline constexpr std::int64_t kRootSearchLimit = std::int64_t{1} << 20;

}  // namespace tame
