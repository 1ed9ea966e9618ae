#pragma once

#include <cstddef>
#include <vector>

#include "tame/canonical_form.hpp"
#include "tame/subspace.hpp"

namespace tame {

/// A linear relation R : V ~> W, stored as a canonical subspace of V x W
/// (source coordinates first).
class LinearRelation {
 public:
  LinearRelation() = default;
  LinearRelation(std::size_t dim_src, std::size_t dim_dst, Subspace space);

  static LinearRelation graph(const Matrix& m);
  static LinearRelation identity(Field field, std::size_t n) { return graph(Matrix::identity(field, n)); }
  /// V x W.
  static LinearRelation full(Field field, std::size_t dim_src, std::size_t dim_dst);
  /// {(v, w) : a v = b w} for maps a : V -> U and b : W -> U.
  static LinearRelation from_equalizer(const Matrix& a, const Matrix& b);

  const Field& field() const { return space_.field(); }
  std::size_t dim_src() const { return src_; }
  std::size_t dim_dst() const { return dst_; }
  const Subspace& space() const { return space_; }
  std::size_t dim() const { return space_.dim(); }

  bool relates(const Vector& v, const Vector& w) const;

  friend bool operator==(const LinearRelation& a, const LinearRelation& b) {
    return a.src_ == b.src_ && a.dst_ == b.dst_ && a.space_ == b.space_;
  }

 private:
  std::size_t src_ = 0;
  std::size_t dst_ = 0;
  Subspace space_;
};

LinearRelation dagger(const LinearRelation& r);
/// S after R: v (SR) u iff v R w and w S u for some w.
LinearRelation compose(const LinearRelation& s, const LinearRelation& r);
/// R^k for a square relation (k >= 0; R^0 is the identity).
LinearRelation power(const LinearRelation& r, std::size_t k);

struct RelationParts {
  Subspace dom, img, ker, mul;
};

RelationParts parts(const LinearRelation& r);

/// The backward/forward chain subspaces of a square relation R : V ~> V.
struct RelationLimits {
  Subspace k_minus, k_plus, d_minus, d_plus, d;
};

RelationLimits limits(const LinearRelation& r);

/// The invertible map R_reg induced on D / ((K- + K+) ∩ D).
struct RegularPart {
  std::size_t dim = 0;
  Matrix map;
  EndoCanonicalForm form;
  /// dim of ((K- + D+) ∩ (D- + K+)) / (K- + K+); equals `dim`.
  std::size_t alternative_dim = 0;
};

RegularPart regular_part(const LinearRelation& r);

/// Named pass/fail results for the structural laws of a square relation.
struct RelationLawReport {
  bool d_plus_law = false;    // D+ = D + K+
  bool d_minus_law = false;   // D- = K- + D
  bool k_intersections = false;  // K- ∩ D+ = K- ∩ K+ = D- ∩ K+
  bool chain_inclusions = false; // K- ⊆ D- and K+ ⊆ D+
  bool alternative_presentation = false;  // dims of the two regular quotients agree
  bool regular_is_isomorphism = false;    // dom = img = all, ker = mul = 0 on V_reg
  bool all() const {
    return d_plus_law && d_minus_law && k_intersections && chain_inclusions && alternative_presentation &&
           regular_is_isomorphism;
  }
};

RelationLawReport check_relation_laws(const LinearRelation& r);

/// The fiber relation of a cyclic chain of maps alpha_i : V_{2i-1} -> V_{2i},
/// beta_i : V_{2i+1} -> V_{2i} (indices mod 2m): v R w iff there is a chain
/// alpha_1 v = beta_1 x_3, alpha_2 x_3 = beta_2 x_5, ..., alpha_m x_{2m-1} = beta_m w.
LinearRelation relation_from_cycle(const std::vector<Matrix>& alpha, const std::vector<Matrix>& beta);

}  // namespace tame
