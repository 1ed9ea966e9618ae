#pragma once

#include <cstddef>
#include <vector>

#include "tame/barcode.hpp"
#include "tame/canonical_form.hpp"
#include "tame/matrix.hpp"

namespace tame {

/// A G_2m-representation: alpha_i : V_{2i-1} -> V_{2i}, beta_i : V_{2i+1} -> V_{2i},
/// with V_{2m+1} = V_1. Vectors are 0-based, so alpha[0] is alpha_1.
struct CircleRep {
  Field field;
  std::size_t m = 0;
  std::vector<std::size_t> n;  // n_i = dim V_{2i-1}
  std::vector<std::size_t> r;  // r_i = dim V_{2i}
  std::vector<Matrix> alpha;
  std::vector<Matrix> beta;

  /// Throws std::invalid_argument on shape mismatch.
  void validate() const;
  std::size_t total_dim() const;
};

/// A Z-representation supported on vertices 2*lo .. 2*hi.
///   n[k] = dim V_{2(lo+k)+1}       (hi - lo entries)
///   r[k] = dim V_{2(lo+k)}         (hi - lo + 1 entries)
///   alpha[k] = alpha_{lo+k+1} : V_{2(lo+k)+1} -> V_{2(lo+k+1)}
///   beta[k]  = beta_{lo+k}    : V_{2(lo+k)+1} -> V_{2(lo+k)}
struct ZRep {
  Field field;
  long lo = 0;
  long hi = 0;
  std::vector<std::size_t> n;
  std::vector<std::size_t> r;
  std::vector<Matrix> alpha;
  std::vector<Matrix> beta;

  void validate() const;
  std::size_t total_dim() const;
};

/// Vertex-indexed view shared by both quivers. edges[k] joins vertices
/// first+k and first+k+1 and always points from the odd endpoint to the even
/// one. A cyclic zigzag has one edge per vertex (the last closes the loop);
/// a line has one fewer and is zero outside [first, last].
class Zigzag {
 public:
  Zigzag() = default;
  Zigzag(Field field, bool cyclic, long first, std::vector<std::size_t> dims, std::vector<Matrix> edges);

  static Zigzag from(const CircleRep& rep);
  static Zigzag from(const ZRep& rep);
  CircleRep to_circle() const;
  ZRep to_line() const;

  const Field& field() const { return field_; }
  bool cyclic() const { return cyclic_; }
  long first() const { return first_; }
  long last() const { return first_ + static_cast<long>(dims_.size()) - 1; }
  std::size_t size() const { return dims_.size(); }

  bool has_vertex(long v) const { return cyclic_ || (v >= first() && v <= last()); }
  bool has_edge(long u) const { return cyclic_ || (u >= first() && u + 1 <= last()); }
  std::size_t dim(long v) const;
  /// The arrow between u and u+1 (zero matrix of the right shape if absent).
  Matrix edge(long u) const;
  void set_edge(long u, Matrix m);
  void set_dim(long v, std::size_t d);
  std::size_t total_dim() const;
  const std::vector<std::size_t>& dims() const { return dims_; }

 private:
  std::size_t slot(long v) const;
  Field field_;
  bool cyclic_ = false;
  long first_ = 0;
  std::vector<std::size_t> dims_;
  std::vector<Matrix> edges_;
};

/// M(rho): rows indexed by even vertices, columns by odd ones.
Matrix assemble_M(const CircleRep& rep);
Matrix assemble_M(const ZRep& rep);

/// rho_u: alpha_1 scaled by u.
CircleRep twist(const CircleRep& rep, const Scalar& u);

struct KerCoker {
  std::size_t dker = 0;
  std::size_t dcoker = 0;
};

KerCoker dker_dcoker(const CircleRep& rep);
KerCoker dker_dcoker(const ZRep& rep);

/// Multiplicities of (i,i+1), [i,i], (i,i+1], [i,i+1) for 1 <= i <= m.
struct LocalCounts {
  std::size_t open = 0;
  std::size_t closed = 0;
  std::size_t open_closed = 0;
  std::size_t closed_open = 0;
};

LocalCounts local_counts(const CircleRep& rep, std::size_t i);

/// Codes covering exactly the single vertex v / the vertex pair {v, v+1}.
std::size_t count_single(const Zigzag& z, long v);
std::size_t count_pair(const Zigzag& z, long v);

/// T = beta_m^-1 alpha_m ... beta_1^-1 alpha_1 on V_1. Throws
/// std::invalid_argument unless every alpha_i, beta_i is invertible.
Matrix monodromy_of_regular(const CircleRep& rep);

/// Restriction of the periodic lift to critical indices a..b (vertices 2a..2b).
ZRep unroll(const CircleRep& rep, long a, long b);

/// The interval representation of a single code (periodic when circular).
CircleRep interval_rep(Field field, std::size_t m, const BarCode& code);
ZRep interval_rep(Field field, long lo, long hi, const BarCode& code);
/// The regular representation with V_r = F^k, alpha_1 = T and identities elsewhere.
CircleRep jordan_rep(std::size_t m, const Matrix& t);

CircleRep direct_sum(const CircleRep& a, const CircleRep& b);
ZRep direct_sum(const ZRep& a, const ZRep& b);

/// Conjugates every vertex space by the given invertible matrices
/// (g[v-1] acts on V_v), returning an isomorphic representation.
CircleRep change_basis(const CircleRep& rep, const std::vector<Matrix>& g);

/// The zero representation with the given dimensions of spaces.
CircleRep zero_circle(Field field, std::size_t m);

}  // namespace tame
