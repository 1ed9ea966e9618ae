#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "tame/matrix.hpp"

namespace tame {

using Simplex = std::vector<std::size_t>;

/// A finite simplicial complex on vertices 0..vertex_count-1. Every vertex is
/// a 0-simplex; faces are closed on construction.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Throws std::invalid_argument on out-of-range vertices or repeated
  /// vertices inside a simplex.
  SimplicialComplex(std::size_t vertex_count, const std::vector<Simplex>& simplices);

  std::size_t vertex_count() const { return vertex_count_; }
  /// -1 for the empty complex.
  int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
  /// Sorted r-simplices (empty outside 0..dimension()).
  const std::vector<Simplex>& simplices(int r) const;
  std::size_t count(int r) const { return simplices(r).size(); }
  /// Position of a sorted simplex in simplices(size-1), or -1.
  long index_of(const Simplex& s) const;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<std::vector<Simplex>> by_dim_;
  std::map<Simplex, std::size_t> index_;
};

/// A vertex map that sends every simplex of `source` onto a simplex of `target`.
class SimplicialMap {
 public:
  SimplicialMap() = default;
  /// Throws std::invalid_argument if the map is not simplicial.
  SimplicialMap(SimplicialComplex source, SimplicialComplex target, std::vector<std::size_t> vertex_map);

  const SimplicialComplex& source() const { return source_; }
  const SimplicialComplex& target() const { return target_; }
  const std::vector<std::size_t>& vertex_map() const { return map_; }

 private:
  SimplicialComplex source_;
  SimplicialComplex target_;
  std::vector<std::size_t> map_;
};

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);

/// d_r : C_r -> C_{r-1}, columns indexed by r-simplices. The face omitting
/// the j-th vertex has sign (-1)^j. d_0 is the 0 x n0 matrix.
Matrix boundary_matrix(const Field& field, const SimplicialComplex& k, int r);

struct HomologyBasis {
  int degree = 0;
  /// Columns are cycle representatives in C_r.
  Matrix cycles;
  /// Generators of the boundaries B_r (columns of d_{r+1}).
  Matrix boundaries;
  std::size_t dim() const { return cycles.cols(); }
  /// Coordinates of the class of a cycle in this basis.
  Vector coordinates(const Vector& cycle) const;
};

HomologyBasis homology_basis(const Field& field, const SimplicialComplex& k, int r);

std::size_t betti(const Field& field, const SimplicialComplex& k, int r);

/// The chain map C_r(source) -> C_r(target); degenerate images go to 0.
Matrix chain_map(const Field& field, const SimplicialMap& f, int r);

/// H_r(f) in the homology_basis bases of source and target.
Matrix induced_map(const Field& field, const SimplicialMap& f, int r);

}  // namespace tame
