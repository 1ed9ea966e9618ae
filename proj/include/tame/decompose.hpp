#pragma once

#include <cstddef>
#include <vector>

#include "tame/barcode.hpp"
#include "tame/canonical_form.hpp"
#include "tame/covering.hpp"
#include "tame/quiver.hpp"
#include "tame/transform.hpp"

namespace tame {

struct Decomposition {
  Field field;
  bool circle = false;
  /// Number of critical indices per period (circle) or 0 (line).
  std::size_t m = 0;
  /// Sorted; circle codes canonical.
  BarCodes barcodes;
  /// Monodromy of the regular part (0x0 for a line representation).
  Matrix monodromy;
  EndoCanonicalForm form;
  /// Transforms that reached the regular part (circle only).
  std::vector<TransformRecord> transcript;

  std::size_t count_closed() const;
  std::size_t count_open() const;
  std::size_t count_mixed() const;
  /// Total dimension of the Jordan part.
  std::size_t jordan_dim() const { return monodromy.rows(); }
  /// Split cells (lambda, k) with lambda = value.
  std::size_t cells_with_eigenvalue(const Scalar& value) const { return form.cells_with_eigenvalue(value); }
};

Decomposition decompose(const CircleRep& rep, CoverKernel kernel = CoverKernel::parallel);
Decomposition decompose(const ZRep& rep, CoverKernel kernel = CoverKernel::parallel);

/// The direct sum of the interval summands and the Jordan part.
CircleRep rebuild(const Decomposition& d);

/// Sum over the summands of their dimension at vertex v.
std::size_t decomposition_vertex_dim(const Decomposition& d, long v);

}  // namespace tame
