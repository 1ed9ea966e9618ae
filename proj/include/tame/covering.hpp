#pragma once

#include <cstddef>
#include <vector>

#include "tame/barcode.hpp"
#include "tame/quiver.hpp"

namespace tame {

/// How the covering-count table is filled.
///   parallel  - relation sweep, OpenMP over start vertices
///   serial    - the same sweep on one thread
///   reduction - reference: window truncation reduced by drop_start/drop_end
enum class CoverKernel { parallel, serial, reduction };

/// Number of indecomposable summands whose lifted support contains every
/// vertex a..b, read off the composite relation V_a ~> V_b as dim dom - dim ker.
std::size_t covering_count(const Zigzag& z, long a, long b);
/// Same number by reducing the truncation to [a, b] until only full-window
/// codes remain.
std::size_t covering_count_reduction(const Zigzag& z, long a, long b);

/// F(a, b) for a in [a_lo, a_hi] and b in [a, a + width).
struct CoveringTable {
  long a_lo = 0;
  long width = 0;
  std::vector<std::vector<std::size_t>> rows;

  std::size_t at(long a, long b) const;
};

CoveringTable covering_table(const Zigzag& z, long a_lo, long a_hi, long width, CoverKernel kernel);

/// Every interval summand by inclusion-exclusion over the table. Circle codes
/// come out canonical (start vertex in [2, 2m+1]); sorted.
BarCodes barcodes_from_cover(const Zigzag& z, CoverKernel kernel = CoverKernel::parallel);

}  // namespace tame
