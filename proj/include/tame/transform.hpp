#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tame/barcode.hpp"
#include "tame/quiver.hpp"

namespace tame {

/// T1(i) = drop_start(2i-1), T2(i) = drop_end(2i+1), T3(i) = drop_start(2i),
/// T4(i) = drop_end(2i).
enum class TransformKind { T1, T2, T3, T4 };

struct TransformRecord {
  TransformKind kind = TransformKind::T1;
  std::size_t index = 0;
  /// Codes removed, in the coordinates of the representation it was applied to.
  BarCodes eliminated;
  std::size_t dim_before = 0;
  std::size_t dim_after = 0;

  bool changed() const { return dim_after != dim_before; }
  /// e.g. "T1(5)".
  std::string label() const;
};

/// Removes the codes covering exactly {v} or {v, v+1} and moves the start of
/// every longer code beginning at v to v+2.
void drop_start(Zigzag& z, long v);
/// Mirror image: removes {v} and {v-1, v}; longer codes ending at v now end at v-2.
void drop_end(Zigzag& z, long v);

struct TransformResult {
  CircleRep rep;
  TransformRecord record;
};

TransformResult elementary(const CircleRep& rep, TransformKind kind, std::size_t i);

struct SweepResult {
  CircleRep regular;
  /// Only the transforms that changed something.
  std::vector<TransformRecord> transcript;
};

/// Sweeps i = 1..m applying T1(i), T2(i), T3(i), T4(i) until a full sweep is
/// the identity.
SweepResult reduce_to_regular(const CircleRep& rep);

}  // namespace tame
