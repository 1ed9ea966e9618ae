#pragma once

#include <compare>
#include <string>
#include <vector>

namespace tame {

/// An interval {left, right_abs} of critical indices with open/closed ends.
/// On the vertex line of a zigzag, index i is vertex 2i; an open end sits on
/// the neighbouring odd vertex.
struct BarCode {
  long left = 0;
  long right_abs = 0;
  bool left_closed = true;
  bool right_closed = true;

  long start_vertex() const { return 2 * left + (left_closed ? 0 : 1); }
  long end_vertex() const { return 2 * right_abs - (right_closed ? 0 : 1); }
  /// Number of vertices covered.
  long length() const { return end_vertex() - start_vertex() + 1; }

  bool is_closed() const { return left_closed && right_closed; }
  bool is_open() const { return !left_closed && !right_closed; }
  bool is_mixed() const { return left_closed != right_closed; }

  /// The interval covering vertices a..b (a <= b).
  static BarCode from_vertices(long a, long b);

  /// e.g. "(6,8]".
  std::string to_string() const;

  friend auto operator<=>(const BarCode&, const BarCode&) = default;
};

/// Translate so the start vertex lies in [2, 2m+1], i.e. 1 <= left <= m.
BarCode canonical_circle(BarCode code, long m);

/// Whether `code` passes through vertex v (periodically when m > 0).
std::size_t vertex_multiplicity(const BarCode& code, long v, long m);

using BarCodes = std::vector<BarCode>;

}  // namespace tame
