#include "tame/barcode.hpp"

#include <stdexcept>

namespace tame {

namespace {

long floor_div(long a, long b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0)) ? 1 : 0); }

}  // namespace

BarCode BarCode::from_vertices(long a, long b) {
  if (a > b) throw std::invalid_argument("BarCode::from_vertices: empty vertex range");
  BarCode c;
  c.left = floor_div(a, 2);
  c.left_closed = (a - 2 * c.left) == 0;
  c.right_abs = floor_div(b + 1, 2);
  c.right_closed = (2 * c.right_abs) == b;
  return c;
}

std::string BarCode::to_string() const {
  return std::string(left_closed ? "[" : "(") + std::to_string(left) + "," + std::to_string(right_abs) +
         (right_closed ? "]" : ")");
}

BarCode canonical_circle(BarCode code, long m) {
  long s = code.start_vertex();
  long shift = floor_div(s - 2, 2 * m);
  return BarCode::from_vertices(s - 2 * m * shift, code.end_vertex() - 2 * m * shift);
}

std::size_t vertex_multiplicity(const BarCode& code, long v, long m) {
  long s = code.start_vertex(), e = code.end_vertex();
  if (m <= 0) return s <= v && v <= e ? 1 : 0;
  // Translates v + 2mt landing in [s, e].
  long period = 2 * m;
  long lo = floor_div(s - v + period - 1, period);
  long hi = floor_div(e - v, period);
  return hi >= lo ? static_cast<std::size_t>(hi - lo + 1) : 0;
}

}  // namespace tame
