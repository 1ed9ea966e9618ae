#include "tame/covering.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>

#include "tame/relation.hpp"
#include "tame/transform.hpp"

namespace tame {

namespace {

bool is_odd(long v) { return ((v % 2) + 2) % 2 == 1; }

/// The step relation V_u ~> V_{u+1}.
LinearRelation step(const Zigzag& z, long u) {
  Matrix e = z.edge(u);
  return is_odd(u) ? LinearRelation::graph(e) : dagger(LinearRelation::graph(e));
}

std::size_t dom_minus_ker(const LinearRelation& r) {
  const Matrix& b = r.space().basis();
  std::size_t k = b.cols();
  // dim dom = rank(src block); dim ker = k - rank(dst block).
  return rank(b.row_range(0, r.dim_src())) + rank(b.row_range(r.dim_src(), r.dim_dst())) - k;
}

std::vector<std::size_t> sweep_row(const Zigzag& z, long a, long width) {
  std::vector<std::size_t> row(static_cast<std::size_t>(width), 0);
  LinearRelation rel = LinearRelation::identity(z.field(), z.dim(a));
  for (long off = 0; off < width; ++off) {
    if (off > 0) rel = compose(step(z, a + off - 1), rel);
    std::size_t f = dom_minus_ker(rel);
    row[static_cast<std::size_t>(off)] = f;
    if (f == 0) break;  // nonincreasing in b
  }
  return row;
}

std::vector<std::size_t> reduction_row(const Zigzag& z, long a, long width) {
  std::vector<std::size_t> row(static_cast<std::size_t>(width), 0);
  for (long off = 0; off < width; ++off) {
    std::size_t f = covering_count_reduction(z, a, a + off);
    row[static_cast<std::size_t>(off)] = f;
    if (f == 0) break;
  }
  return row;
}

}  // namespace

std::size_t covering_count(const Zigzag& z, long a, long b) {
  if (b < a) throw std::invalid_argument("covering_count: empty range");
  return sweep_row(z, a, b - a + 1)[static_cast<std::size_t>(b - a)];
}

std::size_t covering_count_reduction(const Zigzag& z, long a, long b) {
  if (b < a) throw std::invalid_argument("covering_count_reduction: empty range");
  std::vector<std::size_t> dims;
  std::vector<Matrix> edges;
  for (long v = a; v <= b; ++v) dims.push_back(z.dim(v));
  for (long u = a; u < b; ++u) edges.push_back(z.edge(u));
  Zigzag w(z.field(), false, a, std::move(dims), std::move(edges));
  for (std::size_t before = w.total_dim() + 1; w.total_dim() < before;) {
    before = w.total_dim();
    for (long v = a + 1; v <= b; ++v) drop_start(w, v);
    for (long v = a; v < b; ++v) drop_end(w, v);
  }
  return w.dim(a);
}

std::size_t CoveringTable::at(long a, long b) const {
  long off = b - a;
  if (a < a_lo || a >= a_lo + static_cast<long>(rows.size()) || off < 0 || off >= width)
    throw std::out_of_range("CoveringTable::at");
  return rows[static_cast<std::size_t>(a - a_lo)][static_cast<std::size_t>(off)];
}

CoveringTable covering_table(const Zigzag& z, long a_lo, long a_hi, long width, CoverKernel kernel) {
  CoveringTable t;
  t.a_lo = a_lo;
  t.width = width;
  long count = std::max(0L, a_hi - a_lo + 1);
  t.rows.resize(static_cast<std::size_t>(count));
  switch (kernel) {
    case CoverKernel::serial:
      for (long k = 0; k < count; ++k) t.rows[static_cast<std::size_t>(k)] = sweep_row(z, a_lo + k, width);
      break;
    case CoverKernel::reduction:
      for (long k = 0; k < count; ++k) t.rows[static_cast<std::size_t>(k)] = reduction_row(z, a_lo + k, width);
      break;
    case CoverKernel::parallel: {
      std::exception_ptr err;
#pragma omp parallel for schedule(dynamic, 1)
      for (long k = 0; k < count; ++k) {
        try {
          t.rows[static_cast<std::size_t>(k)] = sweep_row(z, a_lo + k, width);
        } catch (...) {
#pragma omp critical
          err = std::current_exception();
        }
      }
      if (err) std::rethrow_exception(err);
      break;
    }
  }
  return t;
}

BarCodes barcodes_from_cover(const Zigzag& z, CoverKernel kernel) {
  BarCodes out;
  long total = static_cast<long>(z.total_dim());
  if (total == 0) return out;
  long a_first, a_last, span;
  if (z.cyclic()) {
    a_first = 2;
    a_last = static_cast<long>(z.size()) + 1;
    span = total;
  } else {
    a_first = z.first();
    a_last = z.last();
    span = z.last() - z.first() + 1;
  }
  CoveringTable t = covering_table(z, a_first - 1, a_last, span + 2, kernel);
  for (long a = a_first; a <= a_last; ++a)
    for (long b = a; b < a + span; ++b) {
      long mult = static_cast<long>(t.at(a, b)) - static_cast<long>(t.at(a - 1, b)) -
                  static_cast<long>(t.at(a, b + 1)) + static_cast<long>(t.at(a - 1, b + 1));
      if (mult < 0) throw std::logic_error("barcodes_from_cover: negative multiplicity");
      for (long c = 0; c < mult; ++c) out.push_back(BarCode::from_vertices(a, b));
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tame
