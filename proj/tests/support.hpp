#pragma once

// Random generators shared by the unit and acceptance tests.

#include <algorithm>
#include <random>
#include <vector>

#include "tame/canonical_form.hpp"
#include "tame/matrix.hpp"
#include "tame/quiver.hpp"

namespace testing {

using namespace tame;
using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, Rng& rng, long lo = -3, long hi = 3) {
  std::vector<long> e(rows * cols);
  for (auto& x : e) x = uniform(rng, lo, hi);
  return Matrix::from_ints(f, rows, cols, e);
}

inline Matrix random_invertible(const Field& f, std::size_t n, Rng& rng) {
  for (;;) {
    Matrix m = random_matrix(f, n, n, rng);
    if (rank(m) == n) return m;
  }
}

inline Scalar random_nonzero(const Field& f, Rng& rng) {
  long hi = f.is_prime() ? std::min<long>(f.characteristic() - 1, 50) : 4;
  for (;;) {
    Scalar s = f.from_int(uniform(rng, f.is_prime() ? 1 : -hi, hi));
    if (!Field::is_zero(s)) return s;
  }
}

/// A circle representation assembled from a known list of summands and then
/// hidden behind random changes of basis.
struct KnownRep {
  CircleRep rep;
  BarCodes codes;  // canonical, sorted
  std::vector<JordanCell> cells;  // sorted by (lambda, size)
  Matrix monodromy;  // direct sum of the cell matrices
};

inline KnownRep random_known_rep(const Field& f, std::size_t m, std::size_t max_dim, Rng& rng, bool jordan = true,
                                 int attempts = 8) {
  KnownRep out;
  long mm = static_cast<long>(m);
  std::vector<std::size_t> dims(2 * m, 0);
  auto fits = [&](auto weight) {
    for (long v = 1; v <= 2 * mm; ++v)
      if (dims[static_cast<std::size_t>(v - 1)] + weight(v) > max_dim) return false;
    return true;
  };
  out.monodromy = Matrix::zero(f, 0, 0);
  for (int t = 0; t < attempts; ++t) {
    if (jordan && uniform(rng, 0, 3) == 0) {
      int k = static_cast<int>(uniform(rng, 1, 2));
      if (!fits([&](long) { return static_cast<std::size_t>(k); })) continue;
      JordanCell c{random_nonzero(f, rng), k};
      for (auto& d : dims) d += static_cast<std::size_t>(k);
      out.cells.push_back(c);
      out.monodromy = direct_sum(out.monodromy, jordan_cell_matrix(f, c.lambda, k));
    } else {
      long s = uniform(rng, 2, 2 * mm + 1);
      long e = s + uniform(rng, 0, 3 * mm);
      BarCode code = BarCode::from_vertices(s, e);
      if (!fits([&](long v) { return vertex_multiplicity(code, v, mm); })) continue;
      for (long v = 1; v <= 2 * mm; ++v) dims[static_cast<std::size_t>(v - 1)] += vertex_multiplicity(code, v, mm);
      out.codes.push_back(canonical_circle(code, mm));
    }
  }
  CircleRep rep = zero_circle(f, m);
  for (const auto& c : out.codes) rep = direct_sum(rep, interval_rep(f, m, c));
  if (out.monodromy.rows() > 0) rep = direct_sum(rep, jordan_rep(m, out.monodromy));
  std::vector<Matrix> g;
  for (std::size_t v = 0; v < 2 * m; ++v) g.push_back(random_invertible(f, v % 2 == 0 ? rep.n[v / 2] : rep.r[v / 2], rng));
  out.rep = change_basis(rep, g);
  std::sort(out.codes.begin(), out.codes.end());
  std::sort(out.cells.begin(), out.cells.end(), [](const JordanCell& a, const JordanCell& b) {
    return a.lambda != b.lambda ? a.lambda < b.lambda : a.size < b.size;
  });
  return out;
}

/// Arbitrary matrices with the given vertex dimensions.
inline CircleRep random_circle_rep(const Field& f, std::size_t m, std::size_t max_dim, Rng& rng) {
  CircleRep rep;
  rep.field = f;
  rep.m = m;
  for (std::size_t i = 0; i < m; ++i) {
    rep.n.push_back(static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(max_dim))));
    rep.r.push_back(static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(max_dim))));
  }
  for (std::size_t i = 0; i < m; ++i) {
    // Sparse entries make rank drops (and so bar codes) common.
    rep.alpha.push_back(random_matrix(f, rep.r[i], rep.n[i], rng, -1, 1));
    rep.beta.push_back(random_matrix(f, rep.r[i], rep.n[(i + 1) % m], rng, -1, 1));
  }
  return rep;
}

/// Vertex dimensions of a circle representation, V_1 .. V_2m.
inline std::vector<std::size_t> vertex_dims(const CircleRep& rep) {
  std::vector<std::size_t> d;
  for (std::size_t i = 0; i < rep.m; ++i) {
    d.push_back(rep.n[i]);
    d.push_back(rep.r[i]);
  }
  return d;
}

}  // namespace testing
