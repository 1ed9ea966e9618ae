#include "tame/homology.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "tame/subspace.hpp"

namespace tame {

namespace {

const std::vector<Simplex> kNone;

/// Sorts in place; returns the sign of the sorting permutation, 0 if a vertex repeats.
int sort_with_sign(Simplex& s) {
  int sign = 1;
  for (std::size_t i = 1; i < s.size(); ++i)
    for (std::size_t j = i; j > 0 && s[j - 1] > s[j]; --j) {
      std::swap(s[j - 1], s[j]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i] == s[i - 1]) return 0;
  return sign;
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::size_t vertex_count, const std::vector<Simplex>& simplices)
    : vertex_count_(vertex_count) {
  std::set<Simplex> all;
  for (std::size_t v = 0; v < vertex_count; ++v) all.insert({v});
  for (Simplex s : simplices) {
    if (s.empty()) throw std::invalid_argument("simplicial complex: empty simplex");
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw std::invalid_argument("simplicial complex: repeated vertex in a simplex");
    if (s.back() >= vertex_count) throw std::invalid_argument("simplicial complex: vertex " + std::to_string(s.back()) + " out of range");
    // Every nonempty subset is a face.
    std::size_t n = s.size();
    if (n > 20) throw std::invalid_argument("simplicial complex: simplex dimension too large");
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      Simplex face;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::size_t{1} << i)) face.push_back(s[i]);
      all.insert(face);
    }
  }
  for (const auto& s : all) {
    std::size_t d = s.size() - 1;
    if (by_dim_.size() <= d) by_dim_.resize(d + 1);
    by_dim_[d].push_back(s);
  }
  // std::set order is lexicographic, so each by_dim_ list is sorted.
  for (const auto& list : by_dim_)
    for (std::size_t i = 0; i < list.size(); ++i) index_[list[i]] = i;
}

const std::vector<Simplex>& SimplicialComplex::simplices(int r) const {
  if (r < 0 || r >= static_cast<int>(by_dim_.size())) return kNone;
  return by_dim_[static_cast<std::size_t>(r)];
}

long SimplicialComplex::index_of(const Simplex& s) const {
  auto it = index_.find(s);
  return it == index_.end() ? -1 : static_cast<long>(it->second);
}

SimplicialMap::SimplicialMap(SimplicialComplex source, SimplicialComplex target, std::vector<std::size_t> vertex_map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(vertex_map)) {
  if (map_.size() != source_.vertex_count())
    throw std::invalid_argument("simplicial map: vertex_map has " + std::to_string(map_.size()) + " entries, source has " +
                                std::to_string(source_.vertex_count()) + " vertices");
  for (std::size_t v : map_)
    if (v >= target_.vertex_count()) throw std::invalid_argument("simplicial map: image vertex " + std::to_string(v) + " out of range");
  for (int r = 1; r <= source_.dimension(); ++r)
    for (const auto& s : source_.simplices(r)) {
      Simplex img;
      for (std::size_t v : s) img.push_back(map_[v]);
      std::sort(img.begin(), img.end());
      img.erase(std::unique(img.begin(), img.end()), img.end());
      if (target_.index_of(img) < 0) throw std::invalid_argument("simplicial map: image of a simplex is not a simplex");
    }
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  std::vector<std::size_t> vm;
  for (std::size_t v : f.vertex_map()) vm.push_back(g.vertex_map()[v]);
  return {f.source(), g.target(), std::move(vm)};
}

Matrix boundary_matrix(const Field& field, const SimplicialComplex& k, int r) {
  const auto& cols = k.simplices(r);
  std::size_t rows = r <= 0 ? 0 : k.count(r - 1);
  Matrix d(field, rows, cols.size());
  if (r <= 0) return d;
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t j = 0; j < cols[c].size(); ++j) {
      Simplex face = cols[c];
      face.erase(face.begin() + static_cast<long>(j));
      long row = k.index_of(face);
      d(static_cast<std::size_t>(row), c) = field.from_int(j % 2 == 0 ? 1 : -1);
    }
  return d;
}

Vector HomologyBasis::coordinates(const Vector& cycle) const {
  auto x = solve(hstack(cycles, boundaries), cycle);
  if (!x) throw std::logic_error("homology: chain is not a cycle");
  return Vector(x->begin(), x->begin() + static_cast<long>(cycles.cols()));
}

HomologyBasis homology_basis(const Field& field, const SimplicialComplex& k, int r) {
  HomologyBasis h;
  h.degree = r;
  Subspace z = nullspace(boundary_matrix(field, k, r));
  h.boundaries = boundary_matrix(field, k, r + 1);
  // Greedy: keep kernel basis columns independent modulo boundaries.
  Matrix span = h.boundaries;
  std::size_t rk = rank(span);
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < z.dim(); ++j) {
    Matrix trial = hstack(span, z.basis().col_range(j, 1));
    std::size_t rt = rank(trial);
    if (rt > rk) {
      span = std::move(trial);
      rk = rt;
      keep.push_back(j);
    }
  }
  h.cycles = z.basis().select_cols(keep);
  return h;
}

std::size_t betti(const Field& field, const SimplicialComplex& k, int r) {
  Matrix d = boundary_matrix(field, k, r);
  std::size_t z = k.count(r) - rank(d);
  return z - rank(boundary_matrix(field, k, r + 1));
}

Matrix chain_map(const Field& field, const SimplicialMap& f, int r) {
  const auto& src = f.source().simplices(r);
  Matrix c(field, f.target().count(r), src.size());
  for (std::size_t j = 0; j < src.size(); ++j) {
    Simplex img;
    for (std::size_t v : src[j]) img.push_back(f.vertex_map()[v]);
    int sign = sort_with_sign(img);
    if (sign == 0) continue;
    c(static_cast<std::size_t>(f.target().index_of(img)), j) = field.from_int(sign);
  }
  return c;
}

Matrix induced_map(const Field& field, const SimplicialMap& f, int r) {
  HomologyBasis hs = homology_basis(field, f.source(), r);
  HomologyBasis ht = homology_basis(field, f.target(), r);
  Matrix pushed = chain_map(field, f, r) * hs.cycles;
  Matrix out(field, ht.dim(), hs.dim());
  for (std::size_t j = 0; j < hs.dim(); ++j) {
    Vector x = ht.coordinates(pushed.col(j));
    for (std::size_t i = 0; i < x.size(); ++i) out(i, j) = x[i];
  }
  return out;
}

}  // namespace tame
