#include "tame/quiver.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "tame/subspace.hpp"

namespace tame {

namespace {

long mod(long a, long n) { return ((a % n) + n) % n; }

void check_shape(const Matrix& m, const Field& f, std::size_t rows, std::size_t cols, const std::string& what) {
  if (!(m.field() == f) || m.rows() != rows || m.cols() != cols)
    throw std::invalid_argument(what + ": expected " + std::to_string(rows) + "x" + std::to_string(cols) + ", got " +
                                std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

void add_block(Matrix& dst, std::size_t r0, std::size_t c0, const Matrix& block) {
  const Field& f = dst.field();
  for (std::size_t i = 0; i < block.rows(); ++i)
    for (std::size_t j = 0; j < block.cols(); ++j) dst(r0 + i, c0 + j) = f.add(dst(r0 + i, c0 + j), block(i, j));
}

std::vector<std::size_t> offsets(const std::vector<std::size_t>& d) {
  std::vector<std::size_t> off(d.size() + 1, 0);
  std::partial_sum(d.begin(), d.end(), off.begin() + 1);
  return off;
}

}  // namespace

void CircleRep::validate() const {
  if (m == 0) throw std::invalid_argument("circle representation needs m >= 1");
  if (n.size() != m || r.size() != m || alpha.size() != m || beta.size() != m)
    throw std::invalid_argument("circle representation: expected " + std::to_string(m) + " entries in n, r, alpha, beta");
  for (std::size_t i = 0; i < m; ++i) {
    check_shape(alpha[i], field, r[i], n[i], "alpha_" + std::to_string(i + 1));
    check_shape(beta[i], field, r[i], n[(i + 1) % m], "beta_" + std::to_string(i + 1));
  }
}

std::size_t CircleRep::total_dim() const {
  return std::accumulate(n.begin(), n.end(), std::size_t{0}) + std::accumulate(r.begin(), r.end(), std::size_t{0});
}

void ZRep::validate() const {
  if (hi < lo) throw std::invalid_argument("line representation: support needs lo <= hi");
  std::size_t len = static_cast<std::size_t>(hi - lo);
  if (n.size() != len || r.size() != len + 1 || alpha.size() != len || beta.size() != len)
    throw std::invalid_argument("line representation: support [" + std::to_string(lo) + "," + std::to_string(hi) +
                                "] needs " + std::to_string(len) + " odd spaces and maps, " + std::to_string(len + 1) +
                                " even spaces");
  for (std::size_t k = 0; k < len; ++k) {
    check_shape(alpha[k], field, r[k + 1], n[k], "alpha_" + std::to_string(lo + static_cast<long>(k) + 1));
    check_shape(beta[k], field, r[k], n[k], "beta_" + std::to_string(lo + static_cast<long>(k)));
  }
}

std::size_t ZRep::total_dim() const {
  return std::accumulate(n.begin(), n.end(), std::size_t{0}) + std::accumulate(r.begin(), r.end(), std::size_t{0});
}

Zigzag::Zigzag(Field field, bool cyclic, long first, std::vector<std::size_t> dims, std::vector<Matrix> edges)
    : field_(field), cyclic_(cyclic), first_(first), dims_(std::move(dims)), edges_(std::move(edges)) {
  if (cyclic_ && (dims_.size() < 2 || dims_.size() % 2 != 0 || mod(first_, 2) != 1))
    throw std::invalid_argument("cyclic zigzag needs an even number of vertices starting at an odd one");
  std::size_t want = cyclic_ ? dims_.size() : (dims_.empty() ? 0 : dims_.size() - 1);
  if (edges_.size() != want) throw std::invalid_argument("zigzag: wrong number of edges");
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    long u = first_ + static_cast<long>(k);
    long odd = mod(u, 2) == 1 ? u : u + 1;
    long even = odd == u ? u + 1 : u;
    check_shape(edges_[k], field_, dim(even), dim(odd), "zigzag edge " + std::to_string(u));
  }
}

std::size_t Zigzag::slot(long v) const {
  return static_cast<std::size_t>(cyclic_ ? mod(v - first_, static_cast<long>(dims_.size())) : v - first_);
}

std::size_t Zigzag::dim(long v) const { return has_vertex(v) ? dims_[slot(v)] : 0; }

Matrix Zigzag::edge(long u) const {
  if (has_edge(u)) return edges_[slot(u)];
  long odd = mod(u, 2) == 1 ? u : u + 1;
  long even = odd == u ? u + 1 : u;
  return Matrix::zero(field_, dim(even), dim(odd));
}

void Zigzag::set_edge(long u, Matrix m) {
  if (has_edge(u)) edges_[slot(u)] = std::move(m);
}

void Zigzag::set_dim(long v, std::size_t d) {
  if (has_vertex(v)) dims_[slot(v)] = d;
}

std::size_t Zigzag::total_dim() const { return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0}); }

Zigzag Zigzag::from(const CircleRep& rep) {
  rep.validate();
  std::vector<std::size_t> dims;
  std::vector<Matrix> edges;
  for (std::size_t i = 0; i < rep.m; ++i) {
    dims.push_back(rep.n[i]);
    dims.push_back(rep.r[i]);
    edges.push_back(rep.alpha[i]);
    edges.push_back(rep.beta[i]);
  }
  return {rep.field, true, 1, std::move(dims), std::move(edges)};
}

Zigzag Zigzag::from(const ZRep& rep) {
  rep.validate();
  std::vector<std::size_t> dims;
  std::vector<Matrix> edges;
  for (std::size_t k = 0; k < rep.n.size(); ++k) {
    dims.push_back(rep.r[k]);
    dims.push_back(rep.n[k]);
    edges.push_back(rep.beta[k]);
    edges.push_back(rep.alpha[k]);
  }
  dims.push_back(rep.r.back());
  return {rep.field, false, 2 * rep.lo, std::move(dims), std::move(edges)};
}

CircleRep Zigzag::to_circle() const {
  if (!cyclic_ || first_ != 1) throw std::logic_error("to_circle: not a circle zigzag");
  CircleRep rep;
  rep.field = field_;
  rep.m = dims_.size() / 2;
  for (std::size_t i = 0; i < rep.m; ++i) {
    rep.n.push_back(dims_[2 * i]);
    rep.r.push_back(dims_[2 * i + 1]);
    rep.alpha.push_back(edges_[2 * i]);
    rep.beta.push_back(edges_[2 * i + 1]);
  }
  return rep;
}

ZRep Zigzag::to_line() const {
  if (cyclic_ || mod(first_, 2) != 0 || dims_.size() % 2 != 1) throw std::logic_error("to_line: not a line zigzag");
  ZRep rep;
  rep.field = field_;
  rep.lo = first_ / 2;
  rep.hi = last() / 2;
  for (std::size_t k = 0; k + 1 < dims_.size(); k += 2) {
    rep.r.push_back(dims_[k]);
    rep.n.push_back(dims_[k + 1]);
    rep.beta.push_back(edges_[k]);
    rep.alpha.push_back(edges_[k + 1]);
  }
  rep.r.push_back(dims_.back());
  return rep;
}

Matrix assemble_M(const CircleRep& rep) {
  rep.validate();
  auto ro = offsets(rep.r), co = offsets(rep.n);
  Matrix M(rep.field, ro.back(), co.back());
  for (std::size_t i = 0; i < rep.m; ++i) {
    add_block(M, ro[i], co[i], rep.alpha[i]);
    add_block(M, ro[i], co[(i + 1) % rep.m], rep.beta[i].negated());
  }
  return M;
}

Matrix assemble_M(const ZRep& rep) {
  rep.validate();
  auto ro = offsets(rep.r), co = offsets(rep.n);
  Matrix M(rep.field, ro.back(), co.back());
  for (std::size_t k = 0; k < rep.n.size(); ++k) {
    add_block(M, ro[k], co[k], rep.beta[k].negated());
    add_block(M, ro[k + 1], co[k], rep.alpha[k]);
  }
  return M;
}

CircleRep twist(const CircleRep& rep, const Scalar& u) {
  rep.validate();
  Scalar c = rep.field.canonical(u);
  if (Field::is_zero(c)) throw std::invalid_argument("twist: u must be nonzero");
  CircleRep out = rep;
  out.alpha[0] = rep.alpha[0].scaled(c);
  return out;
}

KerCoker dker_dcoker(const CircleRep& rep) {
  Matrix M = assemble_M(rep);
  std::size_t rk = rank(M);
  return {M.cols() - rk, M.rows() - rk};
}

KerCoker dker_dcoker(const ZRep& rep) {
  Matrix M = assemble_M(rep);
  std::size_t rk = rank(M);
  return {M.cols() - rk, M.rows() - rk};
}

std::size_t count_single(const Zigzag& z, long v) {
  Matrix left = z.edge(v - 1), right = z.edge(v);
  if (mod(v, 2) == 1) return nullspace(vstack(left, right)).dim();
  return z.dim(v) - rank(hstack(left, right));
}

std::size_t count_pair(const Zigzag& z, long v) {
  if (mod(v, 2) == 1) {
    // Starts at odd v (dies towards v-1), ends at even v+1 (not hit from v+2).
    Subspace hit = image(z.edge(v + 1));
    Subspace born = image(z.edge(v), nullspace(z.edge(v - 1)));
    return sum(hit, born).dim() - hit.dim();
  }
  // Starts at even v (not hit from v-1), ends at odd v+1 (dies towards v+2).
  Subspace hit = image(z.edge(v - 1));
  Subspace born = image(z.edge(v), nullspace(z.edge(v + 1)));
  return sum(hit, born).dim() - hit.dim();
}

LocalCounts local_counts(const CircleRep& rep, std::size_t i) {
  if (i < 1 || i > rep.m) throw std::invalid_argument("local_counts: index out of range");
  Zigzag z = Zigzag::from(rep);
  long v = 2 * static_cast<long>(i);
  return {count_single(z, v + 1), count_single(z, v), count_pair(z, v + 1), count_pair(z, v)};
}

Matrix monodromy_of_regular(const CircleRep& rep) {
  rep.validate();
  Matrix t = Matrix::identity(rep.field, rep.n[0]);
  for (std::size_t i = 0; i < rep.m; ++i) {
    const Matrix& a = rep.alpha[i];
    const Matrix& b = rep.beta[i];
    if (!a.is_square() || !b.is_square() || rank(a) != a.rows() || rank(b) != b.rows())
      throw std::invalid_argument("monodromy_of_regular: representation is not regular at index " + std::to_string(i + 1));
    t = inverse(b) * (a * t);
  }
  return t;
}

ZRep unroll(const CircleRep& rep, long a, long b) {
  rep.validate();
  if (a > b) throw std::invalid_argument("unroll: empty window");
  long m = static_cast<long>(rep.m);
  auto idx = [m](long i) { return static_cast<std::size_t>(mod(i - 1, m)); };
  ZRep out;
  out.field = rep.field;
  out.lo = a;
  out.hi = b;
  for (long i = a; i <= b; ++i) out.r.push_back(rep.r[idx(i)]);
  for (long i = a; i < b; ++i) {
    out.n.push_back(rep.n[idx(i + 1)]);
    out.alpha.push_back(rep.alpha[idx(i + 1)]);
    out.beta.push_back(rep.beta[idx(i)]);
  }
  return out;
}

namespace {

/// Basis vectors of an interval module indexed by lifted vertex, placed into
/// the spaces of `z` (periodically or on a line).
Zigzag interval_zigzag(Field field, bool cyclic, long first, std::size_t size, const BarCode& code) {
  long s = code.start_vertex(), e = code.end_vertex();
  long period = static_cast<long>(size);
  auto slot = [&](long v) { return static_cast<std::size_t>(cyclic ? mod(v - first, period) : v - first); };
  if (!cyclic && (s < first || e > first + period - 1))
    throw std::invalid_argument("interval_rep: code " + code.to_string() + " leaves the support");
  std::vector<std::size_t> dims(size, 0);
  std::vector<std::size_t> pos(static_cast<std::size_t>(e - s + 1));
  for (long v = s; v <= e; ++v) pos[static_cast<std::size_t>(v - s)] = dims[slot(v)]++;
  std::size_t n_edges = cyclic ? size : size - 1;
  std::vector<Matrix> edges;
  for (std::size_t k = 0; k < n_edges; ++k) {
    long u = first + static_cast<long>(k);
    long odd = mod(u, 2) == 1 ? u : u + 1;
    long even = odd == u ? u + 1 : u;
    edges.push_back(Matrix::zero(field, dims[slot(even)], dims[slot(odd)]));
  }
  for (long u = s; u < e; ++u) {
    long odd = mod(u, 2) == 1 ? u : u + 1;
    long even = odd == u ? u + 1 : u;
    edges[slot(u)](pos[static_cast<std::size_t>(even - s)], pos[static_cast<std::size_t>(odd - s)]) = 1;
  }
  return {field, cyclic, first, std::move(dims), std::move(edges)};
}

}  // namespace

CircleRep interval_rep(Field field, std::size_t m, const BarCode& code) {
  return interval_zigzag(field, true, 1, 2 * m, code).to_circle();
}

ZRep interval_rep(Field field, long lo, long hi, const BarCode& code) {
  return interval_zigzag(field, false, 2 * lo, static_cast<std::size_t>(2 * (hi - lo) + 1), code).to_line();
}

CircleRep jordan_rep(std::size_t m, const Matrix& t) {
  if (!t.is_square() || m == 0) throw std::invalid_argument("jordan_rep: needs a square matrix and m >= 1");
  CircleRep rep;
  rep.field = t.field();
  rep.m = m;
  rep.n.assign(m, t.rows());
  rep.r.assign(m, t.rows());
  rep.alpha.assign(m, Matrix::identity(t.field(), t.rows()));
  rep.beta.assign(m, Matrix::identity(t.field(), t.rows()));
  rep.alpha[0] = t;
  return rep;
}

CircleRep direct_sum(const CircleRep& a, const CircleRep& b) {
  if (a.m != b.m || !(a.field == b.field)) throw std::invalid_argument("direct_sum: incompatible representations");
  CircleRep out = a;
  for (std::size_t i = 0; i < a.m; ++i) {
    out.n[i] += b.n[i];
    out.r[i] += b.r[i];
    out.alpha[i] = direct_sum(a.alpha[i], b.alpha[i]);
    out.beta[i] = direct_sum(a.beta[i], b.beta[i]);
  }
  return out;
}

ZRep direct_sum(const ZRep& a, const ZRep& b) {
  if (a.lo != b.lo || a.hi != b.hi || !(a.field == b.field))
    throw std::invalid_argument("direct_sum: incompatible representations");
  ZRep out = a;
  for (std::size_t k = 0; k < a.r.size(); ++k) out.r[k] += b.r[k];
  for (std::size_t k = 0; k < a.n.size(); ++k) {
    out.n[k] += b.n[k];
    out.alpha[k] = direct_sum(a.alpha[k], b.alpha[k]);
    out.beta[k] = direct_sum(a.beta[k], b.beta[k]);
  }
  return out;
}

CircleRep change_basis(const CircleRep& rep, const std::vector<Matrix>& g) {
  rep.validate();
  if (g.size() != 2 * rep.m) throw std::invalid_argument("change_basis: need one matrix per vertex");
  CircleRep out = rep;
  for (std::size_t i = 0; i < rep.m; ++i) {
    const Matrix& g_odd = g[2 * i];
    const Matrix& g_even = g[2 * i + 1];
    const Matrix& g_next = g[(2 * i + 2) % (2 * rep.m)];
    out.alpha[i] = g_even * rep.alpha[i] * inverse(g_odd);
    out.beta[i] = g_even * rep.beta[i] * inverse(g_next);
  }
  return out;
}

CircleRep zero_circle(Field field, std::size_t m) {
  CircleRep rep;
  rep.field = field;
  rep.m = m;
  rep.n.assign(m, 0);
  rep.r.assign(m, 0);
  rep.alpha.assign(m, Matrix::zero(field, 0, 0));
  rep.beta.assign(m, Matrix::zero(field, 0, 0));
  return rep;
}

}  // namespace tame
