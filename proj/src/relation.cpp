#include "tame/relation.hpp"

#include <stdexcept>

namespace tame {

namespace {

Vector concat(const Vector& a, const Vector& b) {
  Vector out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Matrix src_block(const LinearRelation& r) { return r.space().basis().row_range(0, r.dim_src()); }
Matrix dst_block(const LinearRelation& r) { return r.space().basis().row_range(r.dim_src(), r.dim_dst()); }

/// R_reg as a relation on V_reg, built literally as pi ∘ iota† ∘ R ∘ iota ∘ pi†.
LinearRelation regular_relation(const LinearRelation& r, const RelationLimits& lim) {
  Subspace n = intersect(sum(lim.k_minus, lim.k_plus), lim.d);
  const Matrix& inc = lim.d.basis();
  Subspace n_in_d(lim.d.coordinates(n.basis()));
  Quotient q = quotient(lim.d.dim(), n_in_d);
  LinearRelation proj = LinearRelation::graph(q.project);
  LinearRelation iota = LinearRelation::graph(inc);
  return compose(proj, compose(dagger(iota), compose(r, compose(iota, dagger(proj)))));
}

}  // namespace

LinearRelation::LinearRelation(std::size_t dim_src, std::size_t dim_dst, Subspace space)
    : src_(dim_src), dst_(dim_dst), space_(std::move(space)) {
  if (space_.ambient_dim() != src_ + dst_) throw std::invalid_argument("relation: ambient dimension mismatch");
}

LinearRelation LinearRelation::graph(const Matrix& m) {
  return {m.cols(), m.rows(), Subspace(vstack(Matrix::identity(m.field(), m.cols()), m))};
}

LinearRelation LinearRelation::full(Field field, std::size_t dim_src, std::size_t dim_dst) {
  return {dim_src, dim_dst, Subspace::full(field, dim_src + dim_dst)};
}

LinearRelation LinearRelation::from_equalizer(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("from_equalizer: maps must share a target");
  return {a.cols(), b.cols(), nullspace(hstack(a, b.negated()))};
}

bool LinearRelation::relates(const Vector& v, const Vector& w) const {
  if (v.size() != src_ || w.size() != dst_) throw std::invalid_argument("relates: dimension mismatch");
  return space_.contains(concat(v, w));
}

LinearRelation dagger(const LinearRelation& r) {
  return {r.dim_dst(), r.dim_src(), Subspace(vstack(dst_block(r), src_block(r)))};
}

LinearRelation compose(const LinearRelation& s, const LinearRelation& r) {
  if (r.dim_dst() != s.dim_src()) throw std::invalid_argument("compose: dimension mismatch");
  Matrix rv = src_block(r), rw = dst_block(r);
  Matrix sw = src_block(s), su = dst_block(s);
  // Rw x = Sw y pairs a w shared by both relations.
  Subspace pairs = nullspace(hstack(rw, sw.negated()));
  Matrix x = pairs.basis().row_range(0, r.dim());
  Matrix y = pairs.basis().row_range(r.dim(), s.dim());
  return {r.dim_src(), s.dim_dst(), Subspace(vstack(rv * x, su * y))};
}

LinearRelation power(const LinearRelation& r, std::size_t k) {
  if (r.dim_src() != r.dim_dst()) throw std::invalid_argument("power: relation must be square");
  LinearRelation out = LinearRelation::identity(r.field(), r.dim_src());
  for (std::size_t i = 0; i < k; ++i) out = compose(r, out);
  return out;
}

RelationParts parts(const LinearRelation& r) {
  Matrix rv = src_block(r), rw = dst_block(r);
  return {Subspace(rv), Subspace(rw), Subspace(rv * nullspace(rw).basis()), Subspace(rw * nullspace(rv).basis())};
}

RelationLimits limits(const LinearRelation& r) {
  if (r.dim_src() != r.dim_dst()) throw std::invalid_argument("limits: relation must be square");
  std::size_t n = r.dim_src();
  // ker(R^k), mul(R^k) increase and dom(R^k), img(R^k) decrease; each chain
  // is constant from the first repeat on, which happens within n + 1 steps.
  LinearRelation pw = r;
  RelationParts cur = parts(pw);
  RelationLimits lim{cur.mul, cur.ker, cur.img, cur.dom, {}};
  for (std::size_t step = 0; step <= n + 1; ++step) {
    pw = compose(r, pw);
    RelationParts next = parts(pw);
    bool stable = next.ker == lim.k_plus && next.mul == lim.k_minus && next.dom == lim.d_plus && next.img == lim.d_minus;
    lim = {next.mul, next.ker, next.img, next.dom, {}};
    if (stable) break;
  }
  lim.d = intersect(lim.d_minus, lim.d_plus);
  return lim;
}

RegularPart regular_part(const LinearRelation& r) {
  RelationLimits lim = limits(r);
  LinearRelation reg = regular_relation(r, lim);
  std::size_t k = reg.dim_src();
  RelationParts p = parts(reg);
  if (p.dom.dim() != k || p.img.dim() != k || p.ker.dim() != 0 || p.mul.dim() != 0)
    throw std::logic_error("regular part is not an isomorphism");

  RegularPart out;
  out.dim = k;
  // With dom = all and mul = 0 the canonical basis is [I; T].
  out.map = reg.space().basis().row_range(k, k);
  out.form = canonical_form(out.map);
  Subspace kk = sum(lim.k_minus, lim.k_plus);
  Subspace wide = intersect(sum(lim.k_minus, lim.d_plus), sum(lim.d_minus, lim.k_plus));
  out.alternative_dim = wide.dim() - kk.dim();
  return out;
}

RelationLawReport check_relation_laws(const LinearRelation& r) {
  RelationLawReport rep;
  RelationLimits lim = limits(r);
  rep.d_plus_law = lim.d_plus == sum(lim.d, lim.k_plus);
  rep.d_minus_law = lim.d_minus == sum(lim.k_minus, lim.d);
  Subspace a = intersect(lim.k_minus, lim.d_plus);
  Subspace b = intersect(lim.k_minus, lim.k_plus);
  Subspace c = intersect(lim.d_minus, lim.k_plus);
  rep.k_intersections = a == b && b == c;
  rep.chain_inclusions = lim.d_minus.contains(lim.k_minus) && lim.d_plus.contains(lim.k_plus);

  LinearRelation reg = regular_relation(r, lim);
  std::size_t k = reg.dim_src();
  RelationParts p = parts(reg);
  rep.regular_is_isomorphism = p.dom.dim() == k && p.img.dim() == k && p.ker.dim() == 0 && p.mul.dim() == 0;
  Subspace kk = sum(lim.k_minus, lim.k_plus);
  Subspace wide = intersect(sum(lim.k_minus, lim.d_plus), sum(lim.d_minus, lim.k_plus));
  rep.alternative_presentation = wide.dim() - kk.dim() == k && wide.contains(kk);
  return rep;
}

LinearRelation relation_from_cycle(const std::vector<Matrix>& alpha, const std::vector<Matrix>& beta) {
  std::size_t m = alpha.size();
  if (m == 0 || beta.size() != m) throw std::invalid_argument("relation_from_cycle: need m >= 1 alpha/beta pairs");
  LinearRelation out;
  for (std::size_t i = 0; i < m; ++i) {
    if (alpha[i].rows() != beta[i].rows())
      throw std::invalid_argument("relation_from_cycle: alpha_i and beta_i must share a target");
    LinearRelation step = LinearRelation::from_equalizer(alpha[i], beta[i]);
    out = i == 0 ? step : compose(step, out);
  }
  if (out.dim_src() != out.dim_dst()) throw std::invalid_argument("relation_from_cycle: cycle does not close up");
  return out;
}

}  // namespace tame
