#include "tame/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "tame/relation.hpp"

namespace tame {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

long floor_div(long a, long b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0)) ? 1 : 0); }

bool same_complex(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.vertex_count() != b.vertex_count() || a.dimension() != b.dimension()) return false;
  for (int r = 0; r <= a.dimension(); ++r)
    if (a.simplices(r) != b.simplices(r)) return false;
  return true;
}

std::size_t jordan_lambda_one_cells(const Decomposition& d) { return d.cells_with_eigenvalue(Scalar(1)); }

std::size_t jordan_lambda_one_dim(const Decomposition& d) {
  std::size_t total = 0;
  for (const auto& c : d.form.split_cells)
    if (c.lambda == 1) total += static_cast<std::size_t>(c.size);
  return total;
}

/// Smallest lifted critical index whose angle is >= x (circle), or in 1..m+1 (real).
long first_at_or_above(const InvariantReport& rep, double x) {
  long m = static_cast<long>(rep.m);
  bool circle = rep.kind == DiagramKind::circle;
  if (!circle) {
    for (long j = 1; j <= m; ++j)
      if (rep.critical_angles[static_cast<std::size_t>(j - 1)] >= x) return j;
    return m + 1;
  }
  long j = m * static_cast<long>(std::floor((x - rep.critical_angles.front()) / kTwoPi)) + 1 - m;
  while (lifted_angle(rep.critical_angles, j, true) < x) ++j;
  return j;
}

/// Vertex of the level x: 2j at a critical value, 2j-1 just below it.
long vertex_of(const InvariantReport& rep, double x) {
  long j = first_at_or_above(rep, x);
  bool circle = rep.kind == DiagramKind::circle;
  if (!circle && j > static_cast<long>(rep.m)) return 2 * j - 1;
  return lifted_angle(rep.critical_angles, j, circle) == x ? 2 * j : 2 * j - 1;
}

const BarCodes& codes_in(const InvariantReport& rep, int r) {
  static const BarCodes none;
  const DegreeReport* d = rep.degree(r);
  return d ? d->decomposition.barcodes : none;
}

/// Calls fn(start, end) for each translate of the code meeting [ws, we].
template <class Fn>
void for_each_translate(const BarCode& c, long m, long ws, long we, Fn&& fn) {
  long cs = c.start_vertex(), ce = c.end_vertex(), period = 2 * m;
  long t_lo = -floor_div(ce - ws, period);
  long t_hi = floor_div(we - cs, period);
  for (long t = t_lo; t <= t_hi; ++t) {
    long s = cs + period * t, e = ce + period * t;
    if (e >= ws && s <= we) fn(s, e);
  }
}

bool is_even(long v) { return ((v % 2) + 2) % 2 == 0; }

std::string invariant_factor_list(const EndoCanonicalForm& f) {
  std::string s = "[";
  for (std::size_t i = 0; i < f.invariant_factors.size(); ++i) s += (i ? ", " : "") + f.invariant_factors[i].to_string();
  return s + "]";
}

CheckResult check(std::string name, std::size_t lhs, std::size_t rhs) {
  return {std::move(name), lhs == rhs, std::to_string(lhs) + " vs " + std::to_string(rhs)};
}

}  // namespace

void TameDiagram::validate() const {
  std::size_t mm = m();
  if (mm == 0) throw std::invalid_argument("diagram: need at least one critical angle");
  bool circle = kind == DiagramKind::circle;
  std::size_t n_regular = circle ? mm : mm + 1;
  if (fibers_X.size() != mm || fibers_R.size() != n_regular || maps_a.size() != mm || maps_b.size() != mm)
    throw std::invalid_argument("diagram: expected " + std::to_string(mm) + " critical fibers and maps, " +
                                std::to_string(n_regular) + " regular fibers");
  if (!regular_angles.empty() && regular_angles.size() != n_regular)
    throw std::invalid_argument("diagram: expected " + std::to_string(n_regular) + " regular angles");
  for (std::size_t i = 1; i < mm; ++i)
    if (!(critical_angles[i - 1] < critical_angles[i])) throw std::invalid_argument("diagram: critical angles must increase");
  if (circle && (critical_angles.front() <= 0 || critical_angles.back() > kTwoPi))
    throw std::invalid_argument("diagram: critical angles must lie in (0, 2pi]");
  if (!regular_angles.empty()) {
    // theta_1 < t_1 < theta_2 < ... < theta_m < t_m (real: t_0 first).
    std::vector<double> seq;
    std::size_t off = circle ? 0 : 1;
    if (!circle) seq.push_back(regular_angles[0]);
    for (std::size_t i = 0; i < mm; ++i) {
      seq.push_back(critical_angles[i]);
      seq.push_back(regular_angles[i + off]);
    }
    for (std::size_t i = 1; i < seq.size(); ++i)
      if (!(seq[i - 1] < seq[i])) throw std::invalid_argument("diagram: critical and regular angles must interleave");
    if (circle && !(regular_angles.back() > kTwoPi && regular_angles.back() < critical_angles.front() + kTwoPi))
      throw std::invalid_argument("diagram: t_m must satisfy 2pi < t_m < theta_1 + 2pi");
  }
  for (std::size_t i = 0; i < mm; ++i) {
    const SimplicialComplex& x = fibers_X[i];
    const SimplicialComplex& ra = fibers_R[i];
    const SimplicialComplex& rb = fibers_R[circle ? (i + 1) % mm : i + 1];
    if (!same_complex(maps_a[i].source(), ra) || !same_complex(maps_a[i].target(), x))
      throw std::invalid_argument("diagram: map a_" + std::to_string(i + 1) + " has the wrong source or target");
    if (!same_complex(maps_b[i].source(), rb) || !same_complex(maps_b[i].target(), x))
      throw std::invalid_argument("diagram: map b_" + std::to_string(i + 1) + " has the wrong source or target");
  }
}

int TameDiagram::max_fiber_dimension() const {
  int top = 0;
  for (const auto& k : fibers_X) top = std::max(top, k.dimension());
  for (const auto& k : fibers_R) top = std::max(top, k.dimension());
  return top;
}

const DegreeReport* InvariantReport::degree(int r) const {
  if (r < 0 || r >= static_cast<int>(degrees.size())) return nullptr;
  return &degrees[static_cast<std::size_t>(r)];
}

double lifted_angle(const std::vector<double>& critical, long j, bool circle) {
  long m = static_cast<long>(critical.size());
  if (!circle) {
    if (j < 1) return -std::numeric_limits<double>::infinity();
    if (j > m) return std::numeric_limits<double>::infinity();
    return critical[static_cast<std::size_t>(j - 1)];
  }
  long k = floor_div(j - 1, m);
  return critical[static_cast<std::size_t>(j - 1 - k * m)] + kTwoPi * static_cast<double>(k);
}

std::string AngleCode::to_string() const {
  std::ostringstream os;
  os << (left_closed ? "[" : "(") << left << ", " << right << (right_closed ? "]" : ")");
  return os.str();
}

AngleCode to_angles(const InvariantReport& report, const BarCode& code) {
  bool circle = report.kind == DiagramKind::circle;
  return {lifted_angle(report.critical_angles, code.left, circle), lifted_angle(report.critical_angles, code.right_abs, circle),
          code.left_closed, code.right_closed};
}

CircleRep build_circle_representation(const TameDiagram& d, int r) {
  if (d.kind != DiagramKind::circle) throw std::invalid_argument("build_circle_representation: circle diagrams only");
  CircleRep rep;
  rep.field = d.field;
  rep.m = d.m();
  for (std::size_t i = 0; i < rep.m; ++i) {
    rep.n.push_back(betti(d.field, d.fibers_R[i], r));
    rep.r.push_back(betti(d.field, d.fibers_X[i], r));
    rep.alpha.push_back(induced_map(d.field, d.maps_a[i], r));
    rep.beta.push_back(induced_map(d.field, d.maps_b[i], r));
  }
  rep.validate();
  return rep;
}

ZRep build_line_representation(const TameDiagram& d, int r) {
  if (d.kind != DiagramKind::real) throw std::invalid_argument("build_line_representation: real diagrams only");
  std::size_t m = d.m();
  ZRep rep;
  rep.field = d.field;
  rep.lo = 0;
  rep.hi = static_cast<long>(m) + 1;
  rep.r.push_back(0);
  for (std::size_t i = 0; i < m; ++i) rep.r.push_back(betti(d.field, d.fibers_X[i], r));
  rep.r.push_back(0);
  for (std::size_t k = 0; k <= m; ++k) rep.n.push_back(betti(d.field, d.fibers_R[k], r));
  for (std::size_t k = 0; k <= m; ++k) {
    rep.alpha.push_back(k < m ? induced_map(d.field, d.maps_a[k], r) : Matrix::zero(d.field, 0, rep.n[k]));
    rep.beta.push_back(k > 0 ? induced_map(d.field, d.maps_b[k - 1], r) : Matrix::zero(d.field, 0, rep.n[k]));
  }
  rep.validate();
  return rep;
}

InvariantReport analyze(const TameDiagram& d, CoverKernel kernel) {
  d.validate();
  InvariantReport rep;
  rep.kind = d.kind;
  rep.field = d.field;
  rep.m = d.m();
  rep.critical_angles = d.critical_angles;
  int top = d.max_fiber_dimension() + 1;
  for (int r = 0; r <= top; ++r) {
    DegreeReport dr;
    dr.degree = r;
    if (d.kind == DiagramKind::circle) {
      dr.circle = build_circle_representation(d, r);
      dr.decomposition = decompose(dr.circle, kernel);
      dr.kernel = dker_dcoker(dr.circle);
    } else {
      dr.line = build_line_representation(d, r);
      dr.decomposition = decompose(dr.line, kernel);
      dr.kernel = dker_dcoker(dr.line);
    }
    rep.degrees.push_back(std::move(dr));
  }
  return rep;
}

std::size_t space_homology(const InvariantReport& report, int r, const Scalar& u) {
  if (r < 0) return 0;
  Scalar uc = report.field.canonical(u);
  if (Field::is_zero(uc)) throw std::invalid_argument("space_homology: u must be nonzero");
  auto part = [&](int deg) -> KerCoker {
    const DegreeReport* d = report.degree(deg);
    if (!d) return {};
    if (report.kind == DiagramKind::real) {
      if (uc != 1) throw std::invalid_argument("space_homology: twisted coefficients need a circle-valued map");
      return d->kernel;
    }
    return dker_dcoker(twist(d->circle, uc));
  };
  return part(r).dcoker + part(r - 1).dker;
}

std::vector<std::size_t> fiber_dims(const InvariantReport& report, double theta) {
  long v = vertex_of(report, theta);
  std::vector<std::size_t> out;
  for (const auto& d : report.degrees) out.push_back(decomposition_vertex_dim(d.decomposition, v));
  return out;
}

std::vector<NovikovEntry> novikov_numbers(const InvariantReport& report) {
  std::vector<NovikovEntry> out;
  for (const auto& d : report.degrees) {
    NovikovEntry e;
    e.degree = d.degree;
    std::size_t open_below = 0;
    if (const DegreeReport* prev = report.degree(d.degree - 1)) open_below = prev->decomposition.count_open();
    e.rank = d.decomposition.count_closed() + open_below;
    e.torsion_dim = d.decomposition.jordan_dim();
    e.summary = "k[T^-1,T]^" + std::to_string(e.rank);
    if (e.torsion_dim > 0)
      e.summary += " + (k^" + std::to_string(e.torsion_dim) + ", T) with invariant factors " +
                   invariant_factor_list(d.decomposition.form);
    out.push_back(std::move(e));
  }
  return out;
}

IntervalDims interval_dims(const InvariantReport& report, double a, double b, int r) {
  if (report.kind != DiagramKind::circle) throw std::invalid_argument("interval_dims: circle-valued maps only");
  if (!(a <= b)) throw std::invalid_argument("interval_dims: need a <= b");
  long m = static_cast<long>(report.m);
  long p = first_at_or_above(report, a);
  long q = first_at_or_above(report, b);
  if (lifted_angle(report.critical_angles, q, true) > b) --q;
  long s = vertex_of(report, a);
  long e = lifted_angle(report.critical_angles, q, true) == b ? 2 * q : 2 * q + 1;

  IntervalDims out;
  const DegreeReport* cur = report.degree(r);
  std::size_t jdim = cur ? cur->decomposition.jordan_dim() : 0;
  const BarCodes& codes = codes_in(report, r);
  const BarCodes& below = codes_in(report, r - 1);
  bool has_critical = p <= q;
  if (has_critical) out.critical_window = std::make_pair(p, q);
  long ws = 2 * p, we = 2 * q;

  std::size_t window = 0, image_cover = 0, image_space = 0;
  for (const auto& c : codes) {
    bool meets_closed = false;
    if (has_critical)
      for_each_translate(c, m, ws, we, [&](long cs, long ce) {
        if (is_even(std::max(cs, ws)) && is_even(std::min(ce, we))) ++window;
      });
    else
      for_each_translate(c, m, s, s, [&](long, long) { ++window; });
    if (c.is_closed())
      for_each_translate(c, m, s, e, [&](long, long) {
        ++image_cover;
        meets_closed = true;
      });
    if (meets_closed) ++image_space;
  }
  if (has_critical)
    for (const auto& c : below) {
      if (!c.is_open()) continue;
      bool inside_any = false;
      for_each_translate(c, m, ws, we, [&](long cs, long ce) {
        if (cs >= ws && ce <= we) {
          ++window;
          ++image_cover;
          inside_any = true;
        }
      });
      if (inside_any) ++image_space;
    }
  out.window = window + jdim;
  out.image_cover = image_cover + jdim;
  std::size_t lambda_cells = cur ? jordan_lambda_one_cells(cur->decomposition) : 0;
  std::size_t lambda_dim = cur ? jordan_lambda_one_dim(cur->decomposition) : 0;
  out.image_space = image_space + lambda_cells;
  out.image_space_by_dim = image_space + lambda_dim;
  return out;
}

std::vector<CheckResult> cross_validate(const TameDiagram& d, const InvariantReport& report) {
  std::vector<CheckResult> out;
  bool circle = report.kind == DiagramKind::circle;
  long m = static_cast<long>(report.m);
  for (const auto& dr : report.degrees) {
    const Decomposition& dec = dr.decomposition;
    std::string tag = " degree " + std::to_string(dr.degree);
    const DegreeReport* prev = report.degree(dr.degree - 1);

    // Vertex dimensions against the summands.
    bool dims_ok = true;
    std::string first_bad;
    if (circle) {
      for (long v = 1; v <= 2 * m && dims_ok; ++v) {
        std::size_t want = v % 2 == 1 ? dr.circle.n[static_cast<std::size_t>(v / 2)] : dr.circle.r[static_cast<std::size_t>(v / 2 - 1)];
        if (decomposition_vertex_dim(dec, v) != want) {
          dims_ok = false;
          first_bad = "vertex " + std::to_string(v);
        }
      }
    } else {
      Zigzag z = Zigzag::from(dr.line);
      for (long v = z.first(); v <= z.last() && dims_ok; ++v)
        if (decomposition_vertex_dim(dec, v) != z.dim(v)) {
          dims_ok = false;
          first_bad = "vertex " + std::to_string(v);
        }
    }
    out.push_back({"fiber dimensions" + tag, dims_ok, dims_ok ? "all vertices" : first_bad});

    bool same_rep;
    if (circle) {
      CircleRep again = build_circle_representation(d, dr.degree);
      same_rep = again.alpha == dr.circle.alpha && again.beta == dr.circle.beta;
    } else {
      ZRep again = build_line_representation(d, dr.degree);
      same_rep = again.alpha == dr.line.alpha && again.beta == dr.line.beta;
    }
    out.push_back({"representation" + tag, same_rep, same_rep ? "rebuilt from the diagram" : "differs from the diagram"});

    if (circle) {
      RegularPart reg = regular_part(relation_from_cycle(dr.circle.alpha, dr.circle.beta));
      bool p1 = reg.dim == dec.jordan_dim() && reg.form.similar_to(dec.form);
      out.push_back({"relation monodromy" + tag, p1,
                     invariant_factor_list(reg.form) + " vs " + invariant_factor_list(dec.form)});

      std::size_t eliminated = 0;
      for (const auto& rec : dec.transcript) eliminated += rec.eliminated.size();
      out.push_back(check("transform transcript" + tag, eliminated, dec.barcodes.size()));

      bool resolved = std::all_of(dec.form.residual_blocks.begin(), dec.form.residual_blocks.end(),
                                  [](const ResidualBlock& b) { return b.irreducible; });
      if (resolved) {
        std::size_t ones = jordan_lambda_one_cells(dec);
        out.push_back(check("kernel census" + tag, dr.kernel.dker, dec.count_open() + ones));
        out.push_back(check("cokernel census" + tag, dr.kernel.dcoker, dec.count_closed() + ones));
        std::size_t ones_prev = prev ? jordan_lambda_one_cells(prev->decomposition) : 0;
        std::size_t open_prev = prev ? prev->decomposition.count_open() : 0;
        std::size_t betti_r = space_homology(report, dr.degree, Scalar(1));
        out.push_back(check("total homology" + tag, betti_r, dec.count_closed() + open_prev + ones + ones_prev));
        out.push_back(check("Novikov rank" + tag, betti_r - ones - ones_prev, dec.count_closed() + open_prev));
      }
    } else {
      out.push_back(check("kernel census" + tag, dr.kernel.dker, dec.count_open()));
      out.push_back(check("cokernel census" + tag, dr.kernel.dcoker, dec.count_closed()));
      std::size_t open_prev = prev ? prev->decomposition.count_open() : 0;
      out.push_back(check("total homology" + tag, space_homology(report, dr.degree, Scalar(1)), dec.count_closed() + open_prev));
    }
  }
  return out;
}

}  // namespace tame
