#include "tame/json_io.hpp"

#include <cmath>
#include <stdexcept>

namespace tame {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

const json& need(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::vector<std::size_t> dims_from_json(const json& j, const char* key) {
  const json& a = need(j, key);
  if (!a.is_array()) fail(std::string("\"") + key + "\" must be an array");
  std::vector<std::size_t> out;
  for (const auto& v : a) {
    if (!v.is_number_integer() || v.get<long long>() < 0) fail(std::string("\"") + key + "\" must hold nonnegative integers");
    out.push_back(v.get<std::size_t>());
  }
  return out;
}

std::vector<double> angles_from_json(const json& j, const char* key) {
  std::vector<double> out;
  if (!j.contains(key)) return out;
  for (const auto& v : j.at(key)) {
    if (!v.is_number()) fail(std::string("\"") + key + "\" must hold numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

json angle_to_json(double x) {
  if (std::isinf(x)) return x < 0 ? "-inf" : "inf";
  return x;
}

const json& list_entry(const json& list, std::size_t i, const char* key) {
  if (!list.is_array() || list.size() <= i) fail(std::string("\"") + key + "\" has too few entries");
  return list.at(i);
}

}  // namespace

Field field_from_json(const json& j) {
  if (j.is_string()) return field_from_flag(j.get<std::string>());
  if (j.is_object() && j.contains("prime")) {
    const json& p = j.at("prime");
    if (!p.is_number_integer()) fail("field prime must be an integer");
    return Field::prime(p.get<std::int64_t>());
  }
  if (j.is_number_integer()) return Field::prime(j.get<std::int64_t>());
  fail("field must be {\"prime\": p} or \"Q\"");
}

json field_to_json(const Field& f) {
  if (f.is_rational()) return "Q";
  return json{{"prime", f.characteristic()}};
}

Field field_from_flag(const std::string& text) {
  if (text == "Q" || text == "q") return Field::rationals();
  std::string digits = text;
  if (digits.rfind("GF(", 0) == 0 && digits.back() == ')') digits = digits.substr(3, digits.size() - 4);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    fail("field must be a prime or Q, got \"" + text + "\"");
  if (digits.size() > 12) fail("field prime too large: " + text);
  return Field::prime(std::stoll(digits));
}

Scalar scalar_from_json(const Field& f, const json& j) {
  if (j.is_number_integer()) return f.from_mpz(mpz_class(std::to_string(j.get<long long>())));
  if (j.is_string()) return f.parse(j.get<std::string>());
  fail("matrix entries must be integers or \"a/b\" strings");
}

json scalar_to_json(const Field& f, const Scalar& s) {
  if (s.get_den() == 1 && s.get_num().fits_slong_p()) return s.get_num().get_si();
  return f.to_string(s);
}

Matrix matrix_from_json(const Field& f, const json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array()) fail("matrix must be an array");
  std::vector<Scalar> entries;
  bool nested = !j.empty() && j.front().is_array();
  if (nested) {
    if (j.size() != rows) fail("matrix has " + std::to_string(j.size()) + " rows, expected " + std::to_string(rows));
    for (const auto& row : j) {
      if (!row.is_array() || row.size() != cols) fail("matrix row has the wrong length, expected " + std::to_string(cols));
      for (const auto& v : row) entries.push_back(scalar_from_json(f, v));
    }
  } else {
    if (j.size() != rows * cols)
      fail("matrix has " + std::to_string(j.size()) + " entries, expected " + std::to_string(rows) + "x" + std::to_string(cols));
    for (const auto& v : j) entries.push_back(scalar_from_json(f, v));
  }
  return Matrix::from_rows(f, rows, cols, entries);
}

json matrix_to_json(const Matrix& m) {
  json out = json::array();
  for (const auto& v : m.data()) out.push_back(scalar_to_json(m.field(), v));
  return out;
}

RepresentationInput representation_from_json(const json& j, const std::optional<Field>& field_override) {
  Field f = field_override ? *field_override : field_from_json(need(j, "field"));
  std::string kind = j.value("kind", std::string("circle"));
  RepresentationInput in;
  std::vector<std::size_t> n = dims_from_json(j, "n"), r = dims_from_json(j, "r");
  const json& alpha = need(j, "alpha");
  const json& beta = need(j, "beta");
  if (kind == "circle") {
    in.circle = true;
    CircleRep& rep = in.circle_rep;
    rep.field = f;
    rep.m = need(j, "m").get<std::size_t>();
    if (n.size() != rep.m || r.size() != rep.m) fail("\"n\" and \"r\" need m entries each");
    rep.n = n;
    rep.r = r;
    for (std::size_t i = 0; i < rep.m; ++i) {
      rep.alpha.push_back(matrix_from_json(f, list_entry(alpha, i, "alpha"), r[i], n[i]));
      rep.beta.push_back(matrix_from_json(f, list_entry(beta, i, "beta"), r[i], n[(i + 1) % rep.m]));
    }
    rep.validate();
  } else if (kind == "line") {
    in.circle = false;
    ZRep& rep = in.line_rep;
    rep.field = f;
    const json& support = need(j, "support");
    if (!support.is_array() || support.size() != 2) fail("\"support\" must be [lo, hi]");
    rep.lo = support[0].get<long>();
    rep.hi = support[1].get<long>();
    if (rep.hi < rep.lo) fail("\"support\" needs lo <= hi");
    std::size_t len = static_cast<std::size_t>(rep.hi - rep.lo);
    if (n.size() != len || r.size() != len + 1) fail("\"n\" needs hi-lo entries and \"r\" hi-lo+1");
    rep.n = n;
    rep.r = r;
    for (std::size_t k = 0; k < len; ++k) {
      rep.alpha.push_back(matrix_from_json(f, list_entry(alpha, k, "alpha"), r[k + 1], n[k]));
      rep.beta.push_back(matrix_from_json(f, list_entry(beta, k, "beta"), r[k], n[k]));
    }
    rep.validate();
  } else {
    fail("\"kind\" must be \"circle\" or \"line\"");
  }
  return in;
}

json representation_to_json(const CircleRep& rep) {
  json a = json::array(), b = json::array();
  for (const auto& m : rep.alpha) a.push_back(matrix_to_json(m));
  for (const auto& m : rep.beta) b.push_back(matrix_to_json(m));
  return {{"field", field_to_json(rep.field)}, {"kind", "circle"}, {"m", rep.m}, {"n", rep.n}, {"r", rep.r}, {"alpha", a}, {"beta", b}};
}

json representation_to_json(const ZRep& rep) {
  json a = json::array(), b = json::array();
  for (const auto& m : rep.alpha) a.push_back(matrix_to_json(m));
  for (const auto& m : rep.beta) b.push_back(matrix_to_json(m));
  return {{"field", field_to_json(rep.field)}, {"kind", "line"}, {"support", {rep.lo, rep.hi}},
          {"n", rep.n}, {"r", rep.r}, {"alpha", a}, {"beta", b}};
}

SimplicialComplex complex_from_json(const json& j) {
  const json& v = need(j, "vertices");
  if (!v.is_number_integer() || v.get<long long>() < 0) fail("\"vertices\" must be a nonnegative integer");
  std::vector<Simplex> simplices;
  if (j.contains("simplices"))
    for (const auto& s : j.at("simplices")) {
      Simplex simplex;
      for (const auto& x : s) {
        if (!x.is_number_integer() || x.get<long long>() < 0) fail("simplex vertices must be nonnegative integers");
        simplex.push_back(x.get<std::size_t>());
      }
      simplices.push_back(std::move(simplex));
    }
  return {v.get<std::size_t>(), simplices};
}

json complex_to_json(const SimplicialComplex& k) {
  json s = json::array();
  // Maximal simplices are enough; faces are closed on reading.
  for (int r = 1; r <= k.dimension(); ++r)
    for (const auto& simplex : k.simplices(r)) s.push_back(simplex);
  return {{"vertices", k.vertex_count()}, {"simplices", s}};
}

SimplicialMap map_from_json(const json& j, const SimplicialComplex& source, const SimplicialComplex& target) {
  std::vector<std::size_t> vm;
  for (const auto& x : need(j, "vertex_map")) {
    if (!x.is_number_integer() || x.get<long long>() < 0) fail("\"vertex_map\" must hold nonnegative integers");
    vm.push_back(x.get<std::size_t>());
  }
  return {source, target, std::move(vm)};
}

TameDiagram diagram_from_json(const json& j, const std::optional<Field>& field_override) {
  TameDiagram d;
  std::string kind = j.value("kind", std::string("circle"));
  if (kind == "circle")
    d.kind = DiagramKind::circle;
  else if (kind == "real")
    d.kind = DiagramKind::real;
  else
    fail("\"kind\" must be \"circle\" or \"real\"");
  d.field = field_override ? *field_override : field_from_json(need(j, "field"));
  d.critical_angles = angles_from_json(j, "critical_angles");
  d.regular_angles = angles_from_json(j, "regular_angles");
  if (d.critical_angles.empty()) fail("\"critical_angles\" must be a nonempty array");
  for (const auto& c : need(j, "fibers_X")) d.fibers_X.push_back(complex_from_json(c));
  for (const auto& c : need(j, "fibers_R")) d.fibers_R.push_back(complex_from_json(c));
  std::size_t m = d.critical_angles.size();
  bool circle = d.kind == DiagramKind::circle;
  std::size_t n_regular = circle ? m : m + 1;
  if (d.fibers_X.size() != m || d.fibers_R.size() != n_regular)
    fail("expected " + std::to_string(m) + " critical and " + std::to_string(n_regular) + " regular fibers");
  const json& ma = need(j, "maps_a");
  const json& mb = need(j, "maps_b");
  for (std::size_t i = 0; i < m; ++i) {
    d.maps_a.push_back(map_from_json(list_entry(ma, i, "maps_a"), d.fibers_R[i], d.fibers_X[i]));
    d.maps_b.push_back(map_from_json(list_entry(mb, i, "maps_b"), d.fibers_R[circle ? (i + 1) % m : i + 1], d.fibers_X[i]));
  }
  d.validate();
  return d;
}

json diagram_to_json(const TameDiagram& d) {
  json fx = json::array(), fr = json::array(), ma = json::array(), mb = json::array();
  for (const auto& k : d.fibers_X) fx.push_back(complex_to_json(k));
  for (const auto& k : d.fibers_R) fr.push_back(complex_to_json(k));
  for (const auto& f : d.maps_a) ma.push_back({{"vertex_map", f.vertex_map()}});
  for (const auto& f : d.maps_b) mb.push_back({{"vertex_map", f.vertex_map()}});
  return {{"kind", d.kind == DiagramKind::circle ? "circle" : "real"},
          {"field", field_to_json(d.field)},
          {"critical_angles", d.critical_angles},
          {"regular_angles", d.regular_angles},
          {"fibers_X", fx},
          {"fibers_R", fr},
          {"maps_a", ma},
          {"maps_b", mb}};
}

json barcode_to_json(const BarCode& c) {
  return {{"left", c.left}, {"right", c.right_abs}, {"left_closed", c.left_closed}, {"right_closed", c.right_closed},
          {"text", c.to_string()}};
}

json canonical_form_to_json(const Field& f, const EndoCanonicalForm& form) {
  json inv = json::array(), cells = json::array(), residual = json::array();
  for (const auto& p : form.invariant_factors) inv.push_back(p.to_string());
  for (const auto& c : form.split_cells) cells.push_back({{"lambda", scalar_to_json(f, c.lambda)}, {"size", c.size}});
  for (const auto& b : form.residual_blocks)
    residual.push_back({{"poly", b.poly.to_string()}, {"multiplicity", b.multiplicity}, {"irreducible", b.irreducible}});
  return {{"dimension", form.dimension},
          {"char_poly", form.char_poly.to_string()},
          {"invariant_factors", inv},
          {"jordan_cells", cells},
          {"residual_blocks", residual}};
}

json decomposition_to_json(const Decomposition& d) {
  json codes = json::array();
  for (const auto& c : d.barcodes) codes.push_back(barcode_to_json(c));
  json out = {{"field", field_to_json(d.field)}, {"kind", d.circle ? "circle" : "line"}, {"barcodes", codes}};
  if (d.circle) {
    out["m"] = d.m;
    json mono = canonical_form_to_json(d.field, d.form);
    mono["matrix"] = matrix_to_json(d.monodromy);
    out["monodromy"] = mono;
    json steps = json::array();
    for (const auto& rec : d.transcript) {
      json gone = json::array();
      for (const auto& c : rec.eliminated) gone.push_back(c.to_string());
      steps.push_back({{"transform", rec.label()}, {"eliminated", gone}, {"dim_before", rec.dim_before}, {"dim_after", rec.dim_after}});
    }
    out["transcript"] = steps;
  }
  return out;
}

json regular_part_to_json(const Field& f, const RegularPart& reg) {
  json out = canonical_form_to_json(f, reg.form);
  out["matrix"] = matrix_to_json(reg.map);
  out["alternative_dimension"] = reg.alternative_dim;
  return out;
}

json configuration_to_json(const Configuration& c, const ConfigPolynomial& p) {
  json pts = json::array(), poly = json::array();
  for (const auto& [x, y] : c.points) pts.push_back({x, y});
  for (const auto& z : p.coeffs) poly.push_back({z.real(), z.imag()});
  return {{"degree", c.degree}, {"kind", c.kind == ConfigKind::torus ? "torus" : "plane"}, {"points", pts}, {"poly", poly}};
}

json checks_to_json(const std::vector<CheckResult>& checks) {
  json out = json::array();
  for (const auto& c : checks) out.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return out;
}

json report_to_json(const InvariantReport& report, const std::vector<CheckResult>& checks) {
  bool circle = report.kind == DiagramKind::circle;
  json degrees = json::array();
  std::vector<NovikovEntry> nov = circle ? novikov_numbers(report) : std::vector<NovikovEntry>{};
  json betti = json::array(), novikov = json::array();
  for (const auto& dr : report.degrees) {
    const Decomposition& dec = dr.decomposition;
    json codes = json::array();
    for (const auto& c : dec.barcodes) {
      json cj = barcode_to_json(c);
      AngleCode a = to_angles(report, c);
      cj["angles"] = {angle_to_json(a.left), angle_to_json(a.right)};
      codes.push_back(cj);
    }
    json entry = {{"degree", dr.degree},
                  {"n", circle ? dr.circle.n : dr.line.n},
                  {"r", circle ? dr.circle.r : dr.line.r},
                  {"barcodes", codes},
                  {"closed", dec.count_closed()},
                  {"open", dec.count_open()},
                  {"mixed", dec.count_mixed()},
                  {"dker", dr.kernel.dker},
                  {"dcoker", dr.kernel.dcoker}};
    std::size_t b = space_homology(report, dr.degree, Scalar(1));
    entry["betti"] = b;
    betti.push_back(b);
    if (circle) {
      json mono = canonical_form_to_json(report.field, dec.form);
      mono["matrix"] = matrix_to_json(dec.monodromy);
      entry["monodromy"] = mono;
      const NovikovEntry& ne = nov[static_cast<std::size_t>(dr.degree)];
      entry["novikov"] = ne.rank;
      entry["cover_homology"] = ne.summary;
      novikov.push_back(ne.rank);
    }
    Configuration conf = configuration(report, dr.degree);
    entry["configuration"] = configuration_to_json(conf, polynomial(conf));
    degrees.push_back(entry);
  }
  json out = {{"kind", circle ? "circle" : "real"},
              {"field", field_to_json(report.field)},
              {"m", report.m},
              {"critical_angles", report.critical_angles},
              {"degrees", degrees},
              {"betti", betti}};
  if (circle) out["novikov"] = novikov;
  out["checks"] = checks_to_json(checks);
  bool ok = true;
  for (const auto& c : checks) ok = ok && c.pass;
  out["consistent"] = ok;
  return out;
}

InvariantReport report_from_json(const json& j) {
  InvariantReport rep;
  std::string kind = need(j, "kind").get<std::string>();
  if (kind != "circle" && kind != "real") fail("report \"kind\" must be \"circle\" or \"real\"");
  rep.kind = kind == "circle" ? DiagramKind::circle : DiagramKind::real;
  rep.field = field_from_json(need(j, "field"));
  rep.m = need(j, "m").get<std::size_t>();
  rep.critical_angles = angles_from_json(j, "critical_angles");
  if (rep.critical_angles.size() != rep.m) fail("report needs m critical angles");
  for (const auto& dj : need(j, "degrees")) {
    DegreeReport dr;
    dr.degree = need(dj, "degree").get<int>();
    if (dr.degree != static_cast<int>(rep.degrees.size())) fail("report degrees must be listed in order from 0");
    dr.decomposition.field = rep.field;
    dr.decomposition.circle = rep.kind == DiagramKind::circle;
    dr.decomposition.m = rep.kind == DiagramKind::circle ? rep.m : 0;
    dr.decomposition.monodromy = Matrix::zero(rep.field, 0, 0);
    for (const auto& cj : need(dj, "barcodes")) {
      BarCode c;
      c.left = need(cj, "left").get<long>();
      c.right_abs = need(cj, "right").get<long>();
      c.left_closed = need(cj, "left_closed").get<bool>();
      c.right_closed = need(cj, "right_closed").get<bool>();
      dr.decomposition.barcodes.push_back(c);
    }
    rep.degrees.push_back(std::move(dr));
  }
  return rep;
}

}  // namespace tame
