#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "tame/config.hpp"
#include "tame/decompose.hpp"
#include "tame/diagram.hpp"
#include "tame/json_io.hpp"
#include "tame/relation.hpp"

using namespace tame;

namespace {

struct CliConfig {
  std::string input;
  std::string field;
  std::optional<int> degree;
  std::string format = "json";
  double from = 0;
  double to = 0;
  std::string twist;
};

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

std::optional<Field> field_override(const CliConfig& c) {
  if (c.field.empty()) return std::nullopt;
  return field_from_flag(c.field);
}

void print_form(std::ostream& os, const Field& f, const EndoCanonicalForm& form) {
  os << "  monodromy: dim " << form.dimension << ", char poly " << form.char_poly.to_string() << "\n";
  for (const auto& c : form.split_cells) os << "    cell (" << f.to_string(c.lambda) << ", " << c.size << ")\n";
  for (const auto& b : form.residual_blocks)
    os << "    block (" << b.poly.to_string() << ")^" << b.multiplicity << (b.irreducible ? "" : " [unfactored]") << "\n";
}

void print_codes(std::ostream& os, const BarCodes& codes) {
  os << "  bar codes:";
  if (codes.empty()) os << " none";
  for (const auto& c : codes) os << " " << c.to_string();
  os << "\n";
}

int run_decompose(const CliConfig& c) {
  RepresentationInput in = representation_from_json(read_json(c.input), field_override(c));
  Decomposition d;
  if (in.circle) {
    CircleRep rep = in.circle_rep;
    if (!c.twist.empty()) rep = twist(rep, rep.field.parse(c.twist));
    d = decompose(rep);
  } else {
    if (!c.twist.empty()) throw ValidationError("--twist needs a circle representation");
    d = decompose(in.line_rep);
  }
  if (c.format == "json") {
    std::cout << decomposition_to_json(d).dump(2) << "\n";
  } else {
    std::cout << (d.circle ? "circle" : "line") << " representation over " << d.field.name() << "\n";
    print_codes(std::cout, d.barcodes);
    if (d.circle) {
      print_form(std::cout, d.field, d.form);
      for (const auto& rec : d.transcript) {
        std::cout << "  " << rec.label() << ": " << rec.dim_before << " -> " << rec.dim_after;
        for (const auto& code : rec.eliminated) std::cout << " " << code.to_string();
        std::cout << "\n";
      }
    }
  }
  return 0;
}

int run_relation(const CliConfig& c) {
  RepresentationInput in = representation_from_json(read_json(c.input), field_override(c));
  if (!in.circle) throw ValidationError("relation needs a circle representation");
  const CircleRep& rep = in.circle_rep;
  LinearRelation rel = relation_from_cycle(rep.alpha, rep.beta);
  RegularPart reg = regular_part(rel);
  RelationLawReport laws = check_relation_laws(rel);
  if (c.format == "json") {
    json out = {{"field", field_to_json(rep.field)}, {"regular_part", regular_part_to_json(rep.field, reg)}};
    out["laws"] = {{"d_plus", laws.d_plus_law},
                   {"d_minus", laws.d_minus_law},
                   {"k_intersections", laws.k_intersections},
                   {"chain_inclusions", laws.chain_inclusions},
                   {"alternative_presentation", laws.alternative_presentation},
                   {"regular_is_isomorphism", laws.regular_is_isomorphism}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "fiber relation over " << rep.field.name() << ", regular part of dim " << reg.dim << "\n";
    print_form(std::cout, rep.field, reg.form);
    std::cout << "  laws: " << (laws.all() ? "hold" : "FAIL") << "\n";
  }
  return laws.all() ? 0 : 2;
}

bool all_pass(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

int run_analyze(const CliConfig& c) {
  TameDiagram d = diagram_from_json(read_json(c.input), field_override(c));
  InvariantReport report = analyze(d);
  std::vector<CheckResult> checks = cross_validate(d, report);
  json out = report_to_json(report, checks);
  if (!c.twist.empty()) {
    if (report.kind != DiagramKind::circle) throw ValidationError("--twist needs a circle diagram");
    Scalar u = report.field.parse(c.twist);
    if (Field::is_zero(u)) throw ValidationError("--twist must be nonzero");
    for (std::size_t r = 0; r < report.degrees.size(); ++r)
      out["degrees"][r]["twisted_homology"] = {{"u", report.field.to_string(u)},
                                               {"dim", space_homology(report, static_cast<int>(r), u)}};
  }
  if (c.degree) {
    if (*c.degree < 0 || *c.degree > report.top_degree()) throw ValidationError("--degree out of range");
    json only = json::array({out["degrees"][static_cast<std::size_t>(*c.degree)]});
    out["degrees"] = only;
  }
  if (c.format == "json") {
    std::cout << out.dump(2) << "\n";
  } else {
    bool circle = report.kind == DiagramKind::circle;
    std::cout << (circle ? "circle" : "real") << " diagram over " << report.field.name() << ", m = " << report.m << "\n";
    for (const auto& dj : out["degrees"]) {
      int r = dj["degree"].get<int>();
      const Decomposition& dec = report.degrees[static_cast<std::size_t>(r)].decomposition;
      std::cout << "degree " << r << ": betti " << dj["betti"].get<std::size_t>();
      if (circle) std::cout << ", novikov " << dj["novikov"].get<std::size_t>();
      if (dj.contains("twisted_homology"))
        std::cout << ", twisted " << dj["twisted_homology"]["dim"].get<std::size_t>();
      std::cout << "\n";
      print_codes(std::cout, dec.barcodes);
      if (circle) print_form(std::cout, report.field, dec.form);
    }
    for (const auto& ch : checks)
      std::cout << (ch.pass ? "ok   " : "FAIL ") << ch.name << (ch.detail.empty() ? "" : ": " + ch.detail) << "\n";
  }
  if (!all_pass(checks)) {
    for (const auto& ch : checks)
      if (!ch.pass) std::cerr << "check failed: " << ch.name << ": " << ch.detail << "\n";
    return 2;
  }
  return 0;
}

int run_interval(const CliConfig& c) {
  if (!c.degree) throw ValidationError("interval needs --degree");
  if (c.from > c.to) throw ValidationError("--from must not exceed --to");
  TameDiagram d = diagram_from_json(read_json(c.input), field_override(c));
  if (d.kind != DiagramKind::circle) throw ValidationError("interval needs a circle diagram");
  InvariantReport report = analyze(d);
  IntervalDims dims = interval_dims(report, c.from, c.to, *c.degree);
  if (c.format == "json") {
    json out = {{"from", c.from},
                {"to", c.to},
                {"degree", *c.degree},
                {"window", dims.window},
                {"image_cover", dims.image_cover},
                {"image_space", dims.image_space},
                {"image_space_by_dim", dims.image_space_by_dim}};
    if (dims.critical_window)
      out["critical_window"] = {dims.critical_window->first, dims.critical_window->second};
    else
      out["critical_window"] = nullptr;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "window [" << c.from << ", " << c.to << "], degree " << *c.degree << "\n"
              << "  H_r(window) " << dims.window << "\n"
              << "  image in cover " << dims.image_cover << "\n"
              << "  image in space " << dims.image_space << " (by dimension " << dims.image_space_by_dim << ")\n";
  }
  return 0;
}

int run_config(const CliConfig& c) {
  if (!c.degree) throw ValidationError("config needs --degree");
  InvariantReport report = report_from_json(read_json(c.input));
  if (*c.degree < 0 || *c.degree > report.top_degree()) throw ValidationError("--degree out of range");
  Configuration conf = configuration(report, *c.degree);
  ConfigPolynomial p = polynomial(conf);
  if (c.format == "json") {
    json out = configuration_to_json(conf, p);
    out["max_residual"] = max_relative_residual(conf, p);
    std::cout << out.dump(2) << "\n";
  } else {
    std::ostringstream os;
    os.precision(12);
    os << (conf.kind == ConfigKind::torus ? "torus" : "plane") << " configuration, degree " << conf.degree << ", "
       << conf.points.size() << " points\n";
    for (const auto& [x, y] : conf.points) os << "  (" << x << ", " << y << ")\n";
    std::cout << os.str();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bar codes and Jordan cells of tame circle- and real-valued maps"};
  app.require_subcommand(1);
  CliConfig cfg;

  auto add_common = [&](CLI::App* sub, const char* what) {
    sub->add_option("input", cfg.input, what)->required()->check(CLI::ExistingFile);
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  };

  auto* dec = app.add_subcommand("decompose", "Bar codes and monodromy of a representation");
  add_common(dec, "Representation JSON");
  dec->add_option("--field", cfg.field, "Override the field: a prime or Q");
  dec->add_option("--twist", cfg.twist, "Scale alpha_1 by u first");

  auto* ana = app.add_subcommand("analyze", "Full invariant report of a diagram");
  add_common(ana, "Diagram JSON");
  ana->add_option("--field", cfg.field, "Override the field: a prime or Q");
  ana->add_option("--degree", cfg.degree, "Report only this degree");
  ana->add_option("--twist", cfg.twist, "Also report homology twisted by u");

  auto* rel = app.add_subcommand("relation", "Regular part of the fiber relation");
  add_common(rel, "Representation JSON");
  rel->add_option("--field", cfg.field, "Override the field: a prime or Q");

  auto* itv = app.add_subcommand("interval", "Level-interval homology of the infinite cyclic cover");
  add_common(itv, "Diagram JSON");
  itv->add_option("--field", cfg.field, "Override the field: a prime or Q");
  itv->add_option("--from", cfg.from, "Window start (lifted angle)")->required();
  itv->add_option("--to", cfg.to, "Window end (lifted angle)")->required();
  itv->add_option("--degree", cfg.degree, "Homology degree")->required();

  auto* cfgc = app.add_subcommand("config", "Configuration and its polynomial from an analyze report");
  add_common(cfgc, "Report JSON written by analyze");
  cfgc->add_option("--degree", cfg.degree, "Homology degree")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (dec->parsed()) return run_decompose(cfg);
    if (ana->parsed()) return run_analyze(cfg);
    if (rel->parsed()) return run_relation(cfg);
    if (itv->parsed()) return run_interval(cfg);
    return run_config(cfg);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
