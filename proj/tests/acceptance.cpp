// One line per acceptance criterion; exit status is the number of failures.

#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

#include "support.hpp"
#include "tame/config.hpp"
#include "tame/decompose.hpp"
#include "tame/diagram.hpp"
#include "tame/json_io.hpp"
#include "tame/relation.hpp"
#include "tame/transform.hpp"

using namespace tame;
using testing::Rng;

namespace {

struct Outcome {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void expect(bool ok, const std::string& what) {
    ++cases;
    if (ok) return;
    if (failures++ == 0) first_failure = what;
  }
};

json fixture(const std::string& name) {
  std::ifstream in(std::string(TAME_FIXTURE_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing fixture " + name);
  return json::parse(in);
}

const BarCodes kSec7Codes{{2, 3, true, true}, {4, 5, false, false}, {6, 8, false, true}};

bool has_only_cell(const EndoCanonicalForm& f, long lambda, int k) {
  return f.residual_blocks.empty() && f.split_cells == std::vector<JordanCell>{{Scalar(lambda), k}};
}

BarCodes decompose_codes(const CircleRep& rep) { return decompose(rep).barcodes; }

std::string codes_text(const BarCodes& codes) {
  std::string s;
  for (const auto& c : codes) s += (s.empty() ? "" : " ") + c.to_string();
  return "{" + s + "}";
}

Outcome golden_quiver() {
  Outcome o;
  Decomposition d1 = decompose(representation_from_json(fixture("worked_rho1.json")).circle_rep);
  o.expect(d1.barcodes == kSec7Codes, "rho_1 codes " + codes_text(d1.barcodes));
  o.expect(has_only_cell(d1.form, 2, 2), "rho_1 monodromy");
  Decomposition d0 = decompose(representation_from_json(fixture("worked_rho0.json")).circle_rep);
  o.expect(d0.barcodes.empty(), "rho_0 has codes");
  o.expect(has_only_cell(d0.form, 1, 1), "rho_0 monodromy");
  return o;
}

Outcome golden_relation() {
  Outcome o;
  CircleRep w = representation_from_json(fixture("worked_relation.json")).circle_rep;
  RegularPart reg = regular_part(LinearRelation::from_equalizer(w.alpha[0], w.beta[0]));
  o.expect(reg.dim == 2, "regular part dimension " + std::to_string(reg.dim));
  EndoCanonicalForm t22 = canonical_form(jordan_cell_matrix(Field::rationals(), Scalar(2), 2));
  o.expect(reg.form.invariant_factors == t22.invariant_factors, "invariant factors differ from T(2,2)");
  CircleRep rho1 = representation_from_json(fixture("worked_rho1.json")).circle_rep;
  o.expect(reg.form.similar_to(decompose(rho1).form), "relation and quiver monodromy differ");
  o.expect(regular_part(relation_from_cycle(rho1.alpha, rho1.beta)).form.similar_to(t22), "cycle relation of rho_1");
  return o;
}

Outcome golden_transcript() {
  Outcome o;
  CircleRep rho = representation_from_json(fixture("worked_rho1.json")).circle_rep;
  auto step = [&](TransformKind k, std::size_t i, BarCodes& gone) {
    TransformResult t = elementary(rho, k, i);
    gone.insert(gone.end(), t.record.eliminated.begin(), t.record.eliminated.end());
    rho = t.rep;
  };
  BarCodes g1, g2, g3;
  step(TransformKind::T1, 5, g1);
  o.expect(g1 == BarCodes{{4, 5, false, false}}, "T1(5) eliminated " + codes_text(g1));
  o.expect(decompose_codes(rho) == BarCodes({{2, 3, true, true}, {6, 8, false, true}}), "rho(1) codes");
  step(TransformKind::T3, 2, g2);
  step(TransformKind::T4, 3, g2);
  // [2,3] first loses its start (T3(2)), then the remaining point goes.
  o.expect(g2 == BarCodes{{3, 3, true, true}}, "T4(3)T3(2) eliminated " + codes_text(g2));
  o.expect(decompose_codes(rho) == BarCodes({{6, 8, false, true}}), "rho(2) codes");
  step(TransformKind::T4, 1, g3);
  step(TransformKind::T1, 7, g3);
  o.expect(g3 == BarCodes{{6, 7, false, true}}, "T1(7)T4(1) eliminated " + codes_text(g3));
  o.expect(decompose_codes(rho).empty(), "rho(3) still has codes");
  bool regular = true;
  for (std::size_t i = 0; i < rho.m; ++i) regular = regular && rho.alpha[i].is_square() && rho.beta[i].is_square();
  o.expect(regular, "rho(3) is not regular");
  if (regular) o.expect(has_only_cell(canonical_form(monodromy_of_regular(rho)), 2, 2), "rho(3) monodromy");
  o.expect(rho.alpha[6].rows() == 2, "alpha_7 of rho(3) is not 2x2");
  return o;
}

void census_checks(Outcome& o, const CircleRep& rep, const std::string& tag) {
  Decomposition d = decompose(rep);
  auto dims = testing::vertex_dims(rep);
  for (long v = 1; v <= static_cast<long>(2 * rep.m); ++v)
    o.expect(decomposition_vertex_dim(d, v) == dims[static_cast<std::size_t>(v - 1)], tag + " vertex dimension");
  if (d.form.is_split()) {
    for (long u : {1, 2, 3}) {
      Scalar uinv = rep.field.inv(Scalar(u));
      KerCoker kc = dker_dcoker(twist(rep, Scalar(u)));
      o.expect(kc.dcoker == d.count_closed() + d.cells_with_eigenvalue(uinv), tag + " cokernel census u=" + std::to_string(u));
      o.expect(kc.dker == d.count_open() + d.cells_with_eigenvalue(uinv), tag + " kernel census u=" + std::to_string(u));
    }
  }
  long m = static_cast<long>(rep.m);
  for (long i = 1; i <= m; ++i) {
    LocalCounts lc = local_counts(rep, static_cast<std::size_t>(i));
    auto mult = [&](BarCode b) {
      return static_cast<std::size_t>(std::count(d.barcodes.begin(), d.barcodes.end(), canonical_circle(b, m)));
    };
    bool ok = lc.open == mult({i, i + 1, false, false}) && lc.closed == mult({i, i, true, true}) &&
              lc.open_closed == mult({i, i + 1, false, true}) && lc.closed_open == mult({i, i + 1, true, false});
    o.expect(ok, tag + " local counts at " + std::to_string(i));
  }
  RegularPart reg = regular_part(relation_from_cycle(rep.alpha, rep.beta));
  o.expect(reg.form.invariant_factors == d.form.invariant_factors, tag + " relation monodromy");
}

Outcome census_suite() {
  Outcome o;
  Rng rng(2024);
  Field f = Field::prime(5);
  for (int t = 0; t < 200; ++t) {
    std::size_t m = testing::uniform(rng, 1, 4);
    std::string tag = "rep " + std::to_string(t);
    if (t % 2 == 0) {
      census_checks(o, testing::random_circle_rep(f, m, 4, rng), tag);
    } else {
      auto k = testing::random_known_rep(f, m, 4, rng);
      census_checks(o, k.rep, tag);
      Decomposition d = decompose(k.rep);
      o.expect(d.barcodes == k.codes, tag + " known codes");
      o.expect(d.form.similar_to(canonical_form(k.monodromy)), tag + " known monodromy");
    }
  }
  return o;
}

Outcome truncation_suite() {
  Outcome o;
  Rng rng(2025);
  Field f = Field::prime(5);
  for (int t = 0; t < 100; ++t) {
    std::size_t m = testing::uniform(rng, 1, 4);
    long mm = static_cast<long>(m);
    auto k = testing::random_known_rep(f, m, 4, rng);
    long a = testing::uniform(rng, -3, 4);
    long b = a + testing::uniform(rng, 0, 3 * mm);
    // Closed-intersection rule for every translate, plus dim J copies of [a,b].
    BarCodes expected;
    for (const auto& c : k.codes)
      for (long s = -6; s <= 6; ++s) {
        long lo = std::max(c.start_vertex() + 2 * mm * s, 2 * a), hi = std::min(c.end_vertex() + 2 * mm * s, 2 * b);
        if (lo <= hi) expected.push_back(BarCode::from_vertices(lo, hi));
      }
    for (std::size_t j = 0; j < k.monodromy.rows(); ++j) expected.push_back({a, b, true, true});
    std::sort(expected.begin(), expected.end());
    BarCodes got = decompose(unroll(k.rep, a, b)).barcodes;
    o.expect(got == expected, "window " + std::to_string(t) + ": " + codes_text(got) + " vs " + codes_text(expected));
  }
  return o;
}

std::vector<Vector> gf2_vectors(std::size_t n) {
  std::vector<Vector> out;
  for (std::size_t bits = 0; bits < (std::size_t{1} << n); ++bits) {
    Vector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = Scalar(static_cast<long>((bits >> i) & 1));
    out.push_back(v);
  }
  return out;
}

Outcome relation_suite() {
  Outcome o;
  Rng rng(2026);
  for (int t = 0; t < 100; ++t) {
    Field f = t % 2 == 0 ? Field::prime(2) : Field::prime(5);
    std::size_t n = testing::uniform(rng, 1, 4);
    std::size_t gens = testing::uniform(rng, 0, static_cast<long>(2 * n));
    LinearRelation r(n, n, Subspace(testing::random_matrix(f, 2 * n, gens, rng, 0, 4)));
    RelationLawReport laws = check_relation_laws(r);
    std::string tag = "relation " + std::to_string(t);
    o.expect(laws.d_plus_law && laws.d_minus_law && laws.k_intersections && laws.chain_inclusions, tag + " limit laws");
    o.expect(laws.alternative_presentation, tag + " alternative presentation");
    o.expect(laws.regular_is_isomorphism, tag + " regular part not invertible");
    if (f.characteristic() == 2 && n <= 3) {
      LinearRelation s(n, n, Subspace(testing::random_matrix(f, 2 * n, gens, rng, 0, 1)));
      LinearRelation sr = compose(s, r);
      bool agree = true;
      auto vs = gf2_vectors(n);
      for (const auto& v : vs)
        for (const auto& u : vs) {
          bool expected = false;
          for (const auto& w : vs) expected = expected || (r.relates(v, w) && s.relates(w, u));
          agree = agree && sr.relates(v, u) == expected;
        }
      o.expect(agree, tag + " composition enumeration");
    }
  }
  return o;
}

Outcome topology_suite() {
  Outcome o;
  auto report = [](const std::string& name, std::optional<Field> f = {}) {
    TameDiagram d = diagram_from_json(fixture(name), f);
    return std::make_pair(d, analyze(d));
  };
  auto [torus, tr] = report("torus.json");
  for (int r = 0; r <= 2; ++r) {
    o.expect(space_homology(tr, r, Scalar(1)) == std::vector<std::size_t>{1, 2, 1}[r], "torus betti");
    o.expect(novikov_numbers(tr)[r].rank == 0, "torus Novikov");
    o.expect(tr.degrees[r].decomposition.barcodes.empty(), "torus has bar codes");
  }
  auto kq = report("klein.json").second;
  o.expect(space_homology(kq, 1, Scalar(1)) == 1, "Klein beta_1 over Q");
  auto k2 = report("klein.json", Field::prime(2)).second;
  o.expect(space_homology(k2, 1, Scalar(1)) == 2, "Klein beta_1 over GF(2)");
  for (const char* name : {"worked_diagram.json", "torus.json", "klein.json", "point.json", "circle_height.json"}) {
    for (const auto& fo : {std::optional<Field>{}, std::optional<Field>{Field::prime(2)}}) {
      auto [d, rep] = report(name, fo);
      for (const auto& c : cross_validate(d, rep)) o.expect(c.pass, std::string(name) + ": " + c.name + " " + c.detail);
      for (int r = 0; r <= rep.top_degree(); ++r) {
        std::size_t beta = space_homology(rep, r, Scalar(1));
        const Decomposition& dec = rep.degrees[static_cast<std::size_t>(r)].decomposition;
        std::size_t open_below = r > 0 ? rep.degrees[static_cast<std::size_t>(r - 1)].decomposition.count_open() : 0;
        if (rep.kind == DiagramKind::circle) {
          std::size_t j1 = dec.cells_with_eigenvalue(Scalar(1));
          std::size_t j1_below = r > 0 ? rep.degrees[static_cast<std::size_t>(r - 1)].decomposition.cells_with_eigenvalue(Scalar(1)) : 0;
          o.expect(beta == novikov_numbers(rep)[static_cast<std::size_t>(r)].rank + j1 + j1_below,
                   std::string(name) + " Betti minus lambda=1 cells vs Novikov rank, degree " + std::to_string(r));
        } else {
          o.expect(beta == dec.count_closed() + open_below, std::string(name) + " real Betti census");
        }
      }
    }
  }
  return o;
}

Outcome config_suite() {
  Outcome o;
  for (const char* name : {"worked_diagram.json", "torus.json", "klein.json", "point.json", "circle_height.json"}) {
    TameDiagram d = diagram_from_json(fixture(name));
    InvariantReport rep = analyze(d);
    bool circle = rep.kind == DiagramKind::circle;
    for (int r = 0; r <= rep.top_degree(); ++r) {
      Configuration c = configuration(rep, r);
      std::size_t by_ranks;
      if (circle) {
        // A twist u with no cell at 1/u leaves exactly the Novikov rank.
        Scalar u(1009);
        bool generic = true;
        for (int s : {r, r - 1})
          if (s >= 0 && rep.degrees[static_cast<std::size_t>(s)].decomposition.cells_with_eigenvalue(rep.field.inv(u)) > 0)
            generic = false;
        o.expect(generic, std::string(name) + " twist not generic");
        by_ranks = space_homology(rep, r, u);
      } else {
        by_ranks = space_homology(rep, r, Scalar(1));
      }
      o.expect(c.points.size() == by_ranks, std::string(name) + " configuration size, degree " + std::to_string(r));
      ConfigPolynomial p = polynomial(c);
      o.expect(p.degree() == static_cast<int>(c.points.size()), std::string(name) + " polynomial degree");
      o.expect(max_relative_residual(c, p) <= kConfigTolerance, std::string(name) + " root residual");
      for (const auto& pt : c.points) {
        auto back = decode(c.kind, encode(c.kind, pt));
        o.expect(std::abs(back.first - pt.first) <= 1e-9 * (1 + std::abs(pt.first)) &&
                     std::abs(back.second - pt.second) <= 1e-9 * (1 + std::abs(pt.second)),
                 std::string(name) + " encoding round trip");
      }
    }
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* title;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria{
      {"worked example, quiver route", golden_quiver},
      {"worked example, relation route", golden_relation},
      {"worked example, transformation transcript", golden_transcript},
      {"census properties on 200 random GF(5) representations", census_suite},
      {"truncation rule on 100 random windows", truncation_suite},
      {"relation limit laws and GF(2) composition", relation_suite},
      {"topology sanity on the fixtures", topology_suite},
      {"configuration cardinalities and polynomial roots", config_suite},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    std::string error;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    bool pass = error.empty() && o.failures == 0;
    failed += pass ? 0 : 1;
    std::printf("criterion %zu: %s  %s (%zu checks", i + 1, pass ? "PASS" : "FAIL", criteria[i].title, o.cases);
    if (!error.empty())
      std::printf(", exception: %s", error.c_str());
    else if (o.failures > 0)
      std::printf(", %zu failed, first: %s", o.failures, o.first_failure.c_str());
    std::printf(")\n");
  }
  return failed;
}
