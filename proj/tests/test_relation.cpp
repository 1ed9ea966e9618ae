#include <doctest.h>

#include "support.hpp"
#include "tame/decompose.hpp"
#include "tame/relation.hpp"
#include "tame/subspace.hpp"

using namespace tame;
using testing::Rng;

namespace {

const Field GF2 = Field::prime(2);
const Field GF5 = Field::prime(5);
const Field Q = Field::rationals();

LinearRelation random_relation(const Field& f, std::size_t n, std::size_t w, Rng& rng) {
  std::size_t gens = testing::uniform(rng, 0, static_cast<long>(n + w));
  return {n, w, Subspace(testing::random_matrix(f, n + w, gens, rng, 0, 4))};
}

std::vector<Vector> all_vectors_gf2(std::size_t n) {
  std::vector<Vector> out;
  for (std::size_t bits = 0; bits < (std::size_t{1} << n); ++bits) {
    Vector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = Scalar(static_cast<long>((bits >> i) & 1));
    out.push_back(v);
  }
  return out;
}

const Matrix omega1 = Matrix::from_ints(Q, 4, 3, {3, 0, 0, 0, 2, -1, 0, 0, 2, 0, 0, 0});
const Matrix omega2 = Matrix::from_ints(Q, 4, 3, {0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0});

}  // namespace

TEST_CASE("graph, dagger and full relations") {
  Matrix m = Matrix::from_ints(GF5, 2, 3, {1, 2, 0, 0, 1, 4});
  LinearRelation g = LinearRelation::graph(m);
  CHECK(g.dim() == 3);
  CHECK(dagger(dagger(g)) == g);
  RelationParts p = parts(g);
  CHECK(p.dom.dim() == 3);
  CHECK(p.mul.dim() == 0);
  CHECK(p.ker == nullspace(m));
  LinearRelation full = LinearRelation::full(GF5, 2, 3);
  RelationParts pf = parts(full);
  CHECK(pf.dom.dim() == 2);
  CHECK(pf.img.dim() == 3);
  CHECK(pf.ker.dim() == 2);
  CHECK(pf.mul.dim() == 3);
  LinearRelation id = LinearRelation::identity(Q, 2);
  CHECK(id.relates({Scalar(1), Scalar(2)}, {Scalar(1), Scalar(2)}));
  CHECK_FALSE(id.relates({Scalar(1), Scalar(2)}, {Scalar(2), Scalar(1)}));
}

TEST_CASE("graph dagger after graph contains the diagonal") {
  Rng rng(21);
  for (int t = 0; t < 20; ++t) {
    Matrix m = testing::random_matrix(GF5, 3, 2, rng);
    LinearRelation r = compose(dagger(LinearRelation::graph(m)), LinearRelation::graph(m));
    Matrix diag = vstack(Matrix::identity(GF5, 2), Matrix::identity(GF5, 2));
    CHECK(r.space().contains(Subspace(diag)));
  }
}

TEST_CASE("composition is functorial and associative") {
  Rng rng(22);
  for (int t = 0; t < 20; ++t) {
    Matrix a = testing::random_matrix(GF5, 3, 2, rng), b = testing::random_matrix(GF5, 2, 3, rng);
    CHECK(compose(LinearRelation::graph(a), LinearRelation::graph(b)) == LinearRelation::graph(a * b));
    LinearRelation r = random_relation(GF5, 2, 3, rng), s = random_relation(GF5, 3, 2, rng), u = random_relation(GF5, 2, 2, rng);
    CHECK(compose(u, compose(s, r)) == compose(compose(u, s), r));
    CHECK(compose(r, LinearRelation::identity(GF5, 2)) == r);
    CHECK(compose(LinearRelation::identity(GF5, 3), r) == r);
  }
  CHECK_THROWS_AS(compose(LinearRelation::identity(Q, 2), LinearRelation::identity(Q, 3)), std::invalid_argument);
}

TEST_CASE("composition over GF(2) matches enumeration") {
  Rng rng(23);
  for (int t = 0; t < 60; ++t) {
    std::size_t a = testing::uniform(rng, 1, 3), b = testing::uniform(rng, 1, 3), c = testing::uniform(rng, 1, 3);
    LinearRelation r = random_relation(GF2, a, b, rng), s = random_relation(GF2, b, c, rng);
    LinearRelation sr = compose(s, r);
    for (const auto& v : all_vectors_gf2(a))
      for (const auto& u : all_vectors_gf2(c)) {
        bool expected = false;
        for (const auto& w : all_vectors_gf2(b)) expected = expected || (r.relates(v, w) && s.relates(w, u));
        CHECK(sr.relates(v, u) == expected);
      }
  }
}

TEST_CASE("parts of the worked-example relation") {
  LinearRelation r = LinearRelation::from_equalizer(omega1, omega2);
  RelationParts p = parts(r);
  // omega1 v = omega2 w forces 3 v1 = 0, leaves w1 free.
  CHECK(p.dom == Subspace(Matrix::from_ints(Q, 3, 2, {0, 0, 1, 0, 0, 1})));
  CHECK(p.mul == Subspace(Matrix::from_ints(Q, 3, 1, {1, 0, 0})));
  RegularPart reg = regular_part(r);
  CHECK(reg.dim == 2);
  CHECK(reg.alternative_dim == 2);
  REQUIRE(reg.form.split_cells.size() == 1);
  CHECK(reg.form.split_cells[0] == JordanCell{Scalar(2), 2});
}

TEST_CASE("limits of simple relations") {
  Matrix t = Matrix::from_ints(GF5, 2, 2, {1, 1, 0, 3});
  RelationLimits l = limits(LinearRelation::graph(t));
  CHECK(l.k_plus.dim() == 0);
  CHECK(l.k_minus.dim() == 0);
  CHECK(l.d.dim() == 2);
  RegularPart reg = regular_part(LinearRelation::graph(t));
  CHECK(reg.form.similar_to(canonical_form(t)));
  LinearRelation zero(1, 1, Subspace::zero(Q, 2));
  RelationLimits lz = limits(zero);
  CHECK(lz.d_plus.dim() == 0);
  CHECK(lz.k_plus.dim() == 0);
  CHECK(regular_part(zero).dim == 0);
  // Nilpotent graph: everything flows to 0.
  RelationLimits ln = limits(LinearRelation::graph(Matrix::from_ints(Q, 2, 2, {0, 1, 0, 0})));
  CHECK(ln.k_plus.dim() == 2);
  CHECK(regular_part(LinearRelation::graph(Matrix::from_ints(Q, 2, 2, {0, 1, 0, 0}))).dim == 0);
  CHECK_THROWS_AS(limits(LinearRelation::full(Q, 1, 2)), std::invalid_argument);
}

TEST_CASE("relation laws on random square relations") {
  Rng rng(24);
  for (const Field& f : {GF2, GF5}) {
    for (int t = 0; t < 40; ++t) {
      std::size_t n = testing::uniform(rng, 1, 4);
      LinearRelation r = random_relation(f, n, n, rng);
      RelationLawReport laws = check_relation_laws(r);
      CHECK(laws.all());
      RelationLimits l = limits(r);
      CHECK(l.d_plus == sum(l.d, l.k_plus));
      CHECK(l.d_minus == sum(l.k_minus, l.d));
    }
  }
}

TEST_CASE("regular part of a direct sum keeps the invertible summand") {
  Rng rng(25);
  for (int t = 0; t < 20; ++t) {
    Matrix inv = testing::random_invertible(GF5, 2, rng);
    // Summand with no regular part: a nilpotent shift.
    Matrix nil = Matrix::from_ints(GF5, 2, 2, {0, 1, 0, 0});
    Matrix a = direct_sum(inv, nil), b = Matrix::identity(GF5, 4);
    LinearRelation r = LinearRelation::from_equalizer(a, b);
    RegularPart reg = regular_part(r);
    CHECK(reg.form.similar_to(canonical_form(inv)));
    // The same relation read through a change of basis.
    Matrix p = testing::random_invertible(GF5, 4, rng);
    RegularPart conj = regular_part(LinearRelation::from_equalizer(a * p, b * p));
    CHECK(conj.form.similar_to(reg.form));
  }
}

TEST_CASE("relation regular part agrees with the m = 1 quiver route") {
  Rng rng(26);
  for (int t = 0; t < 40; ++t) {
    std::size_t n = testing::uniform(rng, 1, 3);
    LinearRelation r = random_relation(GF2, n, n, rng);
    // V_1 = R, V_2 = V, alpha = second projection, beta = first projection.
    const Matrix& basis = r.space().basis();
    CircleRep rep;
    rep.field = GF2;
    rep.m = 1;
    rep.n = {r.dim()};
    rep.r = {n};
    rep.alpha = {basis.row_range(n, n)};
    rep.beta = {basis.row_range(0, n)};
    Decomposition d = decompose(rep);
    CHECK(d.form.similar_to(regular_part(r).form));
  }
}

TEST_CASE("cycle relation of an identity chain") {
  std::vector<Matrix> id(3, Matrix::identity(GF5, 2));
  CHECK(relation_from_cycle(id, id) == LinearRelation::identity(GF5, 2));
}
