#include <doctest.h>

#include "support.hpp"
#include "tame/homology.hpp"

using namespace tame;
using testing::Rng;

namespace {

const Field GF5 = Field::prime(5);
const Field Q = Field::rationals();

SimplicialComplex polygon(std::size_t n) {
  std::vector<Simplex> s;
  for (std::size_t i = 0; i < n; ++i) s.push_back({i, (i + 1) % n});
  return {n, s};
}

SimplicialComplex sphere() { return {4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}}; }

// Seven-vertex torus.
SimplicialComplex torus() {
  std::vector<Simplex> t;
  for (std::size_t i = 0; i < 7; ++i) {
    t.push_back({i, (i + 1) % 7, (i + 3) % 7});
    t.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return {7, t};
}

}  // namespace

TEST_CASE("boundary matrices") {
  SimplicialComplex edge(2, {{0, 1}});
  CHECK(boundary_matrix(Q, edge, 1) == Matrix::from_ints(Q, 2, 1, {-1, 1}));
  CHECK(boundary_matrix(Q, edge, 0).rows() == 0);
  CHECK(rank(boundary_matrix(Q, polygon(3), 1)) == 2);
  for (const auto& k : {sphere(), torus(), polygon(5)})
    for (int r = 1; r <= k.dimension(); ++r)
      CHECK((boundary_matrix(GF5, k, r) * boundary_matrix(GF5, k, r + 1)).is_zero());
}

TEST_CASE("betti numbers of standard complexes") {
  CHECK(betti(Q, sphere(), 0) == 1);
  CHECK(betti(Q, sphere(), 1) == 0);
  CHECK(betti(Q, sphere(), 2) == 1);
  CHECK(betti(Q, polygon(6), 1) == 1);
  CHECK(betti(Q, SimplicialComplex(1, {}), 0) == 1);
  CHECK(betti(Q, torus(), 1) == 2);
  CHECK(betti(Q, torus(), 2) == 1);
  // Three disjoint triangles.
  SimplicialComplex three(9, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {6, 7}, {7, 8}, {6, 8}});
  CHECK(betti(Q, three, 1) == 3);
  CHECK(betti(Q, three, 0) == 3);
  CHECK(betti(Q, SimplicialComplex(0, {}), 0) == 0);
}

TEST_CASE("homology bases are cycles independent modulo boundaries") {
  for (const auto& k : {sphere(), torus(), polygon(4)})
    for (int r = 0; r <= k.dimension(); ++r) {
      HomologyBasis h = homology_basis(GF5, k, r);
      CHECK(h.dim() == betti(GF5, k, r));
      CHECK((boundary_matrix(GF5, k, r) * h.cycles).is_zero());
      CHECK(rank(hstack(h.cycles, h.boundaries)) == h.dim() + rank(h.boundaries));
    }
}

TEST_CASE("insertion order does not matter") {
  SimplicialComplex a(4, {{0, 1, 2}, {2, 3}});
  SimplicialComplex b(4, {{3, 2}, {2, 1, 0}, {0, 1}});
  CHECK(a.simplices(1) == b.simplices(1));
  CHECK(homology_basis(Q, a, 1).cycles == homology_basis(Q, b, 1).cycles);
  CHECK(homology_basis(Q, a, 0).cycles == homology_basis(Q, b, 0).cycles);
}

TEST_CASE("induced maps on circles") {
  SimplicialComplex hex = polygon(6);
  SimplicialMap id(hex, hex, {0, 1, 2, 3, 4, 5});
  CHECK(induced_map(Q, id, 1) == Matrix::identity(Q, 1));
  CHECK(induced_map(Q, id, 0) == Matrix::identity(Q, 1));
  std::vector<std::size_t> dbl(12);
  for (std::size_t v = 0; v < 12; ++v) dbl[v] = v % 6;
  CHECK(induced_map(Q, SimplicialMap(polygon(12), hex, dbl), 1) == Matrix::from_ints(Q, 1, 1, {2}));
  std::vector<std::size_t> refl(6);
  for (std::size_t v = 0; v < 6; ++v) refl[v] = (6 - v) % 6;
  CHECK(induced_map(Q, SimplicialMap(hex, hex, refl), 1) == Matrix::from_ints(Q, 1, 1, {-1}));
  CHECK(induced_map(Field::prime(2), SimplicialMap(hex, hex, refl), 1) == Matrix::identity(Field::prime(2), 1));
  // Collapsing to a vertex kills H_1.
  CHECK(induced_map(Q, SimplicialMap(hex, hex, std::vector<std::size_t>(6, 0)), 1).is_zero());
}

TEST_CASE("induced maps are functorial") {
  Rng rng(51);
  SimplicialComplex hex = polygon(6);
  for (int t = 0; t < 30; ++t) {
    // Random simplicial self-maps of the hexagon: steps of -1, 0 or +1.
    auto random_map = [&]() {
      std::vector<std::size_t> vm(6);
      for (;;) {
        vm[0] = testing::uniform(rng, 0, 5);
        for (std::size_t v = 1; v < 6; ++v) {
          long step = testing::uniform(rng, -1, 1);
          vm[v] = static_cast<std::size_t>((static_cast<long>(vm[v - 1]) + step + 6) % 6);
        }
        long last = (static_cast<long>(vm[0]) - static_cast<long>(vm[5]) + 6) % 6;
        if (last == 0 || last == 1 || last == 5) return vm;
      }
    };
    SimplicialMap f(hex, hex, random_map()), g(hex, hex, random_map());
    CHECK(induced_map(GF5, compose(g, f), 1) == induced_map(GF5, g, 1) * induced_map(GF5, f, 1));
  }
}

TEST_CASE("invalid complexes and maps are rejected") {
  CHECK_THROWS_AS(SimplicialComplex(2, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(SimplicialComplex(2, {{1, 1}}), std::invalid_argument);
  SimplicialComplex two_points(2, {{0}, {1}});
  SimplicialComplex edge(2, {{0, 1}});
  CHECK_THROWS_AS(SimplicialMap(edge, two_points, {0, 1}), std::invalid_argument);
  CHECK_NOTHROW(SimplicialMap(two_points, edge, {0, 1}));
  CHECK_THROWS_AS(SimplicialMap(edge, edge, {0}), std::invalid_argument);
}
