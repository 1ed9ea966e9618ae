#include <doctest.h>

#include <map>

#include "support.hpp"
#include "tame/covering.hpp"
#include "tame/decompose.hpp"
#include "tame/relation.hpp"
#include "tame/transform.hpp"

using namespace tame;
using testing::Rng;

namespace {

const Field GF5 = Field::prime(5);
const Field Q = Field::rationals();

BarCodes sorted(BarCodes b) {
  std::sort(b.begin(), b.end());
  return b;
}

// Restriction of interval modules to a vertex window is the clipped interval;
// a Jordan summand of dimension k restricts to k copies of the whole window.
BarCodes truncation_oracle(const testing::KnownRep& k, long m, long a, long b) {
  BarCodes out;
  long lo = 2 * a, hi = 2 * b, period = 2 * m;
  for (const auto& c : k.codes) {
    for (long t = -4; t <= 4; ++t) {
      long s = c.start_vertex() + t * period, e = c.end_vertex() + t * period;
      long cs = std::max(s, lo), ce = std::min(e, hi);
      if (cs <= ce) out.push_back(BarCode::from_vertices(cs, ce));
    }
  }
  for (std::size_t i = 0; i < k.monodromy.rows(); ++i) out.push_back(BarCode{a, b, true, true});
  return sorted(out);
}

}  // namespace

TEST_CASE("decompose recovers known summands") {
  Rng rng(41);
  for (const Field& f : {GF5, Field::prime(7), Field::prime(2)}) {
    for (int t = 0; t < 40; ++t) {
      std::size_t m = testing::uniform(rng, 1, 4);
      auto k = testing::random_known_rep(f, m, 4, rng);
      Decomposition d = decompose(k.rep);
      CHECK(d.barcodes == k.codes);
      CHECK(d.form.split_cells == canonical_form(k.monodromy).split_cells);
      CHECK(d.form.similar_to(canonical_form(k.monodromy)));
    }
  }
}

TEST_CASE("decompose over Q with non-split monodromy") {
  // x^2 + 1 has no rational root.
  Matrix rot = Matrix::from_ints(Q, 2, 2, {0, -1, 1, 0});
  CircleRep rep = direct_sum(jordan_rep(2, rot), interval_rep(Q, 2, BarCode{1, 2, false, true}));
  Decomposition d = decompose(rep);
  CHECK(d.barcodes == BarCodes{BarCode{1, 2, false, true}});
  CHECK(d.form.split_cells.empty());
  REQUIRE(d.form.residual_blocks.size() == 1);
  CHECK(d.form.residual_blocks[0].poly.degree() == 2);
}

TEST_CASE("covering kernels agree") {
  Rng rng(42);
  for (int t = 0; t < 30; ++t) {
    std::size_t m = testing::uniform(rng, 1, 4);
    CircleRep rep = testing::random_circle_rep(GF5, m, 3, rng);
    BarCodes par = barcodes_from_cover(Zigzag::from(rep), CoverKernel::parallel);
    CHECK(par == barcodes_from_cover(Zigzag::from(rep), CoverKernel::serial));
    CHECK(par == barcodes_from_cover(Zigzag::from(rep), CoverKernel::reduction));
    Decomposition dp = decompose(rep, CoverKernel::parallel), dr = decompose(rep, CoverKernel::reduction);
    CHECK(dp.barcodes == dr.barcodes);
    CHECK(dp.form.invariant_factors == dr.form.invariant_factors);
  }
}

TEST_CASE("covering count of a single interval") {
  CircleRep rep = interval_rep(GF5, 3, BarCode{2, 3, true, true});
  Zigzag z = Zigzag::from(rep);
  CHECK(covering_count(z, 4, 6) == 1);
  CHECK(covering_count(z, 3, 6) == 0);
  CHECK(covering_count(z, 4, 7) == 0);
  CHECK(covering_count_reduction(z, 4, 6) == 1);
  CHECK(covering_count_reduction(z, 5, 5) == 1);
}

TEST_CASE("dimension accounting and rebuild round trip") {
  Rng rng(43);
  for (int t = 0; t < 40; ++t) {
    std::size_t m = testing::uniform(rng, 1, 4);
    CircleRep rep = testing::random_circle_rep(GF5, m, 3, rng);
    Decomposition d = decompose(rep);
    auto dims = testing::vertex_dims(rep);
    for (long v = 1; v <= static_cast<long>(2 * m); ++v)
      CHECK(decomposition_vertex_dim(d, v) == dims[static_cast<std::size_t>(v - 1)]);
    CircleRep back = rebuild(d);
    CHECK(testing::vertex_dims(back) == dims);
    Decomposition again = decompose(back);
    CHECK(again.barcodes == d.barcodes);
    CHECK(again.form.invariant_factors == d.form.invariant_factors);
  }
}

TEST_CASE("line representations") {
  ZRep z = direct_sum(interval_rep(Q, 0, 4, BarCode{1, 3, false, true}), interval_rep(Q, 0, 4, BarCode{0, 4, true, true}));
  z = direct_sum(z, interval_rep(Q, 0, 4, BarCode{2, 2, true, true}));
  Decomposition d = decompose(z);
  CHECK(d.barcodes == sorted({BarCode{1, 3, false, true}, BarCode{0, 4, true, true}, BarCode{2, 2, true, true}}));
  CHECK(d.monodromy.rows() == 0);
  CHECK(d.transcript.empty());
}

TEST_CASE("truncation matches the restriction rule") {
  Rng rng(44);
  for (int t = 0; t < 40; ++t) {
    std::size_t m = testing::uniform(rng, 1, 3);
    auto k = testing::random_known_rep(GF5, m, 3, rng);
    long a = testing::uniform(rng, -2, 3);
    long b = a + testing::uniform(rng, 0, 6);
    Decomposition d = decompose(unroll(k.rep, a, b));
    CHECK(d.barcodes == truncation_oracle(k, static_cast<long>(m), a, b));
  }
}

TEST_CASE("elementary transforms") {
  Rng rng(45);
  for (int t = 0; t < 30; ++t) {
    std::size_t m = testing::uniform(rng, 1, 3);
    auto k = testing::random_known_rep(GF5, m, 3, rng);
    EndoCanonicalForm before = canonical_form(k.monodromy);
    for (auto kind : {TransformKind::T1, TransformKind::T2, TransformKind::T3, TransformKind::T4}) {
      std::size_t i = testing::uniform(rng, 1, static_cast<long>(m));
      TransformResult res = elementary(k.rep, kind, i);
      CHECK(res.record.dim_before == k.rep.total_dim());
      CHECK(res.record.dim_after == res.rep.total_dim());
      CHECK(res.record.dim_after <= res.record.dim_before);
      Decomposition d = decompose(res.rep);
      CHECK(d.form.similar_to(before));
      // Removed codes plus surviving codes account for the lost dimension.
      std::size_t dropped = 0;
      for (const auto& c : res.record.eliminated) dropped += static_cast<std::size_t>(c.length());
      if (res.record.eliminated.empty()) CHECK(d.barcodes.size() == k.codes.size());
      CHECK(d.barcodes.size() + res.record.eliminated.size() == k.codes.size());
      CHECK(dropped <= res.record.dim_before - res.record.dim_after);
    }
  }
  CircleRep regular = jordan_rep(3, Matrix::from_ints(GF5, 2, 2, {2, 1, 0, 2}));
  for (auto kind : {TransformKind::T1, TransformKind::T2, TransformKind::T3, TransformKind::T4})
    for (std::size_t i = 1; i <= 3; ++i) {
      TransformResult res = elementary(regular, kind, i);
      CHECK_FALSE(res.record.changed());
      CHECK(res.rep.alpha == regular.alpha);
    }
}

TEST_CASE("sweep ends regular with the same monodromy") {
  Rng rng(46);
  for (int t = 0; t < 30; ++t) {
    std::size_t m = testing::uniform(rng, 1, 4);
    CircleRep rep = testing::random_circle_rep(GF5, m, 3, rng);
    SweepResult s = reduce_to_regular(rep);
    Matrix t_reg = monodromy_of_regular(s.regular);
    LinearRelation r = relation_from_cycle(rep.alpha, rep.beta);
    CHECK(canonical_form(t_reg).similar_to(regular_part(r).form));
    std::size_t eliminated = 0;
    for (const auto& rec : s.transcript) {
      CHECK(rec.changed());
      eliminated += rec.eliminated.size();
    }
    CHECK(eliminated == decompose(rep).barcodes.size());
  }
}
