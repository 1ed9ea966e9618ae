#include "tame/decompose.hpp"

#include <algorithm>
#include <stdexcept>

namespace tame {

std::size_t Decomposition::count_closed() const {
  return static_cast<std::size_t>(std::count_if(barcodes.begin(), barcodes.end(), [](const BarCode& c) { return c.is_closed(); }));
}

std::size_t Decomposition::count_open() const {
  return static_cast<std::size_t>(std::count_if(barcodes.begin(), barcodes.end(), [](const BarCode& c) { return c.is_open(); }));
}

std::size_t Decomposition::count_mixed() const {
  return static_cast<std::size_t>(std::count_if(barcodes.begin(), barcodes.end(), [](const BarCode& c) { return c.is_mixed(); }));
}

Decomposition decompose(const CircleRep& rep, CoverKernel kernel) {
  Decomposition d;
  d.field = rep.field;
  d.circle = true;
  d.m = rep.m;
  d.barcodes = barcodes_from_cover(Zigzag::from(rep), kernel);

  SweepResult sweep = reduce_to_regular(rep);
  d.monodromy = monodromy_of_regular(sweep.regular);
  d.form = canonical_form(d.monodromy);
  d.transcript = std::move(sweep.transcript);

  std::size_t eliminated = 0;
  for (const auto& rec : d.transcript) eliminated += rec.eliminated.size();
  if (eliminated != d.barcodes.size())
    throw std::logic_error("decompose: transforms eliminated " + std::to_string(eliminated) + " codes, covering counts found " +
                           std::to_string(d.barcodes.size()));
  return d;
}

Decomposition decompose(const ZRep& rep, CoverKernel kernel) {
  Decomposition d;
  d.field = rep.field;
  d.barcodes = barcodes_from_cover(Zigzag::from(rep), kernel);
  d.monodromy = Matrix::zero(rep.field, 0, 0);
  d.form = canonical_form(d.monodromy);
  return d;
}

CircleRep rebuild(const Decomposition& d) {
  if (!d.circle) throw std::invalid_argument("rebuild: circle decompositions only");
  CircleRep out = jordan_rep(d.m, d.monodromy);
  for (const auto& c : d.barcodes) out = direct_sum(out, interval_rep(d.field, d.m, c));
  return out;
}

std::size_t decomposition_vertex_dim(const Decomposition& d, long v) {
  long m = d.circle ? static_cast<long>(d.m) : 0;
  std::size_t total = d.circle ? d.jordan_dim() : 0;
  for (const auto& c : d.barcodes) total += vertex_multiplicity(c, v, m);
  return total;
}

}  // namespace tame
