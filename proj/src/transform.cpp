#include "tame/transform.hpp"

#include <stdexcept>

#include "tame/subspace.hpp"

namespace tame {

namespace {

bool is_odd(long v) { return ((v % 2) + 2) % 2 == 1; }

/// V_v -> V_v / u. Odd vertices only have outgoing arrows, even ones incoming.
void quotient_vertex(Zigzag& z, long v, const Subspace& u) {
  if (!z.has_vertex(v)) return;
  Quotient q = quotient(z.dim(v), u);
  for (long e : {v - 1, v}) {
    if (!z.has_edge(e)) continue;
    z.set_edge(e, is_odd(v) ? z.edge(e) * q.section : q.project * z.edge(e));
  }
  z.set_dim(v, q.project.rows());
}

/// V_v -> u. Incoming arrows must already land in u.
void restrict_vertex(Zigzag& z, long v, const Subspace& u) {
  if (!z.has_vertex(v)) return;
  for (long e : {v - 1, v}) {
    if (!z.has_edge(e)) continue;
    z.set_edge(e, is_odd(v) ? z.edge(e) * u.basis() : u.coordinates(z.edge(e)));
  }
  z.set_dim(v, u.dim());
}

long vertex_for(TransformKind kind, std::size_t i) {
  long k = static_cast<long>(i);
  switch (kind) {
    case TransformKind::T1: return 2 * k - 1;
    case TransformKind::T2: return 2 * k + 1;
    case TransformKind::T3: return 2 * k;
    case TransformKind::T4: return 2 * k;
  }
  return 0;
}

bool is_start(TransformKind kind) { return kind == TransformKind::T1 || kind == TransformKind::T3; }

}  // namespace

std::string TransformRecord::label() const {
  static const char* names[] = {"T1", "T2", "T3", "T4"};
  return std::string(names[static_cast<int>(kind)]) + "(" + std::to_string(index) + ")";
}

void drop_start(Zigzag& z, long v) {
  if (is_odd(v)) {
    Subspace k = nullspace(z.edge(v - 1));
    Subspace u = image(z.edge(v), k);
    quotient_vertex(z, v + 1, u);
    quotient_vertex(z, v, k);
  } else {
    Subspace reached = image(z.edge(v - 1));
    Subspace pre = preimage(z.edge(v), reached);
    restrict_vertex(z, v + 1, pre);
    restrict_vertex(z, v, reached);
  }
}

void drop_end(Zigzag& z, long v) {
  if (is_odd(v)) {
    Subspace k = nullspace(z.edge(v));
    Subspace u = image(z.edge(v - 1), k);
    quotient_vertex(z, v - 1, u);
    quotient_vertex(z, v, k);
  } else {
    Subspace reached = image(z.edge(v));
    Subspace pre = preimage(z.edge(v - 1), reached);
    restrict_vertex(z, v - 1, pre);
    restrict_vertex(z, v, reached);
  }
}

TransformResult elementary(const CircleRep& rep, TransformKind kind, std::size_t i) {
  if (i < 1 || i > rep.m) throw std::invalid_argument("elementary: index out of range");
  Zigzag z = Zigzag::from(rep);
  long v = vertex_for(kind, i);
  long m = static_cast<long>(rep.m);

  TransformRecord rec;
  rec.kind = kind;
  rec.index = i;
  rec.dim_before = z.total_dim();
  std::size_t single = count_single(z, v);
  long pair_start = is_start(kind) ? v : v - 1;
  std::size_t pair = count_pair(z, pair_start);
  for (std::size_t c = 0; c < single; ++c) rec.eliminated.push_back(canonical_circle(BarCode::from_vertices(v, v), m));
  for (std::size_t c = 0; c < pair; ++c)
    rec.eliminated.push_back(canonical_circle(BarCode::from_vertices(pair_start, pair_start + 1), m));

  if (is_start(kind))
    drop_start(z, v);
  else
    drop_end(z, v);
  rec.dim_after = z.total_dim();
  return {z.to_circle(), rec};
}

SweepResult reduce_to_regular(const CircleRep& rep) {
  SweepResult out{rep, {}};
  static const TransformKind order[] = {TransformKind::T1, TransformKind::T2, TransformKind::T3, TransformKind::T4};
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 1; i <= rep.m; ++i)
      for (TransformKind kind : order) {
        TransformResult step = elementary(out.regular, kind, i);
        if (!step.record.changed()) continue;
        changed = true;
        out.regular = std::move(step.rep);
        out.transcript.push_back(std::move(step.record));
      }
  }
  return out;
}

}  // namespace tame
