#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tame/decompose.hpp"
#include "tame/homology.hpp"
#include "tame/quiver.hpp"

namespace tame {

enum class DiagramKind { real, circle };

/// Diagram 1 as data.
///
/// circle: fibers_X[i] = X_{theta_{i+1}}, fibers_R[i] = the regular fiber just
///   before theta_{i+1} (fibers_R[0] = X_{t_m}). maps_a[i] : R_{i+1} -> X_{i+1}
///   gives alpha_{i+1}; maps_b[i] : R_{i+2} -> X_{i+1} gives beta_{i+1}, with
///   R_{m+1} = R_1. So V_{2i-1} = H(R_i) and V_{2i} = H(X_i).
/// real: same, but fibers_R has m+1 entries (the last one above theta_m) and
///   the spaces outside the chain are zero.
struct TameDiagram {
  DiagramKind kind = DiagramKind::circle;
  Field field;
  std::vector<double> critical_angles;
  std::vector<double> regular_angles;
  std::vector<SimplicialComplex> fibers_X;
  std::vector<SimplicialComplex> fibers_R;
  std::vector<SimplicialMap> maps_a;
  std::vector<SimplicialMap> maps_b;

  std::size_t m() const { return critical_angles.size(); }
  /// Throws std::invalid_argument on count, ordering or source/target mismatch.
  void validate() const;
  int max_fiber_dimension() const;
};

struct DegreeReport {
  int degree = 0;
  CircleRep circle;  // circle kind
  ZRep line;         // real kind
  Decomposition decomposition;
  KerCoker kernel;  // of M(rho_r)
};

struct InvariantReport {
  DiagramKind kind = DiagramKind::circle;
  Field field;
  std::size_t m = 0;
  std::vector<double> critical_angles;
  /// Degrees 0 .. max fiber dimension + 1.
  std::vector<DegreeReport> degrees;

  /// nullptr beyond the analyzed range (the representation there is zero).
  const DegreeReport* degree(int r) const;
  int top_degree() const { return static_cast<int>(degrees.size()) - 1; }
};

/// Angle of the lifted critical index j (theta_j + 2 pi k on the circle).
double lifted_angle(const std::vector<double>& critical, long j, bool circle);

/// Endpoints of a code in angle form: {theta_i, theta_j + 2 pi k}.
struct AngleCode {
  double left = 0;
  double right = 0;
  bool left_closed = true;
  bool right_closed = true;
  std::string to_string() const;
};

AngleCode to_angles(const InvariantReport& report, const BarCode& code);

CircleRep build_circle_representation(const TameDiagram& d, int r);
ZRep build_line_representation(const TameDiagram& d, int r);

InvariantReport analyze(const TameDiagram& d, CoverKernel kernel = CoverKernel::parallel);

/// dim H_r(X; u xi_f) = dim coker M((rho_r)_u) + dim ker M((rho_{r-1})_u);
/// for the real kind u must be 1 and the line matrices are used.
std::size_t space_homology(const InvariantReport& report, int r, const Scalar& u);

/// dim H_r(X_theta) for r = 0 .. top degree, from bar codes and Jordan dimension.
std::vector<std::size_t> fiber_dims(const InvariantReport& report, double theta);

struct NovikovEntry {
  int degree = 0;
  std::size_t rank = 0;  // N_r
  std::size_t torsion_dim = 0;  // dim V_r
  /// e.g. "k[T^-1,T]^1 + (k^2, T)" with the invariant factors of T.
  std::string summary;
};

std::vector<NovikovEntry> novikov_numbers(const InvariantReport& report);

/// The three counts of the level-interval homology of the infinite cyclic
/// cover for the window [a, b] (a <= b, lifted angles).
struct IntervalDims {
  /// dim H_r(X~_[a,b]): translates meeting the window in a closed interval,
  /// open (r-1)-translates inside the window, plus the Jordan dimension.
  std::size_t window = 0;
  /// dim im(H_r(X~_[a,b]) -> H_r(X~)): closed translates meeting the window,
  /// open (r-1)-translates inside, plus the Jordan dimension.
  std::size_t image_cover = 0;
  /// dim im(H_r(X~_[a,b]) -> H_r(X)): closed codes with a translate meeting,
  /// open (r-1)-codes with a translate inside, plus cells with lambda = 1.
  std::size_t image_space = 0;
  /// The same last count with the Jordan summand taken as the total dimension
  /// of the lambda = 1 cells.
  std::size_t image_space_by_dim = 0;
  /// Window [a,b] contains a critical value: critical indices p..q.
  std::optional<std::pair<long, long>> critical_window;
};

IntervalDims interval_dims(const InvariantReport& report, double a, double b, int r);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Independent recomputations of what analyze reports. Failures are results.
std::vector<CheckResult> cross_validate(const TameDiagram& d, const InvariantReport& report);

}  // namespace tame
