#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "tame/diagram.hpp"

namespace tame {

enum class ConfigKind { plane, torus };

/// Closed r-codes [x, y] as (x, y) and open (r-1)-codes (a, b) as (b, a).
/// Torus points are reduced by the diagonal action to 0 <= x < 2 pi.
struct Configuration {
  int degree = 0;
  ConfigKind kind = ConfigKind::plane;
  /// Sorted lexicographically.
  std::vector<std::pair<double, double>> points;
};

Configuration configuration(const InvariantReport& report, int r);

/// Root encoding: x + iy in the plane, e^{(y-x)+ix} on the torus.
std::complex<double> encode(ConfigKind kind, const std::pair<double, double>& point);
std::pair<double, double> decode(ConfigKind kind, std::complex<double> z);

/// Monic polynomial with the encoded points as roots; coefficients low degree first.
struct ConfigPolynomial {
  std::vector<std::complex<double>> coeffs;
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  std::complex<double> eval(std::complex<double> z) const;
};

ConfigPolynomial polynomial(const Configuration& c);

/// Largest |P(z)| / (1 + sum |c_k| |z|^k) over the encoded points.
double max_relative_residual(const Configuration& c, const ConfigPolynomial& p);

inline constexpr double kConfigTolerance = 1e-9;

}  // namespace tame
