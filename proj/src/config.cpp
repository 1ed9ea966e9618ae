#include "tame/config.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace tame {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

Configuration configuration(const InvariantReport& report, int r) {
  Configuration c;
  c.degree = r;
  c.kind = report.kind == DiagramKind::circle ? ConfigKind::torus : ConfigKind::plane;
  auto add = [&](double x, double y) {
    if (c.kind == ConfigKind::torus) {
      double shift = kTwoPi * std::floor(x / kTwoPi);
      x -= shift;
      y -= shift;
    }
    c.points.emplace_back(x, y);
  };
  if (const DegreeReport* d = report.degree(r))
    for (const auto& code : d->decomposition.barcodes)
      if (code.is_closed()) {
        AngleCode a = to_angles(report, code);
        add(a.left, a.right);
      }
  if (const DegreeReport* d = report.degree(r - 1))
    for (const auto& code : d->decomposition.barcodes)
      if (code.is_open()) {
        AngleCode a = to_angles(report, code);
        add(a.right, a.left);
      }
  std::sort(c.points.begin(), c.points.end());
  return c;
}

std::complex<double> encode(ConfigKind kind, const std::pair<double, double>& point) {
  auto [x, y] = point;
  if (kind == ConfigKind::plane) return {x, y};
  return std::polar(std::exp(y - x), x);
}

std::pair<double, double> decode(ConfigKind kind, std::complex<double> z) {
  if (kind == ConfigKind::plane) return {z.real(), z.imag()};
  double x = std::arg(z);
  if (x < 0) x += kTwoPi;
  return {x, x + std::log(std::abs(z))};
}

std::complex<double> ConfigPolynomial::eval(std::complex<double> z) const {
  std::complex<double> acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

ConfigPolynomial polynomial(const Configuration& c) {
  ConfigPolynomial p;
  p.coeffs = {1.0};
  for (const auto& pt : c.points) {
    std::complex<double> root = encode(c.kind, pt);
    // Multiply by (z - root).
    std::vector<std::complex<double>> next(p.coeffs.size() + 1, 0.0);
    for (std::size_t k = 0; k < p.coeffs.size(); ++k) {
      next[k + 1] += p.coeffs[k];
      next[k] -= root * p.coeffs[k];
    }
    p.coeffs = std::move(next);
  }
  return p;
}

double max_relative_residual(const Configuration& c, const ConfigPolynomial& p) {
  double worst = 0;
  for (const auto& pt : c.points) {
    std::complex<double> z = encode(c.kind, pt);
    double scale = 1;
    double zk = 1;
    for (const auto& coeff : p.coeffs) {
      scale += std::abs(coeff) * zk;
      zk *= std::abs(z);
    }
    worst = std::max(worst, std::abs(p.eval(z)) / scale);
  }
  return worst;
}

}  // namespace tame
