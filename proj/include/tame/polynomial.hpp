#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tame/field.hpp"

namespace tame {

/// Univariate polynomial over a Field; coefficients low degree first, no
/// trailing zeros (the zero polynomial has no coefficients).
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(Field field, std::vector<Scalar> coeffs);

  static Polynomial constant(Field field, const Scalar& c);
  static Polynomial x(Field field);
  /// x - root.
  static Polynomial linear(Field field, const Scalar& root);

  const Field& field() const { return field_; }
  const std::vector<Scalar>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Scalar& leading() const { return c_.back(); }
  Scalar coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Scalar(0); }

  Polynomial monic() const;
  Polynomial derivative() const;
  Scalar eval(const Scalar& x) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Scalar& s) const;

  /// Quotient and remainder; divisor must be nonzero.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
  Polynomial operator%(const Polynomial& d) const { return divmod(d).second; }
  Polynomial operator/(const Polynomial& d) const { return divmod(d).first; }

  /// e.g. "x^2 + 4x + 1" (coefficients printed in canonical field form).
  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

 private:
  void trim();
  Field field_;
  std::vector<Scalar> c_;
};

/// Monic gcd (zero if both are zero).
Polynomial gcd(Polynomial a, Polynomial b);

}  // namespace tame
