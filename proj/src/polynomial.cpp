#include "tame/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace tame {

Polynomial::Polynomial(Field field, std::vector<Scalar> coeffs) : field_(field), c_(std::move(coeffs)) {
  for (auto& c : c_) c = field_.canonical(c);
  trim();
}

void Polynomial::trim() {
  while (!c_.empty() && Field::is_zero(c_.back())) c_.pop_back();
}

Polynomial Polynomial::constant(Field field, const Scalar& c) { return Polynomial(field, {c}); }

Polynomial Polynomial::x(Field field) { return Polynomial(field, {Scalar(0), Scalar(1)}); }

Polynomial Polynomial::linear(Field field, const Scalar& root) {
  return Polynomial(field, {field.neg(field.canonical(root)), Scalar(1)});
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(field_.inv(leading()));
}

Polynomial Polynomial::derivative() const {
  std::vector<Scalar> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(field_.mul(field_.from_int(static_cast<long>(k)), c_[k]));
  return Polynomial(field_, std::move(d));
}

Scalar Polynomial::eval(const Scalar& x) const {
  Scalar acc(0);
  for (std::size_t k = c_.size(); k-- > 0;) acc = field_.add(field_.mul(acc, x), c_[k]);
  return acc;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<Scalar> s(std::max(c_.size(), o.c_.size()), Scalar(0));
  for (std::size_t k = 0; k < s.size(); ++k) s[k] = field_.add(coeff(k), o.coeff(k));
  return Polynomial(field_, std::move(s));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  std::vector<Scalar> s(std::max(c_.size(), o.c_.size()), Scalar(0));
  for (std::size_t k = 0; k < s.size(); ++k) s[k] = field_.sub(coeff(k), o.coeff(k));
  return Polynomial(field_, std::move(s));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return Polynomial(field_, {});
  std::vector<Scalar> s(c_.size() + o.c_.size() - 1, Scalar(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) s[i + j] = field_.add(s[i + j], field_.mul(c_[i], o.c_[j]));
  return Polynomial(field_, std::move(s));
}

Polynomial Polynomial::scaled(const Scalar& s) const {
  std::vector<Scalar> out(c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k) out[k] = field_.mul(c_[k], s);
  return Polynomial(field_, std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
  if (d.is_zero()) throw std::invalid_argument("polynomial division by zero");
  std::vector<Scalar> rem = c_;
  if (degree() < d.degree()) return {Polynomial(field_, {}), *this};
  std::vector<Scalar> q(c_.size() - d.c_.size() + 1, Scalar(0));
  Scalar lead_inv = field_.inv(d.leading());
  for (std::size_t k = q.size(); k-- > 0;) {
    Scalar t = field_.mul(rem[k + d.c_.size() - 1], lead_inv);
    q[k] = t;
    if (Field::is_zero(t)) continue;
    for (std::size_t j = 0; j < d.c_.size(); ++j) rem[k + j] = field_.sub(rem[k + j], field_.mul(t, d.c_[j]));
  }
  return {Polynomial(field_, std::move(q)), Polynomial(field_, std::move(rem))};
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (Field::is_zero(c_[k])) continue;
    std::string c = field_.to_string(c_[k]);
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c.erase(0, 1);
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool unit = (c == "1");
    if (k == 0 || !unit) os << c;
    if (k >= 1) os << "x";
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace tame
