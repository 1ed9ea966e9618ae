#include "tame/field.hpp"

#include <sstream>

namespace tame {

bool is_prime_number(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::int64_t p) {
  if (p > kMaxPrime || !is_prime_number(p))
    throw FieldError("field characteristic must be a prime <= 2^31-1, got " + std::to_string(p));
  return Field{p};
}

Scalar Field::from_mpz(const mpz_class& v) const {
  if (is_rational()) return Scalar(v);
  mpz_class r;
  mpz_class mod(static_cast<long>(p_));
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), mod.get_mpz_t());
  return Scalar(r);
}

Scalar Field::from_int(long v) const { return from_mpz(mpz_class(v)); }

Scalar Field::canonical(const Scalar& v) const {
  if (is_rational()) {
    Scalar c = v;
    c.canonicalize();
    return c;
  }
  Scalar num = from_mpz(v.get_num());
  Scalar den = from_mpz(v.get_den());
  if (is_zero(den)) throw FieldError("denominator divisible by the characteristic");
  return mul(num, inv(den));
}

Scalar Field::parse(const std::string& text) const {
  Scalar v;
  if (v.set_str(text, 10) != 0) throw FieldError("not a rational number: '" + text + "'");
  if (v.get_den() == 0) throw FieldError("zero denominator: '" + text + "'");
  v.canonicalize();
  return canonical(v);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (is_rational()) return Scalar(a + b);
  mpz_class s = a.get_num() + b.get_num();
  if (s >= p_) s -= p_;
  return Scalar(s);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (is_rational()) return Scalar(a - b);
  mpz_class s = a.get_num() - b.get_num();
  if (s < 0) s += p_;
  return Scalar(s);
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (is_rational()) return Scalar(a * b);
  return from_mpz(a.get_num() * b.get_num());
}

Scalar Field::neg(const Scalar& a) const {
  if (is_rational()) return Scalar(-a);
  if (is_zero(a)) return a;
  return Scalar(mpz_class(static_cast<long>(p_)) - a.get_num());
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) throw FieldError("division by zero");
  if (is_rational()) return Scalar(1 / a);
  mpz_class r;
  mpz_class mod(static_cast<long>(p_));
  mpz_invert(r.get_mpz_t(), a.get_num_mpz_t(), mod.get_mpz_t());
  return Scalar(r);
}

std::string Field::to_string(const Scalar& a) const { return a.get_str(10); }

std::string Field::name() const {
  if (is_rational()) return "Q";
  std::ostringstream os;
  os << "GF(" << p_ << ")";
  return os.str();
}

}  // namespace tame
