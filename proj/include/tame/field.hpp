#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace tame {

/// Field elements are stored as GMP rationals. Over GF(p) every value is an
/// integer in [0, p); over Q it is a canonical reduced fraction.
using Scalar = mpq_class;

class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The coefficient field: either GF(p) for a prime p <= 2^31 - 1 or Q.
class Field {
 public:
  static constexpr std::int64_t kMaxPrime = 2147483647;

  static Field prime(std::int64_t p);
  static Field rationals() { return Field{0}; }

  Field() = default;

  bool is_prime() const { return p_ != 0; }
  bool is_rational() const { return p_ == 0; }
  /// 0 for Q.
  std::int64_t characteristic() const { return p_; }

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return Scalar(1); }
  Scalar from_int(long v) const;
  Scalar from_mpz(const mpz_class& v) const;
  /// Accepts "a", "-a" or "a/b".
  Scalar parse(const std::string& text) const;
  /// Maps an arbitrary rational into canonical form for this field.
  Scalar canonical(const Scalar& v) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  static bool is_zero(const Scalar& a) { return sgn(a) == 0; }

  std::string to_string(const Scalar& a) const;
  /// "GF(5)" or "Q".
  std::string name() const;

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }

 private:
  explicit Field(std::int64_t p) : p_(p) {}
  std::int64_t p_ = 0;
};

bool is_prime_number(std::int64_t n);

}  // namespace tame
