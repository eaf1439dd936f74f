#pragma once

#include <optional>
#include <string>

#include "qshuffle/laurent.hpp"

namespace qshuffle {

// Element of Q(q) held as a reduced fraction of Laurent polynomials.
// Normal form: gcd(num, den) = 1, den has lowest exponent 0 and a positive top
// coefficient. With that normal form equality is structural and a fraction
// whose value lies in Z[q,q^-1] has den == 1.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(LaurentPoly num) : num_(std::move(num)), den_(1) {}  // NOLINT
  RationalFunction(LaurentPoly num, LaurentPoly den);

  const LaurentPoly& numerator() const noexcept { return num_; }
  const LaurentPoly& denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_laurent() const { return den_ == LaurentPoly(1); }
  std::optional<LaurentPoly> to_laurent() const;
  RationalFunction bar() const;

  RationalFunction& operator+=(const RationalFunction& rhs);
  RationalFunction& operator-=(const RationalFunction& rhs);
  RationalFunction& operator*=(const RationalFunction& rhs);
  RationalFunction& operator/=(const RationalFunction& rhs);
  RationalFunction operator-() const;

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void normalize();

  LaurentPoly num_;
  LaurentPoly den_;
};

}  // namespace qshuffle
