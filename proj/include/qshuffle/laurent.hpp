#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qshuffle/integer.hpp"

namespace qshuffle {

// Exact element of Z[q, q^-1].
//
// Stored densely: coeffs_[k] is the coefficient of q^(lo_ + k). Both ends are
// trimmed so that the first and last stored coefficients are nonzero, which
// makes equality structural; the zero polynomial has no coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const Integer& c) { if (!c.is_zero()) { lo_ = 0; coeffs_.push_back(c); } }  // NOLINT
  LaurentPoly(int64_t c) : LaurentPoly(Integer(c)) {}  // NOLINT
  LaurentPoly(int c) : LaurentPoly(Integer(c)) {}      // NOLINT

  static LaurentPoly monomial(int exponent, const Integer& coeff = Integer(1));
  static LaurentPoly q() { return monomial(1); }
  // Builds from (exponent, coefficient) pairs; repeated exponents add.
  static LaurentPoly from_terms(const std::vector<std::pair<int, Integer>>& terms);
  // Parses expressions such as "q^2 + 2 + q^-2", "2(1+q^{-2})" or "-3*q^4".
  // Juxtaposition multiplies.
  static LaurentPoly parse(const std::string& text);
  // [n]_{q^d} = (q^{dn} - q^{-dn}) / (q^d - q^{-d}).
  static LaurentPoly quantum_integer(int n, int d = 1);
  static LaurentPoly quantum_factorial(int n, int d = 1);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  // Exponent range; only meaningful for nonzero polynomials.
  int min_exponent() const noexcept { return lo_; }
  int max_exponent() const noexcept { return lo_ + static_cast<int>(coeffs_.size()) - 1; }
  Integer coefficient(int exponent) const;
  const Integer& top_coefficient() const { return coeffs_.back(); }
  std::size_t dense_size() const noexcept { return coeffs_.size(); }
  // Nonzero terms in increasing exponent order.
  std::vector<std::pair<int, Integer>> terms() const;
  std::size_t term_count() const noexcept;

  // If this equals q^k exactly (coefficient +1), returns k.
  std::optional<int> pure_power() const;
  bool is_monomial() const;

  LaurentPoly bar() const;
  bool is_bar_invariant() const;
  bool is_bar_antisymmetric() const;
  LaurentPoly shifted(int k) const;
  Integer evaluate_at_one() const;

  LaurentPoly& operator+=(const LaurentPoly& rhs) { add_scaled_shifted(rhs, 0, nullptr); return *this; }
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  LaurentPoly operator-() const;
  // *this += q^shift * src (optionally times an integer scale).
  void add_shifted(const LaurentPoly& src, int shift) { add_scaled_shifted(src, shift, nullptr); }
  void add_scaled_shifted(const LaurentPoly& src, int shift, const Integer* scale);
  // *this += q^shift * a * b without materializing the product.
  void add_product(const LaurentPoly& a, const LaurentPoly& b, int shift = 0);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  // Exact quotient in Z[q,q^-1], or nullopt when b does not divide a there.
  static std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b);
  // Throws InexactDivision when the quotient is not Laurent-integral.
  LaurentPoly operator/(const LaurentPoly& b) const;

  // Integer content (gcd of coefficients, positive); 0 for the zero polynomial.
  Integer content() const;
  // Greatest common divisor in Z[q,q^-1], normalized to lowest exponent 0 and
  // positive top coefficient.
  static LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.lo_ == b.lo_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }
  // Arbitrary but fixed total order, for deterministic sorting.
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b);

  std::size_t hash() const noexcept;
  // Human readable, highest power first: "q^2 + 2 + q^-2".
  std::string to_string() const;

 private:
  void trim();

  int lo_ = 0;
  std::vector<Integer> coeffs_;
};

// True iff every exponent e of a satisfies m+1 <= e <= s-1, i.e. a lies in
// q^{m+1}Z[q] intersected with q^{s-1}Z[q^-1].
bool band_test(const LaurentPoly& a, int m, int s);

// The unique kappa in qZ[q] with kappa - bar(kappa) = rho. Requires rho to be
// bar-antisymmetric (which forces a zero constant term); otherwise throws
// NotAntisymmetric.
LaurentPoly kl_solve(const LaurentPoly& rho);

}  // namespace qshuffle
