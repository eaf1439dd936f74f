#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <utility>

namespace qshuffle {

struct BigRep;
struct BigRepDeleter {
  void operator()(BigRep* p) const noexcept;
};

// Arbitrary-precision integer. Values that fit in int64 are kept inline and
// operated on with overflow-checked machine arithmetic; anything larger spills
// into a heap-allocated multiprecision integer. The representation is always
// normalized: a value that fits in int64 is never stored as big.
class Integer {
 public:
  Integer() noexcept = default;
  Integer(int64_t v) noexcept : small_(v) {}  // NOLINT(google-explicit-constructor)
  Integer(int v) noexcept : small_(v) {}      // NOLINT(google-explicit-constructor)
  explicit Integer(const std::string& decimal);

  Integer(const Integer& other) : small_(other.small_) {
    if (other.big_) copy_big(other);
  }
  Integer(Integer&& other) noexcept = default;
  Integer& operator=(const Integer& other) {
    if (this != &other) {
      if (other.big_) {
        copy_big(other);
      } else {
        big_.reset();
        small_ = other.small_;
      }
    }
    return *this;
  }
  Integer& operator=(Integer&& other) noexcept = default;
  ~Integer();

  bool is_small() const noexcept { return !big_; }
  bool is_zero() const noexcept { return !big_ && small_ == 0; }
  bool is_one() const noexcept { return !big_ && small_ == 1; }
  int sign() const noexcept;
  // Only valid when is_small().
  int64_t small_value() const noexcept { return small_; }
  bool fits_int64() const noexcept { return !big_; }
  int64_t to_int64() const;  // throws when the value does not fit
  std::string to_string() const;

  Integer& operator+=(const Integer& rhs) {
    if (!big_ && !rhs.big_) {
      int64_t r;
      if (!__builtin_add_overflow(small_, rhs.small_, &r)) {
        small_ = r;
        return *this;
      }
    }
    return add_slow(rhs, false);
  }
  Integer& operator-=(const Integer& rhs) {
    if (!big_ && !rhs.big_) {
      int64_t r;
      if (!__builtin_sub_overflow(small_, rhs.small_, &r)) {
        small_ = r;
        return *this;
      }
    }
    return add_slow(rhs, true);
  }
  Integer& operator*=(const Integer& rhs) {
    if (!big_ && !rhs.big_) {
      int64_t r;
      if (!__builtin_mul_overflow(small_, rhs.small_, &r)) {
        small_ = r;
        return *this;
      }
    }
    return mul_slow(rhs);
  }
  // Adds a*b to *this (the hot path of polynomial multiplication).
  void add_product(const Integer& a, const Integer& b) {
    if (!big_ && !a.big_ && !b.big_) {
      int64_t p, r;
      if (!__builtin_mul_overflow(a.small_, b.small_, &p) && !__builtin_add_overflow(small_, p, &r)) {
        small_ = r;
        return;
      }
    }
    Integer t = a;
    t *= b;
    *this += t;
  }

  Integer operator-() const;
  void negate();

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }

  // Truncating division (quotient rounds toward zero, remainder has the sign
  // of the dividend). Division by zero throws.
  static std::pair<Integer, Integer> divmod(const Integer& a, const Integer& b);
  friend Integer operator/(const Integer& a, const Integer& b) { return divmod(a, b).first; }
  friend Integer operator%(const Integer& a, const Integer& b) { return divmod(a, b).second; }

  static Integer gcd(const Integer& a, const Integer& b);
  Integer abs() const { return sign() < 0 ? -*this : *this; }

  friend bool operator==(const Integer& a, const Integer& b) noexcept {
    if (!a.big_ && !b.big_) return a.small_ == b.small_;
    return compare(a, b) == 0;
  }
  friend bool operator!=(const Integer& a, const Integer& b) noexcept { return !(a == b); }
  friend bool operator<(const Integer& a, const Integer& b) noexcept { return compare(a, b) < 0; }
  friend bool operator>(const Integer& a, const Integer& b) noexcept { return compare(a, b) > 0; }
  friend bool operator<=(const Integer& a, const Integer& b) noexcept { return compare(a, b) <= 0; }
  friend bool operator>=(const Integer& a, const Integer& b) noexcept { return compare(a, b) >= 0; }
  static int compare(const Integer& a, const Integer& b) noexcept;

  friend std::ostream& operator<<(std::ostream& os, const Integer& v);

 private:
  void copy_big(const Integer& other);
  Integer& add_slow(const Integer& rhs, bool subtract);
  Integer& mul_slow(const Integer& rhs);
  void set_from_big(BigRep&& value);

  int64_t small_ = 0;
  std::unique_ptr<BigRep, BigRepDeleter> big_;

  friend struct IntegerAccess;
};

}  // namespace qshuffle
