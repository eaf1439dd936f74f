#include "qshuffle/integer.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <ostream>
#include <stdexcept>

#include "qshuffle/errors.hpp"

namespace qshuffle {

using boost::multiprecision::cpp_int;

struct BigRep {
  cpp_int value;
};

void BigRepDeleter::operator()(BigRep* p) const noexcept { delete p; }


struct IntegerAccess {
  static cpp_int as_big(const Integer& v) { return v.big_ ? v.big_->value : cpp_int(v.small_); }
  static Integer from_big(cpp_int v) {
    Integer out;
    BigRep rep{std::move(v)};
    out.set_from_big(std::move(rep));
    return out;
  }
};

namespace {
const cpp_int kInt64Min = cpp_int(std::numeric_limits<int64_t>::min());
const cpp_int kInt64Max = cpp_int(std::numeric_limits<int64_t>::max());
}  // namespace

Integer::Integer(const std::string& decimal) {
  cpp_int v;
  try {
    v = cpp_int(decimal);
  } catch (const std::exception&) {
    throw Error(ErrorKind::ParseError, "not an integer: '" + decimal + "'");
  }
  set_from_big(BigRep{std::move(v)});
}

Integer::~Integer() = default;

void Integer::copy_big(const Integer& other) {
  big_.reset(new BigRep(*other.big_));
  small_ = 0;
}

void Integer::set_from_big(BigRep&& value) {
  if (value.value >= kInt64Min && value.value <= kInt64Max) {
    small_ = static_cast<int64_t>(value.value);
    big_.reset();
  } else {
    small_ = 0;
    big_.reset(new BigRep(std::move(value)));
  }
}

int Integer::sign() const noexcept {
  if (!big_) return (small_ > 0) - (small_ < 0);
  return big_->value.sign();
}

int64_t Integer::to_int64() const {
  if (big_) throw Error(ErrorKind::InvalidArgument, "integer does not fit in 64 bits: " + to_string());
  return small_;
}

std::string Integer::to_string() const {
  if (!big_) return std::to_string(small_);
  return big_->value.str();
}

Integer& Integer::add_slow(const Integer& rhs, bool subtract) {
  cpp_int a = IntegerAccess::as_big(*this);
  cpp_int b = IntegerAccess::as_big(rhs);
  set_from_big(BigRep{subtract ? cpp_int(a - b) : cpp_int(a + b)});
  return *this;
}

Integer& Integer::mul_slow(const Integer& rhs) {
  cpp_int a = IntegerAccess::as_big(*this);
  cpp_int b = IntegerAccess::as_big(rhs);
  set_from_big(BigRep{cpp_int(a * b)});
  return *this;
}

Integer Integer::operator-() const {
  Integer r = *this;
  r.negate();
  return r;
}

void Integer::negate() {
  if (!big_ && small_ != std::numeric_limits<int64_t>::min()) {
    small_ = -small_;
    return;
  }
  cpp_int a = IntegerAccess::as_big(*this);
  set_from_big(BigRep{cpp_int(-a)});
}

std::pair<Integer, Integer> Integer::divmod(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw Error(ErrorKind::InvalidArgument, "integer division by zero");
  if (!a.big_ && !b.big_ && !(a.small_ == std::numeric_limits<int64_t>::min() && b.small_ == -1)) {
    return {Integer(a.small_ / b.small_), Integer(a.small_ % b.small_)};
  }
  cpp_int x = IntegerAccess::as_big(a);
  cpp_int y = IntegerAccess::as_big(b);
  cpp_int q = x / y;
  cpp_int r = x % y;
  return {IntegerAccess::from_big(std::move(q)), IntegerAccess::from_big(std::move(r))};
}

Integer Integer::gcd(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_) {
    // abs(INT64_MIN) overflows; defer to the big path for it.
    if (a.small_ != std::numeric_limits<int64_t>::min() && b.small_ != std::numeric_limits<int64_t>::min()) {
      int64_t x = a.small_ < 0 ? -a.small_ : a.small_;
      int64_t y = b.small_ < 0 ? -b.small_ : b.small_;
      while (y != 0) {
        int64_t t = x % y;
        x = y;
        y = t;
      }
      return Integer(x);
    }
  }
  cpp_int g = boost::multiprecision::gcd(IntegerAccess::as_big(a), IntegerAccess::as_big(b));
  return IntegerAccess::from_big(std::move(g));
}

int Integer::compare(const Integer& a, const Integer& b) noexcept {
  if (!a.big_ && !b.big_) return (a.small_ > b.small_) - (a.small_ < b.small_);
  cpp_int x = IntegerAccess::as_big(a);
  cpp_int y = IntegerAccess::as_big(b);
  return x.compare(y) < 0 ? -1 : (x.compare(y) > 0 ? 1 : 0);
}

std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.to_string(); }

}  // namespace qshuffle
