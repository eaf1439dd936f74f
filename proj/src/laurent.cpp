#include "qshuffle/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include "qshuffle/errors.hpp"

namespace qshuffle {

namespace {

using Dense = std::vector<Integer>;  // coefficient k of q^k, k >= 0

void trim_dense(Dense& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Integer dense_content(const Dense& p) {
  Integer g(0);
  for (const auto& c : p) {
    if (!c.is_zero()) g = Integer::gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

Dense primitive_part(Dense p) {
  Integer c = dense_content(p);
  if (c.is_zero() || c.is_one()) return p;
  for (auto& x : p) x = Integer::divmod(x, c).first;
  return p;
}

// Pseudo-remainder of a by b (deg b >= 0).
Dense pseudo_remainder(Dense a, const Dense& b) {
  const std::size_t db = b.size() - 1;
  const Integer& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    Integer la = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (auto& x : a) x *= lb;
    for (std::size_t k = 0; k <= db; ++k) a[k + shift] -= la * b[k];
    trim_dense(a);
  }
  return a;
}

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  LaurentPoly parse() {
    LaurentPoly v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw Error(ErrorKind::ParseError, "Laurent polynomial '" + s_ + "': " + msg);
  }

  LaurentPoly expr() {
    LaurentPoly acc;
    bool first = true;
    while (true) {
      skip();
      int sign = 1;
      if (peek('+')) {
        ++pos_;
      } else if (peek('-')) {
        ++pos_;
        sign = -1;
      } else if (!first) {
        break;
      }
      LaurentPoly t = term();
      if (sign < 0) t = -t;
      acc += t;
      first = false;
      if (!peek('+') && !peek('-')) break;
    }
    return acc;
  }

  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'q' || c == '(' || c == '*';
  }

  LaurentPoly term() {
    LaurentPoly v = factor();
    while (starts_factor()) {
      if (peek('*')) ++pos_;
      v *= factor();
    }
    return v;
  }

  int exponent() {
    skip();
    bool braced = false;
    if (peek('{')) {
      ++pos_;
      braced = true;
    }
    skip();
    int sign = 1;
    if (peek('-')) {
      ++pos_;
      sign = -1;
    } else if (peek('+')) {
      ++pos_;
    }
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    int e = std::stoi(s_.substr(start, pos_ - start)) * sign;
    if (braced) {
      if (!peek('}')) fail("expected '}'");
      ++pos_;
    }
    return e;
  }

  LaurentPoly factor() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      LaurentPoly v = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return v;
    }
    if (c == 'q') {
      ++pos_;
      int e = 1;
      if (peek('^')) {
        ++pos_;
        e = exponent();
      }
      return LaurentPoly::monomial(e);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return LaurentPoly(Integer(s_.substr(start, pos_ - start)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::monomial(int exponent, const Integer& coeff) {
  LaurentPoly p;
  if (!coeff.is_zero()) {
    p.lo_ = exponent;
    p.coeffs_.push_back(coeff);
  }
  return p;
}

LaurentPoly LaurentPoly::from_terms(const std::vector<std::pair<int, Integer>>& terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) p += monomial(e, c);
  return p;
}

LaurentPoly LaurentPoly::parse(const std::string& text) { return Parser(text).parse(); }

LaurentPoly LaurentPoly::quantum_integer(int n, int d) {
  LaurentPoly p;
  for (int j = 0; j < n; ++j) p += monomial(d * (n - 1 - 2 * j));
  return p;
}

LaurentPoly LaurentPoly::quantum_factorial(int n, int d) {
  LaurentPoly p(1);
  for (int s = 2; s <= n; ++s) p *= quantum_integer(s, d);
  return p;
}

Integer LaurentPoly::coefficient(int exponent) const {
  if (coeffs_.empty() || exponent < lo_ || exponent > max_exponent()) return Integer(0);
  return coeffs_[static_cast<std::size_t>(exponent - lo_)];
}

std::vector<std::pair<int, Integer>> LaurentPoly::terms() const {
  std::vector<std::pair<int, Integer>> out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (!coeffs_[k].is_zero()) out.emplace_back(lo_ + static_cast<int>(k), coeffs_[k]);
  }
  return out;
}

std::size_t LaurentPoly::term_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return !c.is_zero(); }));
}

std::optional<int> LaurentPoly::pure_power() const {
  if (coeffs_.size() == 1 && coeffs_[0].is_one()) return lo_;
  return std::nullopt;
}

bool LaurentPoly::is_monomial() const { return coeffs_.size() == 1; }

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r;
  if (coeffs_.empty()) return r;
  r.lo_ = -max_exponent();
  r.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  return r;
}

bool LaurentPoly::is_bar_invariant() const { return *this == bar(); }

bool LaurentPoly::is_bar_antisymmetric() const { return (*this + bar()).is_zero(); }

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  if (!r.coeffs_.empty()) r.lo_ += k;
  return r;
}

Integer LaurentPoly::evaluate_at_one() const {
  Integer s(0);
  for (const auto& c : coeffs_) s += c;
  return s;
}

void LaurentPoly::add_scaled_shifted(const LaurentPoly& src, int shift, const Integer* scale) {
  if (src.coeffs_.empty()) return;
  if (scale && scale->is_zero()) return;
  const int slo = src.lo_ + shift;
  const int shi = src.max_exponent() + shift;
  if (coeffs_.empty()) {
    lo_ = slo;
    coeffs_ = src.coeffs_;
    if (scale) {
      for (auto& c : coeffs_) c *= *scale;
    }
    return;
  }
  if (slo < lo_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(lo_ - slo), Integer(0));
    lo_ = slo;
  }
  if (shi > max_exponent()) coeffs_.resize(static_cast<std::size_t>(shi - lo_ + 1));
  const std::size_t off = static_cast<std::size_t>(slo - lo_);
  if (scale) {
    for (std::size_t k = 0; k < src.coeffs_.size(); ++k) coeffs_[off + k].add_product(src.coeffs_[k], *scale);
  } else {
    for (std::size_t k = 0; k < src.coeffs_.size(); ++k) coeffs_[off + k] += src.coeffs_[k];
  }
  trim();
}

void LaurentPoly::add_product(const LaurentPoly& a, const LaurentPoly& b, int shift) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return;
  const int plo = a.lo_ + b.lo_ + shift;
  const int phi = a.max_exponent() + b.max_exponent() + shift;
  if (coeffs_.empty()) {
    lo_ = plo;
    coeffs_.assign(static_cast<std::size_t>(phi - plo + 1), Integer(0));
  } else {
    if (plo < lo_) {
      coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(lo_ - plo), Integer(0));
      lo_ = plo;
    }
    if (phi > max_exponent()) coeffs_.resize(static_cast<std::size_t>(phi - lo_ + 1));
  }
  const std::size_t off = static_cast<std::size_t>(plo - lo_);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) coeffs_[off + i + j].add_product(a.coeffs_[i], b.coeffs_[j]);
  }
  trim();
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  static const Integer kMinusOne(-1);
  add_scaled_shifted(rhs, 0, &kMinusOne);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_) c.negate();
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  r.add_product(a, b, 0);
  return r;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by the zero polynomial");
  if (a.is_zero()) return LaurentPoly();
  if (a.coeffs_.size() < b.coeffs_.size()) return std::nullopt;
  // Both are q^lo times a polynomial with nonzero constant term, so
  // divisibility in the Laurent ring is divisibility of those polynomials.
  Dense rem = a.coeffs_;
  const Dense& d = b.coeffs_;
  const std::size_t dq = rem.size() - d.size();
  Dense quot(dq + 1);
  const Integer& lb = d.back();
  for (std::size_t k = dq + 1; k-- > 0;) {
    const Integer& top = rem[k + d.size() - 1];
    if (top.is_zero()) continue;
    auto [qk, rk] = Integer::divmod(top, lb);
    if (!rk.is_zero()) return std::nullopt;
    for (std::size_t j = 0; j < d.size(); ++j) rem[k + j] -= qk * d[j];
    quot[k] = std::move(qk);
  }
  for (const auto& r : rem) {
    if (!r.is_zero()) return std::nullopt;
  }
  LaurentPoly out;
  out.lo_ = a.lo_ - b.lo_;
  out.coeffs_ = std::move(quot);
  out.trim();
  return out;
}

LaurentPoly LaurentPoly::operator/(const LaurentPoly& b) const {
  auto r = divide_exact(*this, b);
  if (!r) throw Error(ErrorKind::InexactDivision, "(" + to_string() + ") / (" + b.to_string() + ")");
  return *std::move(r);
}

Integer LaurentPoly::content() const { return dense_content(coeffs_); }

LaurentPoly LaurentPoly::gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return LaurentPoly();
  if (a.is_zero() || b.is_zero()) {
    const LaurentPoly& x = a.is_zero() ? b : a;
    LaurentPoly r;
    r.lo_ = 0;
    r.coeffs_ = x.coeffs_;
    if (r.coeffs_.back().sign() < 0) r = -r;
    return r;
  }
  Integer c = Integer::gcd(a.content(), b.content());
  Dense x = primitive_part(a.coeffs_);
  Dense y = primitive_part(b.coeffs_);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    Dense r = pseudo_remainder(x, y);
    x = std::move(y);
    y = primitive_part(std::move(r));
  }
  x = primitive_part(std::move(x));
  if (x.back().sign() < 0) {
    for (auto& v : x) v.negate();
  }
  for (auto& v : x) v *= c;
  LaurentPoly out;
  out.lo_ = 0;
  out.coeffs_ = std::move(x);
  out.trim();
  return out;
}

bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.lo_ != b.lo_) return a.lo_ < b.lo_;
  if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() < b.coeffs_.size();
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) {
    int c = Integer::compare(a.coeffs_[k], b.coeffs_[k]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::size_t LaurentPoly::hash() const noexcept {
  std::size_t h = std::hash<int>()(lo_) * 0x9e3779b97f4a7c15ULL;
  for (const auto& c : coeffs_) {
    std::size_t v = c.is_small() ? std::hash<int64_t>()(c.small_value()) : std::hash<std::string>()(c.to_string());
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::string LaurentPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Integer& c = coeffs_[k];
    if (c.is_zero()) continue;
    const int e = lo_ + static_cast<int>(k);
    Integer mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (!mag.is_one()) os << mag;
    os << "q";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

void LaurentPoly::trim() {
  std::size_t first = 0;
  while (first < coeffs_.size() && coeffs_[first].is_zero()) ++first;
  if (first == coeffs_.size()) {
    coeffs_.clear();
    lo_ = 0;
    return;
  }
  std::size_t last = coeffs_.size();
  while (coeffs_[last - 1].is_zero()) --last;
  if (first > 0 || last < coeffs_.size()) {
    coeffs_.erase(coeffs_.begin() + static_cast<std::ptrdiff_t>(last), coeffs_.end());
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(first));
    lo_ += static_cast<int>(first);
  }
}

bool band_test(const LaurentPoly& a, int m, int s) {
  if (a.is_zero()) return true;
  return a.min_exponent() >= m + 1 && a.max_exponent() <= s - 1;
}

LaurentPoly kl_solve(const LaurentPoly& rho) {
  if (!rho.is_bar_antisymmetric()) {
    throw Error(ErrorKind::NotAntisymmetric, "kl_solve: rho = " + rho.to_string() + " is not bar-antisymmetric");
  }
  std::vector<std::pair<int, Integer>> positive;
  for (auto& [e, c] : rho.terms()) {
    if (e > 0) positive.emplace_back(e, c);
  }
  return LaurentPoly::from_terms(positive);
}

}  // namespace qshuffle
