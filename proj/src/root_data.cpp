#include "qshuffle/root_data.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>

#include "qshuffle/errors.hpp"

namespace qshuffle {

Weight Weight::simple(std::size_t rank, int i) {
  Weight w(rank);
  w.c_.at(static_cast<std::size_t>(i - 1)) = 1;
  return w;
}

int Weight::height() const noexcept {
  int h = 0;
  for (int x : c_) h += x;
  return h;
}

bool Weight::is_nonnegative() const noexcept {
  return std::all_of(c_.begin(), c_.end(), [](int x) { return x >= 0; });
}

bool Weight::is_zero() const noexcept {
  return std::all_of(c_.begin(), c_.end(), [](int x) { return x == 0; });
}

Weight& Weight::operator+=(const Weight& o) {
  if (o.rank() != rank()) throw Error(ErrorKind::InvalidArgument, "weight rank mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (o.rank() != rank()) throw Error(ErrorKind::InvalidArgument, "weight rank mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

std::string Weight::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << (c_[i] > 0 ? "+" : "");
    if (c_[i] == -1) os << "-";
    else if (c_[i] != 1) os << c_[i];
    os << "a" << (i + 1);
    first = false;
  }
  if (first) return "0";
  return os.str();
}

std::size_t WeightHash::operator()(const Weight& w) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (int x : w.coords()) h = (h ^ static_cast<std::size_t>(x + 1000)) * 0x100000001b3ULL;
  return h;
}

CartanDatum CartanDatum::make(CartanType type, int rank) {
  const int minimum = type == CartanType::A ? 1 : type == CartanType::D ? 4 : 2;
  if (rank < minimum || (type == CartanType::G && rank != 2) || rank > 15) {
    throw Error(ErrorKind::UnsupportedType, "unsupported rank " + std::to_string(rank));
  }
  CartanDatum c;
  c.type_ = type;
  c.rank_ = rank;
  const auto n = static_cast<std::size_t>(rank);
  c.a_.assign(n * n, 0);
  c.d_.assign(n, 1);
  for (int i = 1; i <= rank; ++i) c.a_[c.idx(i, i)] = 2;
  auto link = [&c](int i, int j) {
    c.a_[c.idx(i, j)] = -1;
    c.a_[c.idx(j, i)] = -1;
  };
  switch (type) {
    case CartanType::A:
      for (int i = 1; i < rank; ++i) link(i, i + 1);
      break;
    case CartanType::B:
      for (int i = 2; i < rank; ++i) link(i, i + 1);
      c.a_[c.idx(1, 2)] = -2;
      c.a_[c.idx(2, 1)] = -1;
      for (int i = 2; i <= rank; ++i) c.d_[static_cast<std::size_t>(i - 1)] = 2;
      break;
    case CartanType::C:
      for (int i = 2; i < rank; ++i) link(i, i + 1);
      c.a_[c.idx(1, 2)] = -1;
      c.a_[c.idx(2, 1)] = -2;
      c.d_[0] = 2;
      break;
    case CartanType::D:
      link(1, 3);
      link(2, 3);
      for (int i = 3; i < rank; ++i) link(i, i + 1);
      break;
    case CartanType::G:
      c.a_[c.idx(1, 2)] = -3;
      c.a_[c.idx(2, 1)] = -1;
      c.d_[1] = 3;
      break;
  }
  c.b_.assign(n * n, 0);
  for (int i = 1; i <= rank; ++i) {
    for (int j = 1; j <= rank; ++j) c.b_[c.idx(i, j)] = c.d(i) * c.cartan(i, j);
  }
  for (int i = 1; i <= rank; ++i) {
    for (int j = 1; j <= rank; ++j) {
      if (c.simple_form(i, j) != c.simple_form(j, i)) {
        throw Error(ErrorKind::InvalidArgument, "Cartan datum is not symmetrizable");
      }
    }
  }
  c.compute_positive_roots();
  return c;
}

CartanDatum CartanDatum::parse(const std::string& name) {
  if (name.size() < 2) throw Error(ErrorKind::ParseError, "bad Cartan type '" + name + "'");
  const char t = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
  int rank = 0;
  try {
    std::size_t used = 0;
    rank = std::stoi(name.substr(1), &used);
    if (used != name.size() - 1) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw Error(ErrorKind::ParseError, "bad Cartan type '" + name + "'");
  }
  switch (t) {
    case 'A': return make(CartanType::A, rank);
    case 'B': return make(CartanType::B, rank);
    case 'C': return make(CartanType::C, rank);
    case 'D': return make(CartanType::D, rank);
    case 'G': return make(CartanType::G, rank);
    case 'E':
    case 'F': throw Error(ErrorKind::UnsupportedType, "types E and F are not supported");
    default: throw Error(ErrorKind::ParseError, "bad Cartan type '" + name + "'");
  }
}

std::string CartanDatum::name() const {
  static const char letters[] = {'A', 'B', 'C', 'D', 'G'};
  return std::string(1, letters[static_cast<int>(type_)]) + std::to_string(rank_);
}

int CartanDatum::form(const Weight& x, const Weight& y) const {
  if (x.rank() != static_cast<std::size_t>(rank_) || y.rank() != static_cast<std::size_t>(rank_)) {
    throw Error(ErrorKind::InvalidArgument, "weight rank mismatch");
  }
  int s = 0;
  for (int i = 1; i <= rank_; ++i) {
    const int xi = x[static_cast<std::size_t>(i - 1)];
    if (xi == 0) continue;
    for (int j = 1; j <= rank_; ++j) s += xi * simple_form(i, j) * y[static_cast<std::size_t>(j - 1)];
  }
  return s;
}

Weight CartanDatum::reflect(int i, const Weight& v) const {
  int pairing = 0;
  for (int j = 1; j <= rank_; ++j) pairing += v[static_cast<std::size_t>(j - 1)] * simple_form(j, i);
  Weight r = v;
  r[static_cast<std::size_t>(i - 1)] -= pairing / d(i);
  return r;
}

void CartanDatum::compute_positive_roots() {
  const auto n = static_cast<std::size_t>(rank_);
  std::set<Weight> seen;
  std::vector<Weight> frontier;
  for (int i = 1; i <= rank_; ++i) {
    frontier.push_back(Weight::simple(n, i));
    seen.insert(frontier.back());
  }
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const Weight& v : frontier) {
      for (int i = 1; i <= rank_; ++i) {
        Weight r = reflect(i, v);
        if (r.is_nonnegative() && !r.is_zero() && seen.insert(r).second) next.push_back(r);
      }
    }
    frontier = std::move(next);
  }
  positive_roots_.assign(seen.begin(), seen.end());
  std::stable_sort(positive_roots_.begin(), positive_roots_.end(), [](const Weight& a, const Weight& b) {
    return a.height() < b.height();
  });
}

bool CartanDatum::is_root(const Weight& v) const {
  return std::binary_search(positive_roots_.begin(), positive_roots_.end(), v, [](const Weight& a, const Weight& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a < b;
  });
}

ConvexOrder::ConvexOrder(std::shared_ptr<const CartanDatum> cartan, std::vector<int> reduced_word)
    : cartan_(std::move(cartan)), word_(std::move(reduced_word)) {
  const CartanDatum& c = *cartan_;
  const auto n = static_cast<std::size_t>(c.rank());
  if (word_.size() != c.positive_roots().size()) {
    throw Error(ErrorKind::WrongLength, "reduced word has length " + std::to_string(word_.size()) + ", expected " +
                                            std::to_string(c.positive_roots().size()));
  }
  for (int letter : word_) {
    if (letter < 1 || letter > c.rank()) {
      throw Error(ErrorKind::InvalidArgument, "letter " + std::to_string(letter) + " out of range");
    }
  }
  for (std::size_t k = 0; k < word_.size(); ++k) {
    Weight v = Weight::simple(n, word_[k]);
    for (std::size_t j = k; j-- > 0;) v = c.reflect(word_[j], v);
    if (!v.is_nonnegative() || v.is_zero()) {
      throw Error(ErrorKind::NotReduced, "word " + word_string() + " is not reduced at position " + std::to_string(k + 1));
    }
    roots_.push_back(std::move(v));
  }
}

std::optional<std::size_t> ConvexOrder::position_of(const Weight& beta) const {
  for (std::size_t k = 0; k < roots_.size(); ++k) {
    if (roots_[k] == beta) return k;
  }
  return std::nullopt;
}

std::string ConvexOrder::word_string() const {
  std::string s;
  for (std::size_t k = 0; k < word_.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(word_[k]);
  }
  return s;
}

MVector MVector::unit(std::size_t n, std::size_t k) {
  MVector m = zero(n);
  m.m_.at(k) = 1;
  return m;
}

MVector MVector::parse(const std::string& text) {
  std::vector<int> v = parse_word_list(text);
  for (int x : v) {
    if (x < 0) throw Error(ErrorKind::ParseError, "negative entry in m-vector '" + text + "'");
  }
  return MVector(std::move(v));
}

bool MVector::is_zero() const noexcept {
  return std::all_of(m_.begin(), m_.end(), [](int x) { return x == 0; });
}

Weight MVector::weight(const ConvexOrder& order) const {
  if (m_.size() != order.size()) throw Error(ErrorKind::InvalidArgument, "m-vector length mismatch");
  Weight w(static_cast<std::size_t>(order.cartan().rank()));
  for (std::size_t k = 0; k < m_.size(); ++k) {
    if (m_[k]) w += m_[k] * order.root(k);
  }
  return w;
}

int MVector::degree(const ConvexOrder& order) const { return weight(order).height(); }

MVector& MVector::operator+=(const MVector& o) {
  if (o.size() != size()) throw Error(ErrorKind::InvalidArgument, "m-vector length mismatch");
  for (std::size_t k = 0; k < m_.size(); ++k) m_[k] += o.m_[k];
  return *this;
}

std::string MVector::csv() const {
  std::string s;
  for (std::size_t k = 0; k < m_.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(m_[k]);
  }
  return s;
}

std::string MVector::to_string() const { return "(" + csv() + ")"; }

std::size_t MVectorHash::operator()(const MVector& m) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int x : m.values()) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
  return h;
}

std::optional<std::vector<int>> default_reduced_word(const CartanDatum& cartan) {
  switch (cartan.type()) {
    case CartanType::G: return std::vector<int>{1, 2, 1, 2, 1, 2};
    case CartanType::B:
      if (cartan.rank() == 3) return std::vector<int>{1, 2, 3, 1, 2, 1, 3, 2, 3};
      break;
    case CartanType::C:
      if (cartan.rank() == 3) return std::vector<int>{1, 2, 1, 3, 2, 1, 3, 2, 3};
      break;
    case CartanType::D:
      if (cartan.rank() == 4) return std::vector<int>{1, 3, 2, 4, 3, 1, 4, 3, 2, 4, 3, 4};
      break;
    case CartanType::A: {
      // s1..s_n s1..s_{n-1} ... s1
      std::vector<int> w;
      for (int top = cartan.rank(); top >= 1; --top) {
        for (int i = 1; i <= top; ++i) w.push_back(i);
      }
      return w;
    }
  }
  return std::nullopt;
}

std::vector<int> parse_word_list(const std::string& text) {
  std::vector<int> out;
  std::string cleaned;
  for (char ch : text) {
    if (ch == '(' || ch == ')' || ch == '[' || ch == ']' || ch == ' ') continue;
    cleaned += ch;
  }
  if (cleaned.empty()) return out;
  std::stringstream ss(cleaned);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "cannot parse integer list '" + text + "'");
    }
  }
  return out;
}

std::vector<MVector> kostant_partitions(const ConvexOrder& order, const Weight& nu) {
  std::vector<MVector> out;
  const std::size_t n = order.size();
  std::vector<int> m(n, 0);
  std::function<void(std::size_t, const Weight&)> rec = [&](std::size_t k, const Weight& rest) {
    if (rest.is_zero()) {
      std::fill(m.begin() + static_cast<std::ptrdiff_t>(k), m.end(), 0);
      out.emplace_back(m);
      return;
    }
    if (k == n) return;
    int maxc = 1 << 20;
    for (std::size_t i = 0; i < rest.rank(); ++i) {
      if (order.root(k)[i] > 0) maxc = std::min(maxc, rest[i] / order.root(k)[i]);
    }
    for (int c = maxc; c >= 0; --c) {
      m[k] = c;
      rec(k + 1, rest - c * order.root(k));
    }
    m[k] = 0;
  };
  if (!nu.is_nonnegative()) return out;
  rec(0, nu);
  return out;
}

}  // namespace qshuffle
