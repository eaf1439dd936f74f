#include "qshuffle/type_a.hpp"

#include <algorithm>
#include <sstream>

#include "qshuffle/dcb.hpp"
#include "qshuffle/errors.hpp"

namespace qshuffle {

Multisegment::Multisegment(std::vector<Segment> segments) : segs_(std::move(segments)) {
  for (const Segment& s : segs_) {
    if (s.a < 1 || s.b < s.a) {
      throw Error(ErrorKind::InvalidArgument, "bad segment [" + std::to_string(s.a) + "," + std::to_string(s.b) + "]");
    }
  }
  std::sort(segs_.begin(), segs_.end());
}

Multisegment Multisegment::parse(const std::string& text) {
  std::vector<Segment> segs;
  std::size_t pos = 0;
  while (true) {
    const std::size_t open = text.find('[', pos);
    if (open == std::string::npos) break;
    const std::size_t close = text.find(']', open);
    if (close == std::string::npos) throw Error(ErrorKind::ParseError, "unbalanced '[' in '" + text + "'");
    const std::vector<int> run = parse_word_list(text.substr(open + 1, close - open - 1));
    if (run.empty()) throw Error(ErrorKind::ParseError, "empty segment in '" + text + "'");
    for (std::size_t i = 1; i < run.size(); ++i) {
      if (run[i] != run[i - 1] + 1) throw Error(ErrorKind::ParseError, "segment is not a run: '" + text + "'");
    }
    segs.push_back(Segment{run.front(), run.back()});
    pos = close + 1;
  }
  for (char c : text.substr(pos)) {
    if (c != ' ' && c != ',') throw Error(ErrorKind::ParseError, "trailing text in '" + text + "'");
  }
  return Multisegment(std::move(segs));
}

int Multisegment::degree() const noexcept {
  int d = 0;
  for (const Segment& s : segs_) d += s.length();
  return d;
}

Multisegment Multisegment::operator+(const Multisegment& o) const {
  std::vector<Segment> v = segs_;
  v.insert(v.end(), o.segs_.begin(), o.segs_.end());
  return Multisegment(std::move(v));
}

std::string Multisegment::to_string() const {
  std::string s;
  for (const Segment& seg : segs_) {
    if (!s.empty()) s += ',';
    s += '[';
    for (int i = seg.a; i <= seg.b; ++i) {
      if (i > seg.a) s += ',';
      s += std::to_string(i);
    }
    s += ']';
  }
  return s;
}

namespace {

void require_default_type_a(const LyndonTable& table) {
  if (table.cartan().type() != CartanType::A) {
    throw Error(ErrorKind::WrongType, "multisegments need type A, got " + table.cartan().name());
  }
  if (table.order().reduced_word() != *default_reduced_word(table.cartan())) {
    throw Error(ErrorKind::NonDefaultOrder, "multisegments need the default reduced word");
  }
}

Segment segment_of(const Weight& beta) {
  int a = 0, b = 0;
  for (std::size_t i = 0; i < beta.rank(); ++i) {
    if (beta[i] == 0) continue;
    if (beta[i] != 1 || (a && b != static_cast<int>(i))) {
      throw Error(ErrorKind::WrongType, beta.to_string() + " is not a segment");
    }
    if (!a) a = static_cast<int>(i + 1);
    b = static_cast<int>(i + 1);
  }
  return Segment{a, b};
}

}  // namespace

Multisegment mvector_to_multisegment(const LyndonTable& table, const MVector& m) {
  require_default_type_a(table);
  if (m.size() != table.size()) throw Error(ErrorKind::InvalidArgument, "m-vector length mismatch");
  std::vector<Segment> segs;
  for (std::size_t k = 0; k < m.size(); ++k) {
    for (int j = 0; j < m[k]; ++j) segs.push_back(segment_of(table.order().root(k)));
  }
  return Multisegment(std::move(segs));
}

MVector multisegment_to_mvector(const LyndonTable& table, const Multisegment& ms) {
  require_default_type_a(table);
  const auto rank = static_cast<std::size_t>(table.cartan().rank());
  MVector m = MVector::zero(table.size());
  for (const Segment& s : ms.segments()) {
    if (s.b > static_cast<int>(rank)) {
      throw Error(ErrorKind::InvalidArgument, "segment exceeds rank " + std::to_string(rank));
    }
    Weight beta(rank);
    for (int i = s.a; i <= s.b; ++i) beta[static_cast<std::size_t>(i - 1)] = 1;
    m[*table.order().position_of(beta)] += 1;
  }
  return m;
}

void DrinfeldSet::add_root(int k, int e) {
  auto& v = polys_[k];
  v.insert(std::upper_bound(v.begin(), v.end(), e), e);
}

DrinfeldSet DrinfeldSet::operator+(const DrinfeldSet& o) const {
  DrinfeldSet r = *this;
  for (const auto& [k, es] : o.polys_) {
    for (int e : es) r.add_root(k, e);
  }
  return r;
}

std::string DrinfeldSet::to_string() const {
  std::ostringstream os;
  for (const auto& [k, es] : polys_) {
    os << "P_" << k << "(u) = ";
    for (int e : es) os << "(u - q^" << -e << ")";
    os << "\n";
  }
  return os.str();
}

DrinfeldSet drinfeld(const Multisegment& ms, int n) {
  DrinfeldSet d;
  for (const Segment& s : ms.segments()) {
    if (s.length() >= n) {
      throw Error(ErrorKind::SegmentTooLong, "segment of length " + std::to_string(s.length()) + " with N = " +
                                                 std::to_string(n));
    }
    d.add_root(s.length(), s.a + s.b);
  }
  return d;
}

Integer dimension_eval(const ShuffleElement& x) {
  Integer total(0);
  for (const auto& [w, c] : x.terms()) total += c.evaluate_at_one();
  return total;
}

Integer dimension_eval_pbw(DCBEngine& engine, const MVector& m) {
  const LyndonTable& t = engine.table();
  std::vector<Integer> root_dim(t.size());
  for (std::size_t k = 0; k < t.size(); ++k) root_dim[k] = dimension_eval(t.root_vector(k));
  Integer total(0);
  for (const auto& [p, c] : engine.pbw_coordinates(m)) {
    // multinomial over the factor degrees, built one binomial at a time
    Integer term = c.evaluate_at_one();
    int placed = 0;
    for (std::size_t k = 0; k < p.size(); ++k) {
      const int len = t.order().root(k).height();
      for (int j = 0; j < p[k]; ++j) {
        for (int i = 1; i <= len; ++i) {
          term *= Integer(placed + i);
          term = term / Integer(i);
        }
        placed += len;
        term *= root_dim[k];
      }
    }
    total += term;
  }
  return total;
}

}  // namespace qshuffle
