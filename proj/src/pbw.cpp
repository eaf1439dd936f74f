#include "qshuffle/pbw.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qshuffle/errors.hpp"

namespace qshuffle {

std::vector<Word> good_lyndon_words(const CartanDatum& cartan) {
  const auto& roots = cartan.positive_roots();
  const auto r = static_cast<std::size_t>(cartan.rank());
  std::map<Weight, Word> l;
  for (const Weight& beta : roots) {
    if (beta.height() == 1) {
      for (std::size_t i = 0; i < r; ++i) {
        if (beta[i] == 1) l[beta] = Word(1, static_cast<char>(i + 1));
      }
      continue;
    }
    Word best;
    for (const Weight& b1 : roots) {
      if (b1.height() >= beta.height()) break;
      Weight b2 = beta - b1;
      auto i1 = l.find(b1);
      auto i2 = l.find(b2);
      if (i1 == l.end() || i2 == l.end()) continue;
      if (!(i1->second < i2->second)) continue;
      Word cand = i1->second + i2->second;
      if (cand > best) best = cand;
    }
    if (best.empty()) throw Error(ErrorKind::CalibrationFailure, "no Lyndon word for root " + beta.to_string());
    l[beta] = best;
  }
  std::vector<Word> out;
  out.reserve(roots.size());
  for (const Weight& beta : roots) out.push_back(l.at(beta));
  return out;
}

std::vector<int> lyndon_reduced_word(const CartanDatum& cartan) {
  const auto& roots = cartan.positive_roots();
  const std::vector<Word> words = good_lyndon_words(cartan);
  std::vector<std::size_t> idx(roots.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return words[a] < words[b]; });
  std::vector<int> word;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    Weight v = roots[idx[k]];
    for (int letter : word) v = cartan.reflect(letter, v);
    if (v.height() != 1 || !v.is_nonnegative()) {
      throw Error(ErrorKind::CalibrationFailure, "Lyndon order is not convex at " + roots[idx[k]].to_string());
    }
    for (std::size_t i = 0; i < v.rank(); ++i) {
      if (v[i] == 1) word.push_back(static_cast<int>(i + 1));
    }
  }
  return word;
}

LaurentPoly run_factorial(const CartanDatum& cartan, const Word& w) {
  LaurentPoly d(1);
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (j - i > 1) d *= LaurentPoly::quantum_factorial(static_cast<int>(j - i), cartan.d(w[i]));
    i = j;
  }
  return d;
}

namespace {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

LaurentPoly lattice_primitive_factor(const ShuffleElement& x) {
  LaurentPoly k(1);
  for (const auto& [w, c] : x.terms()) {
    LaurentPoly d = run_factorial(x.cartan(), w);
    if (d == LaurentPoly(1)) continue;
    LaurentPoly g = LaurentPoly::gcd(d, c);
    LaurentPoly need = d / g;
    LaurentPoly h = LaurentPoly::gcd(k, need);
    k = k * (need / h);
  }
  if (k.top_coefficient().sign() < 0) k = -k;
  return k.shifted(floor_div(-(k.min_exponent() + k.max_exponent()), 2));
}

LyndonTable::LyndonTable(std::shared_ptr<const ConvexOrder> order) : order_(std::move(order)) {
  compute_lyndon_words();
  compute_root_vectors();
}

std::shared_ptr<const LyndonTable> LyndonTable::build(const std::string& cartan_name,
                                                      const std::vector<int>& reduced_word) {
  auto cartan = std::make_shared<const CartanDatum>(CartanDatum::parse(cartan_name));
  std::vector<int> word = reduced_word;
  if (word.empty()) {
    auto def = default_reduced_word(*cartan);
    word = def ? *def : lyndon_reduced_word(*cartan);
  }
  auto order = std::make_shared<const ConvexOrder>(cartan, word);
  return std::make_shared<const LyndonTable>(order);
}

void LyndonTable::compute_lyndon_words() {
  const CartanDatum& c = cartan();
  const std::vector<Word> words = good_lyndon_words(c);
  const auto& roots = c.positive_roots();
  lyndon_.resize(size());
  for (std::size_t k = 0; k < size(); ++k) {
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (roots[j] == order_->root(k)) lyndon_[k] = words[j];
    }
    lyndon_index_[lyndon_[k]] = k;
  }
  lyndon_sorted_.resize(size());
  std::iota(lyndon_sorted_.begin(), lyndon_sorted_.end(), 0);
  std::sort(lyndon_sorted_.begin(), lyndon_sorted_.end(),
            [&](std::size_t a, std::size_t b) { return lyndon_[a] < lyndon_[b]; });
  matches_ = true;
  for (std::size_t k = 0; k < size(); ++k) {
    if (lyndon_sorted_[k] != k) matches_ = false;
  }
  if (!matches_) {
    std::ostringstream os;
    os << "reduced word " << order_->word_string() << " does not induce the Lyndon order; positions in Lyndon order:";
    for (std::size_t k : lyndon_sorted_) os << ' ' << (k + 1);
    discrepancy_ = os.str();
  }
}

void LyndonTable::compute_root_vectors() {
  const auto cartan = cartan_ptr();
  rootvec_.assign(size(), ShuffleElement(cartan));
  scale_.assign(size(), LaurentPoly(1));
  sign_.assign(size(), BracketSign::Plus);
  std::vector<std::size_t> by_height(size());
  std::iota(by_height.begin(), by_height.end(), 0);
  std::stable_sort(by_height.begin(), by_height.end(),
                   [&](std::size_t a, std::size_t b) { return lyndon_[a].size() < lyndon_[b].size(); });
  for (std::size_t k : by_height) {
    const Word& l = lyndon_[k];
    if (l.size() == 1) {
      rootvec_[k] = ShuffleElement(cartan, l);
      continue;
    }
    auto [l1, l2] = standard_factorization(l);
    auto p1 = position_of_lyndon(l1);
    auto p2 = position_of_lyndon(l2);
    if (!p1 || !p2) {
      throw Error(ErrorKind::CalibrationFailure,
                  "standard factors of " + format_word(l) + " are not good Lyndon words");
    }
    const ShuffleElement& x = rootvec_[*p1];
    const ShuffleElement& y = rootvec_[*p2];
    const int f = cartan->form(order_->root(*p1), order_->root(*p2));
    const ShuffleElement xy = mul(x, y);
    const ShuffleElement yx = mul(y, x);
    bool done = false;
    for (BracketSign s : {BracketSign::Plus, BracketSign::Minus}) {
      ShuffleElement br = xy - LaurentPoly::monomial(s == BracketSign::Plus ? f : -f) * yx;
      if (br.is_zero() || br.leading_word() != l) continue;
      const LaurentPoly lc = br.coefficient(l);
      ShuffleElement normalized(cartan);
      bool exact = true;
      for (const auto& [w, c] : br.terms()) {
        auto quotient = LaurentPoly::divide_exact(c, lc);
        if (!quotient) {
          exact = false;
          break;
        }
        normalized.add_term(w, *quotient);
      }
      if (!exact) continue;
      scale_[k] = lattice_primitive_factor(normalized);
      rootvec_[k] = scale_[k] * normalized;
      sign_[k] = s;
      done = true;
      break;
    }
    if (!done) {
      throw Error(ErrorKind::CalibrationFailure,
                  "q-bracket for " + format_word(l) + " does not have leading word " + format_word(l));
    }
  }
}

std::optional<std::size_t> LyndonTable::position_of_lyndon(const Word& w) const {
  auto it = lyndon_index_.find(w);
  if (it == lyndon_index_.end()) return std::nullopt;
  return it->second;
}

int LyndonTable::root_d(std::size_t k) const {
  return cartan().form(order_->root(k), order_->root(k)) / 2;
}

int LyndonTable::normalization_exponent(const MVector& m) const {
  int n = 0;
  for (std::size_t k = 0; k < m.size(); ++k) n += root_d(k) * m[k] * (m[k] - 1) / 2;
  return n;
}

Word LyndonTable::good_word(const MVector& m) const {
  if (m.size() != size()) throw Error(ErrorKind::InvalidArgument, "m-vector length mismatch");
  Word w;
  for (auto it = lyndon_sorted_.rbegin(); it != lyndon_sorted_.rend(); ++it) {
    for (int j = 0; j < m[*it]; ++j) w += lyndon_[*it];
  }
  return w;
}

MVector LyndonTable::mvector_of(const Word& w) const {
  MVector m = MVector::zero(size());
  for (const Word& f : lyndon_factorization(w)) {
    auto k = position_of_lyndon(f);
    if (!k) throw Error(ErrorKind::NotGoodWord, format_word(w) + " has Lyndon factor " + format_word(f) + " which is not good");
    m[*k] += 1;
  }
  return m;
}

bool LyndonTable::is_good_word(const Word& w) const {
  for (const Word& f : lyndon_factorization(w)) {
    if (!position_of_lyndon(f)) return false;
  }
  return true;
}

std::vector<const ShuffleElement*> LyndonTable::dual_pbw_factors(const MVector& m) const {
  if (m.size() != size()) throw Error(ErrorKind::InvalidArgument, "m-vector length mismatch");
  std::vector<const ShuffleElement*> f;
  for (std::size_t k : lyndon_sorted_) {
    for (int j = 0; j < m[k]; ++j) f.push_back(&rootvec_[k]);
  }
  return f;
}

ShuffleElement LyndonTable::dual_pbw(const MVector& m) const {
  ShuffleElement x = ShuffleElement::unit(cartan_ptr());
  for (const ShuffleElement* f : dual_pbw_factors(m)) x = mul(x, *f);
  x *= LaurentPoly::monomial(normalization_exponent(m));
  if (!x.is_zero() && x.leading_word() != good_word(m)) {
    throw Error(ErrorKind::LeadingWordMismatch, "E*" + m.to_string() + " has leading word " +
                                                    format_word(x.leading_word()) + ", expected " +
                                                    format_word(good_word(m)));
  }
  return x;
}

std::vector<MVector> LyndonTable::kostant_partitions(const Weight& nu) const {
  std::vector<MVector> ms = qshuffle::kostant_partitions(*order_, nu);
  std::vector<std::pair<Word, MVector>> keyed;
  keyed.reserve(ms.size());
  for (auto& m : ms) keyed.emplace_back(good_word(m), std::move(m));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<MVector> out;
  out.reserve(keyed.size());
  for (auto& [w, m] : keyed) out.push_back(std::move(m));
  return out;
}

namespace {

std::map<MVector, LaurentPoly> expand_rational(const LyndonTable& t, const ShuffleElement& x) {
  std::map<Word, RationalFunction> rest;
  for (const auto& [w, c] : x.terms()) rest.emplace(w, RationalFunction(c));
  std::map<MVector, RationalFunction> coords;
  while (!rest.empty()) {
    auto top = std::prev(rest.end());
    const Word w = top->first;
    if (!t.is_good_word(w)) throw Error(ErrorKind::NotInSpan, "leading word " + format_word(w) + " is not good");
    const MVector p = t.mvector_of(w);
    const ShuffleElement e = t.dual_pbw(p);
    const RationalFunction c = top->second / RationalFunction(e.coefficient(w));
    for (const auto& [v, cv] : e.terms()) {
      auto [it, inserted] = rest.try_emplace(v, RationalFunction());
      it->second -= c * RationalFunction(cv);
      if (it->second.is_zero()) rest.erase(it);
    }
    coords.emplace(p, c);
  }
  std::map<MVector, LaurentPoly> out;
  for (const auto& [m, c] : coords) {
    auto l = c.to_laurent();
    if (!l) throw Error(ErrorKind::NotInSpan, "coefficient of E*" + m.to_string() + " is " + c.to_string());
    out.emplace(m, *l);
  }
  return out;
}

}  // namespace

std::map<MVector, LaurentPoly> LyndonTable::expand_on_pbw(const ShuffleElement& x) const {
  ShuffleElement rest = x;
  std::map<MVector, LaurentPoly> out;
  while (!rest.is_zero()) {
    const Word w = rest.leading_word();
    if (!is_good_word(w)) throw Error(ErrorKind::NotInSpan, "leading word " + format_word(w) + " is not good");
    const MVector p = mvector_of(w);
    const ShuffleElement e = dual_pbw(p);
    auto c = LaurentPoly::divide_exact(rest.coefficient(w), e.coefficient(w));
    if (!c) return expand_rational(*this, x);
    rest -= *c * e;
    out.emplace(p, *c);
  }
  return out;
}

std::string LyndonTable::describe() const {
  std::ostringstream os;
  os << cartan().name() << " reduced word " << order_->word_string() << "\n";
  for (std::size_t k = 0; k < size(); ++k) {
    os << "  beta_" << (k + 1) << " = " << order_->root(k).to_string() << "  l = " << format_word(lyndon_[k])
       << "  E* = " << rootvec_[k].to_string() << "\n";
  }
  if (!matches_) os << "  note: " << discrepancy_ << "\n";
  return os.str();
}

}  // namespace qshuffle
