#include "qshuffle/shuffle.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <functional>
#include <sstream>

#include "qshuffle/errors.hpp"

namespace qshuffle {

Word make_word(const std::vector<int>& letters) {
  Word w;
  w.reserve(letters.size());
  for (int x : letters) {
    if (x < 1 || x > 127) throw Error(ErrorKind::InvalidArgument, "letter out of range: " + std::to_string(x));
    w.push_back(static_cast<char>(x));
  }
  return w;
}

std::vector<int> word_letters(const Word& w) {
  std::vector<int> out;
  out.reserve(w.size());
  for (char c : w) out.push_back(static_cast<int>(c));
  return out;
}

Word parse_word(const std::string& text) {
  std::string t = text;
  if (!t.empty() && (t[0] == 'w' || t[0] == 'W')) t = t.substr(1);
  if (t.find(',') == std::string::npos) {
    std::vector<int> letters;
    for (char c : t) {
      if (c == '[' || c == ']' || c == '(' || c == ')' || c == ' ') continue;
      if (!std::isdigit(static_cast<unsigned char>(c))) throw Error(ErrorKind::ParseError, "bad word '" + text + "'");
      letters.push_back(c - '0');
    }
    return make_word(letters);
  }
  return make_word(parse_word_list(t));
}

std::string format_word(const Word& w) {
  std::string s = "w[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(static_cast<int>(w[i]));
  }
  return s + "]";
}

Weight word_weight(const Word& w, std::size_t rank) {
  Weight nu(rank);
  for (char c : w) {
    const auto i = static_cast<std::size_t>(c - 1);
    if (i >= rank) throw Error(ErrorKind::InvalidArgument, "letter exceeds rank in " + format_word(w));
    nu[i] += 1;
  }
  return nu;
}

Word reversed(const Word& w) { return Word(w.rbegin(), w.rend()); }

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (!(w < w.substr(i))) return false;
  }
  return true;
}

std::vector<Word> lyndon_factorization(const Word& w) {
  // Duval's algorithm.
  std::vector<Word> out;
  const std::size_t n = w.size();
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1, k = i;
    while (j < n && static_cast<unsigned char>(w[k]) <= static_cast<unsigned char>(w[j])) {
      if (w[k] < w[j]) k = i;
      else ++k;
      ++j;
    }
    while (i <= k) {
      out.push_back(w.substr(i, j - k));
      i += j - k;
    }
  }
  return out;
}

std::pair<Word, Word> standard_factorization(const Word& l) {
  if (l.size() < 2) throw Error(ErrorKind::InvalidArgument, "standard factorization needs length >= 2");
  for (std::size_t i = 1; i < l.size(); ++i) {
    Word suffix = l.substr(i);
    if (is_lyndon(suffix)) return {l.substr(0, i), suffix};
  }
  throw Error(ErrorKind::InvalidArgument, "no Lyndon suffix");
}

std::size_t word_space_size(const Weight& nu) {
  // multinomial(height; c_1..c_r), saturating at SIZE_MAX.
  long double acc = 1;
  int n = 0;
  for (int c : nu.coords()) {
    for (int k = 1; k <= c; ++k) {
      ++n;
      acc = acc * n / k;
    }
  }
  if (acc > 1.8e19L) return static_cast<std::size_t>(-1);
  return static_cast<std::size_t>(acc + 0.5L);
}

ShuffleElement::ShuffleElement(std::shared_ptr<const CartanDatum> cartan) : cartan_(std::move(cartan)) {}

ShuffleElement::ShuffleElement(std::shared_ptr<const CartanDatum> cartan, const Word& w, LaurentPoly c)
    : cartan_(std::move(cartan)) {
  add_term(w, c);
}

Weight ShuffleElement::weight() const {
  const auto r = static_cast<std::size_t>(cartan_->rank());
  if (terms_.empty()) return Weight(r);
  return word_weight(terms_.begin()->first, r);
}

int ShuffleElement::degree() const {
  if (terms_.empty()) return 0;
  return static_cast<int>(terms_.begin()->first.size());
}

LaurentPoly ShuffleElement::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

std::vector<std::pair<Word, LaurentPoly>> ShuffleElement::sorted_terms() const {
  std::vector<std::pair<Word, LaurentPoly>> v(terms_.begin(), terms_.end());
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  return v;
}

Word ShuffleElement::leading_word() const {
  if (terms_.empty()) throw Error(ErrorKind::InvalidArgument, "leading word of zero element");
  const Word* best = nullptr;
  for (const auto& [w, c] : terms_) {
    if (!best || w > *best) best = &w;
  }
  return *best;
}

void ShuffleElement::add_term(const Word& w, const LaurentPoly& c) {
  if (c.is_zero()) return;
  if (!terms_.empty() && (w.size() != terms_.begin()->first.size() ||
                          word_weight(w, static_cast<std::size_t>(cartan_->rank())) != weight())) {
    throw Error(ErrorKind::InvalidArgument, "inhomogeneous element: " + format_word(w));
  }
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void ShuffleElement::check_compatible(const ShuffleElement& o) const {
  if (cartan_ && o.cartan_ && cartan_ != o.cartan_ && cartan_->name() != o.cartan_->name()) {
    throw Error(ErrorKind::InvalidArgument, "elements over different Cartan data");
  }
}

ShuffleElement& ShuffleElement::operator+=(const ShuffleElement& o) {
  check_compatible(o);
  if (!cartan_) cartan_ = o.cartan_;
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

ShuffleElement& ShuffleElement::operator-=(const ShuffleElement& o) {
  check_compatible(o);
  if (!cartan_) cartan_ = o.cartan_;
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

ShuffleElement& ShuffleElement::operator*=(const LaurentPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  if (auto k = c.pure_power()) {
    for (auto& [w, v] : terms_) v = v.shifted(*k);
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

ShuffleElement ShuffleElement::bar() const {
  ShuffleElement r(cartan_);
  r.terms_.reserve(terms_.size());
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, c.bar());
  return r;
}

ShuffleElement ShuffleElement::reversal() const {
  ShuffleElement r(cartan_);
  r.terms_.reserve(terms_.size());
  for (const auto& [w, c] : terms_) r.terms_.emplace(reversed(w), c);
  return r;
}

bool ShuffleElement::has_bar_invariant_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_bar_invariant(); });
}

std::unordered_map<Word, Integer> ShuffleElement::specialize_q1() const {
  std::unordered_map<Word, Integer> out;
  for (const auto& [w, c] : terms_) {
    Integer v = c.evaluate_at_one();
    if (!v.is_zero()) out.emplace(w, std::move(v));
  }
  return out;
}

std::optional<int> ShuffleElement::proportionality_power(const ShuffleElement& o) const {
  if (terms_.size() != o.terms_.size()) return std::nullopt;
  if (terms_.empty()) return 0;
  const auto& [w0, c0] = *terms_.begin();
  auto it = o.terms_.find(w0);
  if (it == o.terms_.end()) return std::nullopt;
  const int k = c0.min_exponent() - it->second.min_exponent();
  for (const auto& [w, c] : terms_) {
    auto jt = o.terms_.find(w);
    if (jt == o.terms_.end() || jt->second.shifted(k) != c) return std::nullopt;
  }
  return k;
}

std::string ShuffleElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : sorted_terms()) {
    if (!first) s += " + ";
    first = false;
    if (c != LaurentPoly(1)) {
      if (c.term_count() == 1 && !(c.top_coefficient().sign() < 0)) s += c.to_string();
      else s += "(" + c.to_string() + ")";
    }
    s += w.empty() ? std::string("w[]") : format_word(w);
  }
  return s;
}

namespace {

// form_table[i * (r+1) + b] = (weight of u[0..i), alpha_b).
std::vector<int> prefix_form_table(const CartanDatum& c, const Word& u) {
  const int r = c.rank();
  std::vector<int> t(static_cast<std::size_t>((u.size() + 1) * static_cast<std::size_t>(r + 1)), 0);
  for (std::size_t i = 0; i < u.size(); ++i) {
    const int a = u[i];
    for (int b = 1; b <= r; ++b) {
      t[(i + 1) * static_cast<std::size_t>(r + 1) + static_cast<std::size_t>(b)] =
          t[i * static_cast<std::size_t>(r + 1) + static_cast<std::size_t>(b)] + c.simple_form(a, b);
    }
  }
  return t;
}

// Adds coeff * (u * v) into out.
void shuffle_into(const CartanDatum& c, const Word& u, const Word& v, const LaurentPoly& coeff,
                  ShuffleElement::Map& out) {
  const std::size_t a = u.size(), b = v.size();
  const auto stride = static_cast<std::size_t>(c.rank() + 1);
  const std::vector<int> table = prefix_form_table(c, u);
  Word buf(a + b, '\0');
  // e(sigma) accumulates (alpha_x, alpha_y) for every u-letter x placed
  // before a v-letter y.
  std::function<void(std::size_t, std::size_t, int)> rec = [&](std::size_t i, std::size_t j, int e) {
    if (i == a && j == b) {
      auto [it, inserted] = out.try_emplace(buf);
      it->second.add_shifted(coeff, -e);
      if (it->second.is_zero()) out.erase(it);
      return;
    }
    if (i < a) {
      buf[i + j] = u[i];
      rec(i + 1, j, e);
    }
    if (j < b) {
      buf[i + j] = v[j];
      rec(i, j + 1, e + table[i * stride + static_cast<std::size_t>(v[j])]);
    }
  };
  rec(0, 0, 0);
}

}  // namespace

ShuffleElement shuffle(std::shared_ptr<const CartanDatum> cartan, const Word& u, const Word& v) {
  ShuffleElement r(cartan);
  ShuffleElement::Map out;
  shuffle_into(*cartan, u, v, LaurentPoly(1), out);
  for (auto& [w, c] : out) r.add_term(w, c);
  return r;
}

ShuffleElement mul(const ShuffleElement& x, const ShuffleElement& y) {
  const auto& cartan = x.cartan_ptr() ? x.cartan_ptr() : y.cartan_ptr();
  if (x.cartan_ptr() && y.cartan_ptr() && x.cartan().name() != y.cartan().name()) {
    throw Error(ErrorKind::InvalidArgument, "product of elements over different Cartan data");
  }
  ShuffleElement::Map out;
  for (const auto& [u, cu] : x.terms()) {
    for (const auto& [v, cv] : y.terms()) shuffle_into(*cartan, u, v, cu * cv, out);
  }
  ShuffleElement r(cartan);
  for (auto& [w, c] : out) r.add_term(w, c);
  return r;
}

ShuffleElement power(const ShuffleElement& x, int k) {
  ShuffleElement r = ShuffleElement::unit(x.cartan_ptr());
  for (int i = 0; i < k; ++i) r = mul(r, x);
  return r;
}

ProductProjector::ProductProjector(std::shared_ptr<const CartanDatum> cartan, std::vector<Word> targets)
    : cartan_(std::move(cartan)), targets_(std::move(targets)) {
  trie_.push_back(TrieNode{});
  const int r = cartan_->rank();
  for (std::size_t t = 0; t < targets_.size(); ++t) {
    if (!index_.emplace(targets_[t], t).second) throw Error(ErrorKind::InvalidArgument, "duplicate target word");
    int node = 0;
    for (char ch : targets_[t]) {
      const int letter = ch;
      if (letter < 1 || letter > r) throw Error(ErrorKind::InvalidArgument, "target letter out of range");
      int next = -1;
      for (int child : trie_[static_cast<std::size_t>(node)].children) {
        if (trie_[static_cast<std::size_t>(child)].letter == letter) next = child;
      }
      if (next < 0) {
        TrieNode n;
        n.letter = letter;
        n.parent = node;
        n.depth = trie_[static_cast<std::size_t>(node)].depth + 1;
        trie_.push_back(n);
        next = static_cast<int>(trie_.size() - 1);
        trie_[static_cast<std::size_t>(node)].children.push_back(next);
      }
      node = next;
    }
    trie_[static_cast<std::size_t>(node)].target = static_cast<int>(t);
  }
}

std::size_t ProductProjector::index_of(const Word& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) throw Error(ErrorKind::InvalidArgument, format_word(w) + " is not a target word");
  return it->second;
}

std::vector<LaurentPoly> ProductProjector::restrict(const ShuffleElement& x) const {
  std::vector<LaurentPoly> out(targets_.size());
  for (std::size_t t = 0; t < targets_.size(); ++t) out[t] = x.coefficient(targets_[t]);
  return out;
}

namespace {

// Prefix trie of the support of one factor.
struct FactorTrie {
  struct Node {
    std::vector<int> child;      // indexed by letter
    std::vector<int> form;       // (weight of prefix, alpha_b), indexed by letter
    const LaurentPoly* coeff = nullptr;  // set on complete words
  };
  std::vector<Node> nodes;
  int degree = 0;

  FactorTrie(const CartanDatum& c, const ShuffleElement& x) {
    const int r = c.rank();
    auto fresh = [&]() {
      Node n;
      n.child.assign(static_cast<std::size_t>(r + 1), -1);
      n.form.assign(static_cast<std::size_t>(r + 1), 0);
      nodes.push_back(std::move(n));
      return static_cast<int>(nodes.size() - 1);
    };
    fresh();
    degree = x.degree();
    for (const auto& [w, coeff] : x.terms()) {
      int node = 0;
      for (char ch : w) {
        const auto letter = static_cast<std::size_t>(ch);
        int next = nodes[static_cast<std::size_t>(node)].child[letter];
        if (next < 0) {
          next = fresh();
          nodes[static_cast<std::size_t>(node)].child[letter] = next;
          for (int b = 1; b <= r; ++b) {
            nodes[static_cast<std::size_t>(next)].form[static_cast<std::size_t>(b)] =
                nodes[static_cast<std::size_t>(node)].form[static_cast<std::size_t>(b)] +
                c.simple_form(static_cast<int>(letter), b);
          }
        }
        node = next;
      }
      nodes[static_cast<std::size_t>(node)].coeff = &coeff;
    }
  }
};

using StateKey = std::basic_string<char32_t>;

struct StateKeyHash {
  std::size_t operator()(const StateKey& k) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (char32_t c : k) h = (h ^ static_cast<std::size_t>(c)) * 0x100000001b3ULL;
    return h;
  }
};

using StateMap = std::unordered_map<StateKey, LaurentPoly, StateKeyHash>;

}  // namespace

std::vector<LaurentPoly> ProductProjector::project(const std::vector<const ShuffleElement*>& factors, int shift,
                                                   std::size_t first_target) const {
  std::vector<LaurentPoly> out(targets_.size());
  LaurentPoly scalar = LaurentPoly::monomial(shift);
  std::vector<FactorTrie> tries;
  for (const ShuffleElement* f : factors) {
    if (f->is_zero()) return out;
    if (f->degree() == 0) {
      scalar *= f->coefficient(Word());
      continue;
    }
    tries.emplace_back(*cartan_, *f);
  }
  int total = 0;
  for (const auto& t : tries) total += t.degree;

  // Largest target index in each subtree, to skip branches below first_target.
  std::vector<int> max_target(trie_.size(), -1);
  for (std::size_t n = trie_.size(); n-- > 0;) {
    max_target[n] = std::max(max_target[n], trie_[n].target);
    if (trie_[n].parent >= 0) {
      auto p = static_cast<std::size_t>(trie_[n].parent);
      max_target[p] = std::max(max_target[p], max_target[n]);
    }
  }

  const std::size_t k = tries.size();
  std::function<void(int, const StateMap&)> visit = [&](int node, const StateMap& states) {
    const TrieNode& tn = trie_[static_cast<std::size_t>(node)];
    if (tn.target >= 0 && static_cast<std::size_t>(tn.target) >= first_target && tn.depth == total) {
      LaurentPoly sum;
      for (const auto& [key, val] : states) sum += val;
      out[static_cast<std::size_t>(tn.target)] = sum * scalar;
    }
    for (int child : tn.children) {
      if (max_target[static_cast<std::size_t>(child)] < static_cast<int>(first_target)) continue;
      const auto letter = static_cast<std::size_t>(trie_[static_cast<std::size_t>(child)].letter);
      StateMap next;
      for (const auto& [key, val] : states) {
        int e = 0;
        for (std::size_t j = 0; j < k; ++j) {
          const FactorTrie::Node& cur = tries[j].nodes[key[j]];
          const int c = cur.child[letter];
          if (c >= 0) {
            StateKey nk = key;
            nk[j] = static_cast<char32_t>(c);
            const FactorTrie::Node& cn = tries[j].nodes[static_cast<std::size_t>(c)];
            auto [it, inserted] = next.try_emplace(std::move(nk));
            if (!cn.coeff) {
              it->second.add_shifted(val, -e);
            } else if (auto p = cn.coeff->pure_power()) {
              it->second.add_shifted(val, -e + *p);
            } else {
              it->second.add_product(val, *cn.coeff, -e);
            }
            if (it->second.is_zero()) next.erase(it);
          }
          e += cur.form[letter];
        }
      }
      if (!next.empty()) visit(child, next);
    }
  };
  StateMap start;
  start.emplace(StateKey(k, U'\0'), LaurentPoly(1));
  visit(0, start);
  return out;
}

}  // namespace qshuffle
