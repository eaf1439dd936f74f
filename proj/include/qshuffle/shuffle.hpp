#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qshuffle/laurent.hpp"
#include "qshuffle/root_data.hpp"

namespace qshuffle {

// A word over {1..r}, one byte per letter. Byte order is lexicographic order
// on words, with a proper prefix smaller than its extensions.
using Word = std::string;

Word make_word(const std::vector<int>& letters);
std::vector<int> word_letters(const Word& w);
Word parse_word(const std::string& text);   // "1,2,1", "[1,2,1]", "w[1,2,1]" or "121"
std::string format_word(const Word& w);      // "w[1,2,1]"
Weight word_weight(const Word& w, std::size_t rank);
Word reversed(const Word& w);
bool is_lyndon(const Word& w);
// Lyndon factorization w = l1 l2 ... lk with l1 >= l2 >= ... >= lk.
std::vector<Word> lyndon_factorization(const Word& w);
// l = l1 l2 with l2 the longest proper Lyndon suffix.
std::pair<Word, Word> standard_factorization(const Word& l);
// Number of words of the given weight (multinomial coefficient), saturating.
std::size_t word_space_size(const Weight& nu);

// A homogeneous element of the shuffle algebra: finitely many words of one
// weight with nonzero Laurent coefficients.
class ShuffleElement {
 public:
  using Map = std::unordered_map<Word, LaurentPoly>;

  ShuffleElement() = default;
  explicit ShuffleElement(std::shared_ptr<const CartanDatum> cartan);
  ShuffleElement(std::shared_ptr<const CartanDatum> cartan, const Word& w, LaurentPoly c = LaurentPoly(1));
  static ShuffleElement unit(std::shared_ptr<const CartanDatum> cartan) {
    return ShuffleElement(std::move(cartan), Word());
  }

  const CartanDatum& cartan() const { return *cartan_; }
  const std::shared_ptr<const CartanDatum>& cartan_ptr() const noexcept { return cartan_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  // Weight of the support; the zero weight for the zero element.
  Weight weight() const;
  int degree() const;
  const Map& terms() const noexcept { return terms_; }
  LaurentPoly coefficient(const Word& w) const;
  // Terms sorted by decreasing word.
  std::vector<std::pair<Word, LaurentPoly>> sorted_terms() const;
  // Lexicographically greatest support word; throws on zero.
  Word leading_word() const;

  void add_term(const Word& w, const LaurentPoly& c);
  ShuffleElement& operator+=(const ShuffleElement& o);
  ShuffleElement& operator-=(const ShuffleElement& o);
  ShuffleElement& operator*=(const LaurentPoly& c);
  friend ShuffleElement operator+(ShuffleElement a, const ShuffleElement& b) { return a += b; }
  friend ShuffleElement operator-(ShuffleElement a, const ShuffleElement& b) { return a -= b; }
  friend ShuffleElement operator*(const LaurentPoly& c, ShuffleElement a) { return a *= c; }
  friend bool operator==(const ShuffleElement& a, const ShuffleElement& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const ShuffleElement& a, const ShuffleElement& b) { return !(a == b); }

  // Coefficient-wise bar.
  ShuffleElement bar() const;
  // Reverses every word, keeping coefficients.
  ShuffleElement reversal() const;
  bool has_bar_invariant_coefficients() const;
  std::unordered_map<Word, Integer> specialize_q1() const;
  // If *this == q^k * o for some integer k, returns k.
  std::optional<int> proportionality_power(const ShuffleElement& o) const;

  // "(q + q^-1)w[1,2,1,1,2,1] + ..." in decreasing word order.
  std::string to_string() const;

 private:
  void check_compatible(const ShuffleElement& o) const;

  std::shared_ptr<const CartanDatum> cartan_;
  Map terms_;
};

// q-shuffle product of two words.
ShuffleElement shuffle(std::shared_ptr<const CartanDatum> cartan, const Word& u, const Word& v);
// Bilinear extension.
ShuffleElement mul(const ShuffleElement& x, const ShuffleElement& y);
ShuffleElement power(const ShuffleElement& x, int k);

// Coefficients of q^shift * f_1 * f_2 * ... * f_k on a fixed list of target
// words, without materializing the product. The targets are organized in a
// prefix trie and the product is evaluated by a dynamic program whose state
// records, for every factor, the prefix of that factor consumed so far.
class ProductProjector {
 public:
  ProductProjector(std::shared_ptr<const CartanDatum> cartan, std::vector<Word> targets);

  const std::vector<Word>& targets() const noexcept { return targets_; }
  std::size_t index_of(const Word& w) const;  // throws if absent
  bool contains(const Word& w) const { return index_.count(w) != 0; }

  // Result is dense over targets(); the factors are used in the given order.
  std::vector<LaurentPoly> project(const std::vector<const ShuffleElement*>& factors, int shift = 0,
                                   std::size_t first_target = 0) const;
  // Restriction of an already materialized element.
  std::vector<LaurentPoly> restrict(const ShuffleElement& x) const;

 private:
  struct TrieNode {
    int letter = 0;
    int parent = -1;
    int depth = 0;
    std::vector<int> children;
    int target = -1;
  };

  std::shared_ptr<const CartanDatum> cartan_;
  std::vector<Word> targets_;
  std::unordered_map<Word, std::size_t> index_;
  std::vector<TrieNode> trie_;
};

}  // namespace qshuffle
