#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qshuffle/rational.hpp"
#include "qshuffle/root_data.hpp"
#include "qshuffle/shuffle.hpp"

namespace qshuffle {

enum class BracketSign { Plus, Minus };

// Good Lyndon words and dual root vectors for a convex order.
//
// The dual root vector E*(beta) is the q-bracket [E*(l1), E*(l2)]_q along the
// standard factorization l(beta) = l1 l2, rescaled to the primitive vector of
// the integral lattice spanned by the word basis divided by quantum factorials
// of letter runs. That vector has bar-invariant leading coefficient (1 when no
// letter repeats).
class LyndonTable {
 public:
  explicit LyndonTable(std::shared_ptr<const ConvexOrder> order);
  // Default reduced word for the type; for ranks without a compiled-in word the
  // order induced by the good Lyndon words is used.
  static std::shared_ptr<const LyndonTable> build(const std::string& cartan_name,
                                                  const std::vector<int>& reduced_word = {});

  const ConvexOrder& order() const noexcept { return *order_; }
  std::shared_ptr<const ConvexOrder> order_ptr() const noexcept { return order_; }
  const CartanDatum& cartan() const noexcept { return order_->cartan(); }
  std::shared_ptr<const CartanDatum> cartan_ptr() const noexcept { return order_->cartan_ptr(); }
  std::size_t size() const noexcept { return order_->size(); }

  // Indexed by convex-order position.
  const Word& lyndon(std::size_t k) const { return lyndon_[k]; }
  const ShuffleElement& root_vector(std::size_t k) const { return rootvec_[k]; }
  // The lattice rescaling applied to the normalized bracket at position k.
  const LaurentPoly& root_scale(std::size_t k) const { return scale_[k]; }
  BracketSign bracket_sign(std::size_t k) const { return sign_[k]; }
  std::optional<std::size_t> position_of_lyndon(const Word& w) const;

  // Positions sorted by increasing good Lyndon word. Equals 0..n-1 exactly when
  // the reduced word induces the Lyndon order.
  const std::vector<std::size_t>& lyndon_sorted() const noexcept { return lyndon_sorted_; }
  bool order_matches_lyndon() const noexcept { return matches_; }
  const std::string& discrepancy() const noexcept { return discrepancy_; }

  // (beta_k, beta_k) / 2.
  int root_d(std::size_t k) const;
  int normalization_exponent(const MVector& m) const;

  Word good_word(const MVector& m) const;
  MVector mvector_of(const Word& w) const;  // throws NotGoodWord
  bool is_good_word(const Word& w) const;

  // E*(m) = q^N(m) E*(b_1)^{m_1} * ... * E*(b_n)^{m_n}, factors in increasing
  // Lyndon order, N(m) = sum_k d_k m_k (m_k - 1) / 2.
  ShuffleElement dual_pbw(const MVector& m) const;
  // The factor list and exponent shift of dual_pbw, for projected evaluation.
  std::vector<const ShuffleElement*> dual_pbw_factors(const MVector& m) const;

  // Kostant partitions of nu in decreasing good-word order.
  std::vector<MVector> kostant_partitions(const Weight& nu) const;

  // Greedy expansion x = sum_m c_m E*(m). Falls back to rational arithmetic
  // when a leading coefficient does not divide; throws NotInSpan if x is not
  // in the integral span.
  std::map<MVector, LaurentPoly> expand_on_pbw(const ShuffleElement& x) const;

  std::string describe() const;

 private:
  void compute_lyndon_words();
  void compute_root_vectors();

  std::shared_ptr<const ConvexOrder> order_;
  std::vector<Word> lyndon_;
  std::vector<ShuffleElement> rootvec_;
  std::vector<LaurentPoly> scale_;
  std::vector<BracketSign> sign_;
  std::vector<std::size_t> lyndon_sorted_;
  std::map<Word, std::size_t> lyndon_index_;
  bool matches_ = true;
  std::string discrepancy_;
};

// Good Lyndon words by the standard recursion on root heights:
// l(beta) = max { l(b1) l(b2) : b1 + b2 = beta, l(b1) < l(b2) }.
// Returned in the order of cartan.positive_roots().
std::vector<Word> good_lyndon_words(const CartanDatum& cartan);

// Reduced word whose convex order is the increasing order of good Lyndon words.
std::vector<int> lyndon_reduced_word(const CartanDatum& cartan);

// Product over maximal runs a^k of [k]_{q^{d_a}}!.
LaurentPoly run_factorial(const CartanDatum& cartan, const Word& w);

// Smallest bar-symmetric polynomial kappa such that kappa * c_w is divisible by
// run_factorial(w) for every word w (after normalizing leading coefficient to 1).
LaurentPoly lattice_primitive_factor(const ShuffleElement& x);

}  // namespace qshuffle
