#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qshuffle {

// Element of the root lattice in the basis of simple roots. Only nonnegative
// combinations occur in practice, but differences are allowed transiently.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t rank) : c_(rank, 0) {}
  explicit Weight(std::vector<int> coords) : c_(std::move(coords)) {}
  static Weight simple(std::size_t rank, int i);  // alpha_i, 1-based

  std::size_t rank() const noexcept { return c_.size(); }
  int operator[](std::size_t i) const { return c_[i]; }
  int& operator[](std::size_t i) { return c_[i]; }
  const std::vector<int>& coords() const noexcept { return c_; }
  int height() const noexcept;
  bool is_nonnegative() const noexcept;
  bool is_zero() const noexcept;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(int k, Weight a) {
    for (auto& x : a.c_) x *= k;
    return a;
  }
  friend bool operator==(const Weight& a, const Weight& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Weight& a, const Weight& b) { return a.c_ != b.c_; }
  friend bool operator<(const Weight& a, const Weight& b) { return a.c_ < b.c_; }

  // "3a1+2a2" style.
  std::string to_string() const;

 private:
  std::vector<int> c_;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept;
};

enum class CartanType { A, B, C, D, G };

// Cartan datum with the simple-root numbering used throughout:
//   A_n: chain 1-2-...-n.
//   B_n: alpha_1 short, double bond between 1 and 2, chain 2-...-n; d = (1,2,...,2).
//   C_n: alpha_1 long, double bond between 1 and 2, chain 2-...-n; d = (2,1,...,1).
//   D_n: alpha_1 and alpha_2 both attached to alpha_3, chain 3-...-n.
//   G_2: alpha_1 short, alpha_2 long; d = (1,3).
class CartanDatum {
 public:
  static CartanDatum make(CartanType type, int rank);
  // "A5", "B3", "C3", "D4", "G2"; E and F are rejected with UnsupportedType.
  static CartanDatum parse(const std::string& name);

  CartanType type() const noexcept { return type_; }
  int rank() const noexcept { return rank_; }
  std::string name() const;
  int cartan(int i, int j) const { return a_[idx(i, j)]; }  // 1-based
  int d(int i) const { return d_[static_cast<std::size_t>(i - 1)]; }
  // (alpha_i, alpha_j) = d_i a_ij, 1-based.
  int simple_form(int i, int j) const { return b_[idx(i, j)]; }
  int form(const Weight& x, const Weight& y) const;
  // s_i(v) for a 1-based simple index.
  Weight reflect(int i, const Weight& v) const;
  // All positive roots, by height then lexicographically.
  const std::vector<Weight>& positive_roots() const noexcept { return positive_roots_; }
  bool is_root(const Weight& v) const;

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>((i - 1) * rank_ + (j - 1));
  }
  void compute_positive_roots();

  CartanType type_ = CartanType::A;
  int rank_ = 0;
  std::vector<int> a_;
  std::vector<int> d_;
  std::vector<int> b_;
  std::vector<Weight> positive_roots_;
};

// A reduced word for w0 and the convex order beta_1 < ... < beta_n it induces.
class ConvexOrder {
 public:
  // Validates the word; throws NotReduced, WrongLength.
  ConvexOrder(std::shared_ptr<const CartanDatum> cartan, std::vector<int> reduced_word);

  const CartanDatum& cartan() const noexcept { return *cartan_; }
  std::shared_ptr<const CartanDatum> cartan_ptr() const noexcept { return cartan_; }
  const std::vector<int>& reduced_word() const noexcept { return word_; }
  const std::vector<Weight>& roots() const noexcept { return roots_; }
  std::size_t size() const noexcept { return roots_.size(); }
  const Weight& root(std::size_t k) const { return roots_[k]; }
  std::optional<std::size_t> position_of(const Weight& beta) const;
  std::string word_string() const;

 private:
  std::shared_ptr<const CartanDatum> cartan_;
  std::vector<int> word_;
  std::vector<Weight> roots_;
};

// Exponent sequence m in N^n over the roots of a convex order.
class MVector {
 public:
  MVector() = default;
  explicit MVector(std::vector<int> m) : m_(std::move(m)) {}
  static MVector zero(std::size_t n) { return MVector(std::vector<int>(n, 0)); }
  static MVector unit(std::size_t n, std::size_t k);
  // "1,0,0,0,1,0"
  static MVector parse(const std::string& text);

  std::size_t size() const noexcept { return m_.size(); }
  int operator[](std::size_t k) const { return m_[k]; }
  int& operator[](std::size_t k) { return m_[k]; }
  const std::vector<int>& values() const noexcept { return m_; }
  bool is_zero() const noexcept;
  Weight weight(const ConvexOrder& order) const;
  int degree(const ConvexOrder& order) const;

  MVector& operator+=(const MVector& o);
  friend MVector operator+(MVector a, const MVector& b) { return a += b; }
  friend MVector operator*(int k, MVector a) {
    for (auto& x : a.m_) x *= k;
    return a;
  }
  friend bool operator==(const MVector& a, const MVector& b) { return a.m_ == b.m_; }
  friend bool operator!=(const MVector& a, const MVector& b) { return a.m_ != b.m_; }
  friend bool operator<(const MVector& a, const MVector& b) { return a.m_ < b.m_; }

  std::string to_string() const;  // "(1,0,0,0,1,0)"
  std::string csv() const;        // "1,0,0,0,1,0"

 private:
  std::vector<int> m_;
};

struct MVectorHash {
  std::size_t operator()(const MVector& m) const noexcept;
};

// The reduced words used for the worked examples: G2 121212, B3 123121323,
// C3 121321323, D4 132431432434, A5 123451234123121. Other ranks return
// nullopt (callers fall back to the Lyndon-induced order).
std::optional<std::vector<int>> default_reduced_word(const CartanDatum& cartan);

std::vector<int> parse_word_list(const std::string& text);

// All m with sum_k m_k beta_k = nu, in decreasing lexicographic order of m.
std::vector<MVector> kostant_partitions(const ConvexOrder& order, const Weight& nu);

}  // namespace qshuffle
