#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qshuffle/pbw.hpp"

namespace qshuffle {

using Expansion = std::map<MVector, LaurentPoly>;

// t(nu) = (nu,nu)/2 - sum_i c_i d_i.
int theta_twist(const CartanDatum& cartan, const Weight& nu);

// Theta: the bar involution twisted so that it fixes the dual canonical basis.
// In word coordinates it conjugates every coefficient.
ShuffleElement theta(const ShuffleElement& x);
// sigma = q^{-t(nu)} Theta: the q-antilinear anti-automorphism fixing letters.
ShuffleElement sigma(const ShuffleElement& x);

// sigma computed from its definition: write x = sum_w a_w x_w over letter
// monomials x_w = w_{i_1} * ... * w_{i_k}, then return sum_w bar(a_w) x_{rev w}.
// Exact linear algebra over Q(q); meant for small weight spaces.
ShuffleElement sigma_by_solve(const ShuffleElement& x);
ShuffleElement theta_by_solve(const ShuffleElement& x);

// Per-weight workspace: Kostant partitions in decreasing good-word order, their
// good words, and rows E*(p) restricted to good words, computed on demand.
class WeightSpace {
 public:
  WeightSpace(std::shared_ptr<const LyndonTable> table, Weight nu);

  const Weight& weight() const noexcept { return nu_; }
  std::size_t dimension() const noexcept { return partitions_.size(); }
  const std::vector<MVector>& partitions() const noexcept { return partitions_; }
  const std::vector<Word>& good_words() const noexcept { return projector_.targets(); }
  std::size_t index_of(const MVector& m) const;
  const ProductProjector& projector() const noexcept { return projector_; }
  // E*(p_i) on the good words; zero before position i.
  const std::vector<LaurentPoly>& pbw_row(std::size_t i);
  std::size_t rows_computed() const noexcept { return rows_computed_; }

 private:
  std::shared_ptr<const LyndonTable> table_;
  Weight nu_;
  std::vector<MVector> partitions_;
  std::unordered_map<MVector, std::size_t, MVectorHash> index_;
  ProductProjector projector_;
  std::vector<std::optional<std::vector<LaurentPoly>>> rows_;
  std::size_t rows_computed_ = 0;
};

enum class Provenance { Computed, Cached };

struct DCBRecord {
  MVector mvector;
  ShuffleElement element;
  bool theta_fixed = false;
  Provenance provenance = Provenance::Computed;
  // b(m) = sum_p c_p E*(p), c_m = 1, other c_p in qZ[q].
  Expansion pbw;
};

class DCBEngine {
 public:
  struct Options {
    // Largest word space for which elements are materialized word by word.
    std::size_t full_limit = 500000;
    // Cross-check every record against the full word expansion when small.
    bool verify_full = true;
    std::optional<std::filesystem::path> cache_dir;
  };

  explicit DCBEngine(std::shared_ptr<const LyndonTable> table);
  DCBEngine(std::shared_ptr<const LyndonTable> table, Options options);

  const LyndonTable& table() const noexcept { return *table_; }
  std::shared_ptr<const LyndonTable> table_ptr() const noexcept { return table_; }
  const Options& options() const noexcept { return options_; }

  WeightSpace& space(const Weight& nu);
  // PBW coordinates of b(m).
  const Expansion& pbw_coordinates(const MVector& m);
  // b(m) restricted to the good words of its weight.
  const std::vector<LaurentPoly>& projection(const MVector& m);
  // Full word expansion; BudgetExceeded beyond Options::full_limit.
  const ShuffleElement& element(const MVector& m);
  DCBRecord record(const MVector& m);
  // Cached dual PBW element.
  const ShuffleElement& dual_pbw(const MVector& m);
  Provenance provenance(const MVector& m);

  // Coordinates on the dual canonical basis.
  Expansion expand(const ShuffleElement& x);
  Expansion expand_projection(const Weight& nu, std::vector<LaurentPoly> coords);
  // b(a) * b(b) on the dual canonical basis, via the good-word projection.
  Expansion expand_product(const MVector& a, const MVector& b);
  std::vector<LaurentPoly> product_projection(const MVector& a, const MVector& b);

  bool materializable(const Weight& nu) const;
  // Cache files rejected on load (corrupt or failing the invariants).
  std::size_t cache_rejections() const noexcept { return cache_rejections_; }
  const std::string& last_cache_error() const noexcept { return last_cache_error_; }

 private:
  struct Data {
    Expansion pbw;
    std::vector<LaurentPoly> proj;
    Provenance provenance = Provenance::Computed;
  };

  const Data& data(const MVector& m);
  Data compute(const MVector& m);
  void verify(const MVector& m, const Data& d);
  void verify_full(const MVector& m, const Data& d);
  std::optional<Data> load(const MVector& m);
  void store(const MVector& m, const Data& d);
  std::filesystem::path cache_path(const MVector& m) const;

  std::shared_ptr<const LyndonTable> table_;
  Options options_;
  std::map<Weight, std::unique_ptr<WeightSpace>> spaces_;
  std::unordered_map<MVector, Data, MVectorHash> data_;
  std::unordered_map<MVector, ShuffleElement, MVectorHash> elements_;
  std::unordered_map<MVector, ShuffleElement, MVectorHash> pbw_cache_;
  std::size_t cache_rejections_ = 0;
  std::string last_cache_error_;
};

// Checks that x is congruent to E*(m) modulo qL*: every coordinate of x on the
// dual PBW basis other than m lies in qZ[q] and the coordinate of m is 1.
bool congruent_to_pbw(const Expansion& pbw_coordinates, const MVector& m);

std::string cache_key(const LyndonTable& table, const MVector& m);
std::string format_expansion(const Expansion& e);

constexpr const char* kEngineVersion = "1.0";

}  // namespace qshuffle
