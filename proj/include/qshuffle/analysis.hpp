#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "qshuffle/dcb.hpp"

namespace qshuffle {

// Wall-clock budget; check() throws BudgetExceeded once it has run out.
class Deadline {
 public:
  Deadline() = default;  // unlimited
  explicit Deadline(double seconds);
  void check(const char* what) const;

 private:
  std::optional<std::chrono::steady_clock::time_point> until_;
};

struct RealityCertificate {
  MVector mvector;
  bool is_real = true;
  // b^2 = q^shift (b^[2] + sum extra_terms).
  int shift = 0;
  Expansion extra_terms;
  Expansion square;
};

RealityCertificate reality_certificate(DCBEngine& engine, const MVector& m);

// All m of principal degree <= max_degree, ordered by degree, then weight, then
// decreasing good word. The zero vector (the unit) comes first.
std::vector<MVector> enumerate_dcb(const LyndonTable& table, int max_degree, std::size_t limit = 2000000);

struct CensusReport {
  int max_degree = 0;
  std::size_t total = 0;
  std::vector<MVector> imaginary;
  std::vector<MVector> prime_imaginary;
};

// With jobs > 1 the work is split across threads, each with its own engine;
// results are merged in canonical order, so they do not depend on jobs.
CensusReport census(DCBEngine& engine, int max_degree, const Deadline& deadline = Deadline(), int jobs = 1);

// True iff b(m) is not, up to a power of q, a product b(m1) b(m2) of two basis
// vectors of positive degree. The search runs over all weight splittings.
bool is_prime(DCBEngine& engine, const MVector& m, const Deadline& deadline = Deadline());

struct Conj1Report {
  MVector b1, b2;
  bool in_qZB = false;
  int m = 0, s = 0;
  std::optional<MVector> bprime, bsecond;
  bool gap_ok = false;
  std::vector<std::pair<MVector, LaurentPoly>> witnesses;
  Expansion product;
};

Conj1Report conjecture1_check(DCBEngine& engine, const MVector& m1, const MVector& m2);

enum class DiamondSide { Left, Right };

// Left: the term of b(m1) b(m2) carrying the lowest power of q; right: the
// highest. Throws AmbiguousExtreme when that term is not unique or its
// coefficient is not a pure power of q.
MVector diamond(DCBEngine& engine, const MVector& m1, const MVector& m2, DiamondSide side);

struct StringDecomposition {
  MVector b1;
  std::vector<std::vector<MVector>> strings;
  std::vector<MVector> roots;
  // Injectivity failures and ambiguous extremes, reported verbatim.
  std::vector<std::string> violations;
};

StringDecomposition string_decomposition(DCBEngine& engine, const MVector& m1, int max_degree,
                                         const Deadline& deadline = Deadline());

struct SweepReport {
  std::size_t pairs = 0;
  std::size_t skipped = 0;
  std::vector<std::string> violations;
};

// For all m, p of positive degree <= max_degree: b(m) b(p) has the term
// b(m+p) with a pure power of q.
SweepReport leading_term_sweep(DCBEngine& engine, int max_degree, const Deadline& deadline = Deadline(),
                               int jobs = 1);
// Conjecture 1 for all b1 real and b2 of positive degree <= max_degree.
// Pairs with b1 imaginary are counted as skipped.
SweepReport conjecture1_sweep(DCBEngine& engine, int max_degree, const Deadline& deadline = Deadline(),
                              int jobs = 1);

// True iff b(m) * w[i] and w[i] * b(m) agree up to a power of q for every i,
// compared through their dual canonical expansions.
bool q_centrality_check(DCBEngine& engine, const MVector& m);

// If a = q^k b as vectors, returns k.
std::optional<int> proportional(const std::vector<LaurentPoly>& a, const std::vector<LaurentPoly>& b);

}  // namespace qshuffle
