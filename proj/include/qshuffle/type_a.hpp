#pragma once

#include <map>
#include <string>
#include <vector>

#include "qshuffle/pbw.hpp"

namespace qshuffle {

struct Segment {
  int a = 1;
  int b = 1;
  int length() const noexcept { return b - a + 1; }
  friend bool operator==(const Segment& x, const Segment& y) { return x.a == y.a && x.b == y.b; }
  friend bool operator<(const Segment& x, const Segment& y) { return x.a != y.a ? x.a < y.a : x.b < y.b; }
};

// Multiset of segments [a,b] of simple-root indices, kept sorted.
class Multisegment {
 public:
  Multisegment() = default;
  explicit Multisegment(std::vector<Segment> segments);
  // "[1,2],[2,3,4],[3],[4,5]": each bracket lists a run of consecutive indices.
  static Multisegment parse(const std::string& text);

  const std::vector<Segment>& segments() const noexcept { return segs_; }
  int degree() const noexcept;
  Multisegment operator+(const Multisegment& o) const;
  friend bool operator==(const Multisegment& x, const Multisegment& y) { return x.segs_ == y.segs_; }
  std::string to_string() const;

 private:
  std::vector<Segment> segs_;
};

// Throws WrongType outside type A and NonDefaultOrder unless the table uses
// the compiled-in reduced word.
Multisegment mvector_to_multisegment(const LyndonTable& table, const MVector& m);
MVector multisegment_to_mvector(const LyndonTable& table, const Multisegment& ms);

// P_k(u) = prod (u - q^{-e}) over the exponents listed under k.
class DrinfeldSet {
 public:
  void add_root(int k, int e);
  const std::map<int, std::vector<int>>& polynomials() const noexcept { return polys_; }
  DrinfeldSet operator+(const DrinfeldSet& o) const;
  friend bool operator==(const DrinfeldSet& x, const DrinfeldSet& y) { return x.polys_ == y.polys_; }
  // One line per nontrivial k: "P_2(u) = (u - q^-3)(u - q^-9)".
  std::string to_string() const;

 private:
  std::map<int, std::vector<int>> polys_;
};

// Segment [a,b] contributes the root q^{-(a+b)} to P_{b-a+1}. Throws
// SegmentTooLong when some b-a+1 >= n.
DrinfeldSet drinfeld(const Multisegment& ms, int n);

// Sum over the word support of the coefficients evaluated at q = 1.
Integer dimension_eval(const ShuffleElement& x);

class DCBEngine;
// The same number computed from the PBW coordinates of b(m): at q = 1 the sum
// of coefficients of x*y is binom(deg x + deg y, deg x) times those of x and y.
// Works when the word expansion is too large to materialize.
Integer dimension_eval_pbw(DCBEngine& engine, const MVector& m);

}  // namespace qshuffle
