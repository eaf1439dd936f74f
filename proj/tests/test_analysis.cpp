#include <climits>
#include <set>

#include "doctest.h"
#include "qshuffle/analysis.hpp"
#include "qshuffle/errors.hpp"
#include "qshuffle/reference.hpp"

using namespace qshuffle;

namespace {

MVector M(const char* s) { return MVector::parse(s); }

std::shared_ptr<const LyndonTable> G2() { return LyndonTable::build("G2", {1, 2, 1, 2, 1, 2}); }

// Gap condition read off a product expansion term by term: the lowest and the
// highest power of q each occur in exactly one term, as a bare monomial, and
// every other exponent lies strictly between them.
bool gap_oracle(const Expansion& e) {
  int lo = INT_MAX, hi = INT_MIN;
  for (const auto& [p, c] : e) {
    for (const auto& [k, v] : c.terms()) {
      lo = std::min(lo, k);
      hi = std::max(hi, k);
    }
  }
  if (e.size() == 1) return e.begin()->second.pure_power().has_value();
  std::set<MVector> at_lo, at_hi;
  for (const auto& [p, c] : e) {
    for (const auto& [k, v] : c.terms()) {
      if (k == lo) at_lo.insert(p);
      if (k == hi) at_hi.insert(p);
    }
  }
  if (lo >= hi || at_lo.size() != 1 || at_hi.size() != 1 || *at_lo.begin() == *at_hi.begin()) return false;
  for (const auto& [p, c] : e) {
    if (p == *at_lo.begin()) {
      if (c != LaurentPoly::monomial(lo)) return false;
    } else if (p == *at_hi.begin()) {
      if (c != LaurentPoly::monomial(hi)) return false;
    } else {
      for (const auto& [k, v] : c.terms()) {
        if (k <= lo || k >= hi) return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("reality certificates") {
  const auto t = G2();
  DCBEngine engine(t);
  const RealityCertificate b = reality_certificate(engine, M("1,0,0,0,1,0"));
  CHECK_FALSE(b.is_real);
  CHECK(b.shift == -1);
  CHECK(b.extra_terms == Expansion{{M("1,0,1,0,1,0"), LaurentPoly(1)}});
  for (std::size_t k = 0; k < t->size(); ++k) {
    const RealityCertificate r = reality_certificate(engine, MVector::unit(t->size(), k));
    CHECK(r.is_real);
    CHECK(r.extra_terms.empty());
  }
  CHECK(reality_certificate(engine, M("0,0,0,0,0,0")).is_real);
  CHECK(reality_certificate(engine, M("1,0,1,0,1,0")).is_real);
}

TEST_CASE("imaginary identities in every listed type") {
  for (const auto& id : reference::imaginary_identities()) {
    if (id.type == "A5") continue;  // covered by the acceptance run
    const auto t = LyndonTable::build(id.type, id.reduced_word);
    DCBEngine engine(t);
    const MVector b = MVector::parse(id.b);
    const RealityCertificate r = reality_certificate(engine, b);
    CHECK_MESSAGE(!r.is_real, id.type);
    CHECK(r.shift == id.shift);
    CHECK(r.extra_terms == Expansion{{MVector::parse(id.z), LaurentPoly(1)}});
    CHECK(q_centrality_check(engine, MVector::parse(id.z)));
    CHECK_FALSE(q_centrality_check(engine, b));
  }
}

TEST_CASE("enumeration and census") {
  const auto t = G2();
  DCBEngine engine(t);
  const auto d1 = enumerate_dcb(*t, 1);
  CHECK(d1 == std::vector<MVector>{M("0,0,0,0,0,0"), M("1,0,0,0,0,0"), M("0,0,0,0,0,1")});
  CHECK(enumerate_dcb(*t, 2).size() == 7);
  // count Kostant partitions degree by degree: sum over weights (a,b), a+b <= 7
  std::size_t total = 0;
  for (int a = 0; a <= 7; ++a) {
    for (int b = 0; a + b <= 7; ++b) total += t->kostant_partitions(Weight({a, b})).size();
  }
  CHECK(enumerate_dcb(*t, 7).size() == total);
  CHECK(total == 116);

  const CensusReport c = census(engine, 4);
  CHECK(c.total == enumerate_dcb(*t, 4).size());
  CHECK(c.imaginary == std::vector<MVector>{M("1,0,0,0,1,0"), M("1,0,0,0,1,1")});
  CHECK(c.prime_imaginary == std::vector<MVector>{M("1,0,0,0,1,0")});
}

TEST_CASE("primality") {
  const auto t = G2();
  DCBEngine engine(t);
  for (std::size_t k = 0; k < t->size(); ++k) CHECK(is_prime(engine, MVector::unit(t->size(), k)));
  CHECK(is_prime(engine, M("1,0,0,0,1,0")));
  CHECK_FALSE(is_prime(engine, M("2,0,0,0,0,0")));
  CHECK(is_prime(engine, M("1,0,0,0,0,1")));
  CHECK_FALSE(is_prime(engine, M("1,0,0,0,1,1")));
}

TEST_CASE("conjecture 1 report matches the term-by-term oracle") {
  for (const char* name : {"G2", "B3", "C3"}) {
    const auto t = LyndonTable::build(name);
    DCBEngine engine(t);
    const auto all = enumerate_dcb(*t, 3);
    for (const MVector& a : all) {
      if (a.is_zero() || !reality_certificate(engine, a).is_real) continue;
      for (const MVector& b : all) {
        if (b.is_zero()) continue;
        const Conj1Report r = conjecture1_check(engine, a, b);
        const Expansion direct = engine.expand(mul(engine.element(a), engine.element(b)));
        CHECK(r.product == direct);
        CHECK(r.gap_ok == gap_oracle(direct));
        CHECK(r.gap_ok);
        CHECK(r.witnesses.empty());
      }
    }
  }
  const auto t = G2();
  DCBEngine engine(t);
  CHECK_THROWS_AS(conjecture1_check(engine, M("1,0,0,0,1,0"), M("1,0,0,0,0,0")), Error);
  const Conj1Report single = conjecture1_check(engine, M("1,0,0,0,0,0"), M("1,0,0,0,0,0"));
  CHECK(single.in_qZB);
  CHECK(single.m == -1);
  CHECK(single.s == -1);
  CHECK(single.bprime == M("2,0,0,0,0,0"));
  const Conj1Report two = conjecture1_check(engine, M("0,0,0,0,0,1"), M("1,0,0,0,0,0"));
  CHECK_FALSE(two.in_qZB);
  CHECK(two.m < two.s);
  CHECK(two.bprime != two.bsecond);
}

TEST_CASE("diamond") {
  const auto t = G2();
  DCBEngine engine(t);
  const MVector e1 = M("1,0,0,0,0,0");
  const MVector e6 = M("0,0,0,0,0,1");
  CHECK(diamond(engine, e1, e1, DiamondSide::Left) == M("2,0,0,0,0,0"));
  CHECK(diamond(engine, e1, e1, DiamondSide::Right) == M("2,0,0,0,0,0"));
  const MVector unit = MVector::zero(t->size());
  CHECK(diamond(engine, e1, unit, DiamondSide::Left) == e1);
  CHECK(diamond(engine, e6, e1, DiamondSide::Left) != diamond(engine, e6, e1, DiamondSide::Right));
  for (const MVector& a : enumerate_dcb(*t, 3)) {
    if (!reality_certificate(engine, a).is_real) continue;
    for (const MVector& b : enumerate_dcb(*t, 3)) {
      const Weight w = a.weight(t->order()) + b.weight(t->order());
      for (DiamondSide s : {DiamondSide::Left, DiamondSide::Right}) {
        CHECK(diamond(engine, a, b, s).weight(t->order()) == w);
      }
    }
  }
}

TEST_CASE("string decomposition") {
  const auto t = G2();
  DCBEngine engine(t);
  const StringDecomposition s = string_decomposition(engine, M("0,0,1,0,0,0"), 5);
  CHECK(s.violations.empty());
  CHECK_FALSE(s.strings.empty());
  CHECK_FALSE(s.roots.empty());
  std::set<MVector> seen;
  for (const auto& chain : s.strings) {
    for (const MVector& m : chain) CHECK(seen.insert(m).second);
  }
  for (const MVector& r : s.roots) CHECK(seen.count(r));
  CHECK_THROWS_AS(string_decomposition(engine, M("1,0,0,0,1,0"), 5), Error);
}

TEST_CASE("sweeps do not depend on the thread count") {
  const auto t = G2();
  DCBEngine one(t), two(t);
  const SweepReport a = conjecture1_sweep(one, 3, Deadline(), 1);
  const SweepReport b = conjecture1_sweep(two, 3, Deadline(), 2);
  CHECK(a.pairs == b.pairs);
  CHECK(a.skipped == b.skipped);
  CHECK(a.violations == b.violations);
  CHECK(a.violations.empty());
  const SweepReport l = leading_term_sweep(one, 3, Deadline(), 3);
  CHECK(l.violations.empty());
  CHECK(l.pairs == leading_term_sweep(two, 3).pairs);
  const CensusReport c1 = census(one, 4, Deadline(), 1);
  const CensusReport c2 = census(two, 4, Deadline(), 2);
  CHECK(c1.imaginary == c2.imaginary);
  CHECK(c1.prime_imaginary == c2.prime_imaginary);
}

TEST_CASE("deadline") {
  const auto t = G2();
  DCBEngine engine(t);
  CHECK_THROWS_AS(census(engine, 7, Deadline(0.0)), Error);
  CHECK_NOTHROW(Deadline().check("x"));
}

TEST_CASE("proportional") {
  const auto p = [](const char* s) { return LaurentPoly::parse(s); };
  CHECK(proportional({p("1+q"), p("q^2")}, {p("q^3+q^4"), p("q^5")}) == -3);
  CHECK_FALSE(proportional({p("1+q"), p("q^2")}, {p("q^3+q^4"), p("q^6")}).has_value());
  CHECK(proportional({}, {}) == 0);
}
