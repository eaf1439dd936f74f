#include "doctest.h"
#include "qshuffle/dcb.hpp"
#include "qshuffle/errors.hpp"
#include "qshuffle/analysis.hpp"
#include "qshuffle/type_a.hpp"

using namespace qshuffle;

TEST_CASE("multisegments") {
  const Multisegment ms = Multisegment::parse("[1,2],[2,3,4],[3],[4,5]");
  CHECK(ms.segments().size() == 4);
  CHECK(ms.degree() == 8);
  CHECK(ms.to_string() == "[1,2],[2,3,4],[3],[4,5]");
  CHECK(Multisegment::parse("[4,5],[3],[2,3,4],[1,2]") == ms);
  CHECK((ms + ms).degree() == 16);
  CHECK((ms + ms).to_string() == "[1,2],[1,2],[2,3,4],[2,3,4],[3],[3],[4,5],[4,5]");
  CHECK(Multisegment::parse("[2,3]").segments() == std::vector<Segment>{{2, 3}});
  CHECK_THROWS_AS(Multisegment::parse("[1,3]"), Error);
  CHECK_THROWS_AS(Multisegment::parse("[1,2"), Error);
}

TEST_CASE("multisegment and m-vector conversions") {
  const auto a5 = LyndonTable::build("A5");
  const std::size_t n = a5->size();
  CHECK(n == 15);
  for (std::size_t k = 0; k < n; ++k) {
    const MVector e = MVector::unit(n, k);
    const Multisegment ms = mvector_to_multisegment(*a5, e);
    REQUIRE(ms.segments().size() == 1);
    const Segment s = ms.segments()[0];
    // the root of a segment [a,b] is alpha_a + ... + alpha_b
    const Weight w = e.weight(a5->order());
    for (int i = 1; i <= 5; ++i) CHECK(w[i - 1] == (s.a <= i && i <= s.b ? 1 : 0));
  }
  for (const MVector& m : enumerate_dcb(*a5, 4)) {
    CHECK(multisegment_to_mvector(*a5, mvector_to_multisegment(*a5, m)) == m);
    CHECK(mvector_to_multisegment(*a5, m).degree() == m.degree(a5->order()));
  }
  CHECK_THROWS_AS(mvector_to_multisegment(*LyndonTable::build("B3"), MVector::zero(9)), Error);
  const auto other = LyndonTable::build("A2", {2, 1, 2});
  CHECK_THROWS_AS(mvector_to_multisegment(*other, MVector::zero(3)), Error);
}

TEST_CASE("Drinfeld polynomials") {
  const Multisegment m = Multisegment::parse("[1,2],[2,3,4],[3],[4,5]");
  const DrinfeldSet d = drinfeld(m, 6);
  CHECK(d.polynomials() == std::map<int, std::vector<int>>{{1, {6}}, {2, {3, 9}}, {3, {6}}});
  CHECK(d.to_string() == "P_1(u) = (u - q^-6)\nP_2(u) = (u - q^-3)(u - q^-9)\nP_3(u) = (u - q^-6)\n");
  CHECK(drinfeld(m + m, 6) == d + d);
  CHECK(drinfeld(Multisegment::parse("[2,3]"), 6).polynomials() == std::map<int, std::vector<int>>{{2, {5}}});
  CHECK_THROWS_AS(drinfeld(Multisegment::parse("[1,2,3,4,5,6]"), 6), Error);
  CHECK_THROWS_AS(drinfeld(Multisegment::parse("[1,2,3]"), 3), Error);
  CHECK(drinfeld(Multisegment(), 6).to_string().empty());
}

TEST_CASE("dimension evaluation") {
  const auto a2 = LyndonTable::build("A2");
  DCBEngine engine(a2);
  const auto c = a2->cartan_ptr();
  CHECK(dimension_eval(ShuffleElement(c, parse_word("12"), LaurentPoly::parse("q+q^-1"))) == Integer(2));
  for (const MVector& m : enumerate_dcb(*a2, 4)) {
    CHECK(dimension_eval_pbw(engine, m) == dimension_eval(engine.element(m)));
  }
  // at q = 1 the product of k letters of distinct colors has k! words
  const auto a4 = LyndonTable::build("A4");
  ShuffleElement x = ShuffleElement::unit(a4->cartan_ptr());
  for (char a : {1, 3, 2, 4}) x = mul(x, ShuffleElement(a4->cartan_ptr(), Word(1, a)));
  CHECK(dimension_eval(x) == Integer(24));
  const auto a5 = LyndonTable::build("A5");
  DCBEngine e5(a5);
  const MVector b = multisegment_to_mvector(*a5, Multisegment::parse("[1,2],[2,3,4],[3],[4,5]"));
  CHECK(dimension_eval(e5.element(b)) == Integer(252));
  CHECK(dimension_eval_pbw(e5, b) == Integer(252));
}
