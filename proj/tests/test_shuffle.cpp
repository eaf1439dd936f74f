#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qshuffle/errors.hpp"
#include "qshuffle/shuffle.hpp"

using namespace qshuffle;

namespace {

std::shared_ptr<const CartanDatum> cartan(const std::string& name) {
  return std::make_shared<const CartanDatum>(CartanDatum::parse(name));
}

ShuffleElement W(const std::shared_ptr<const CartanDatum>& c, const char* w, const char* coeff = "1") {
  return ShuffleElement(c, parse_word(w), LaurentPoly::parse(coeff));
}

Word random_word(std::mt19937& rng, int rank, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), letter(1, rank);
  Word w;
  for (int k = len(rng); k > 0; --k) w += static_cast<char>(letter(rng));
  return w;
}

ShuffleElement random_element(std::mt19937& rng, const std::shared_ptr<const CartanDatum>& c, int max_len) {
  // homogeneous: permutations of one random word
  Word base = random_word(rng, c->rank(), max_len);
  ShuffleElement x(c);
  for (int k = 0; k < 3; ++k) {
    std::shuffle(base.begin(), base.end(), rng);
    x.add_term(base, oracle::random_poly(rng, 3, 3));
  }
  return x;
}

}  // namespace

TEST_CASE("words") {
  CHECK(parse_word("w[1,2,1]") == make_word({1, 2, 1}));
  CHECK(parse_word("121") == make_word({1, 2, 1}));
  CHECK(parse_word("[1,2]") == make_word({1, 2}));
  CHECK(format_word(make_word({1, 1, 2})) == "w[1,1,2]");
  CHECK(format_word(Word()) == "w[]");
  CHECK(is_lyndon(parse_word("112")));
  CHECK(is_lyndon(parse_word("11212")));
  CHECK(!is_lyndon(parse_word("121")));
  CHECK(!is_lyndon(parse_word("11")));
  CHECK(lyndon_factorization(parse_word("121121")) ==
        std::vector<Word>{parse_word("12"), parse_word("112"), parse_word("1")});
  CHECK(standard_factorization(parse_word("11212")) == std::make_pair(parse_word("112"), parse_word("12")));
  CHECK(standard_factorization(parse_word("1112")) == std::make_pair(parse_word("1"), parse_word("112")));
  CHECK(word_space_size(Weight({2, 1})) == 3);
  CHECK(word_space_size(Weight({4, 2})) == 15);
  CHECK(reversed(parse_word("112")) == parse_word("211"));

  // Duval factorization: nonincreasing Lyndon factors that concatenate to w.
  std::mt19937 rng(1);
  for (int i = 0; i < 300; ++i) {
    const Word w = random_word(rng, 3, 9);
    const std::vector<Word> f = lyndon_factorization(w);
    Word cat;
    for (std::size_t k = 0; k < f.size(); ++k) {
      CHECK(is_lyndon(f[k]));
      if (k) CHECK(f[k - 1] >= f[k]);
      cat += f[k];
    }
    CHECK(cat == w);
  }
}

TEST_CASE("shuffle examples in G2") {
  const auto g2 = cartan("G2");
  CHECK(shuffle(g2, parse_word("1"), parse_word("2")) == W(g2, "12", "q^3") + W(g2, "21"));
  CHECK(shuffle(g2, parse_word("1"), parse_word("1")) == W(g2, "11", "1+q^-2"));
  const ShuffleElement b = W(g2, "121");
  const ShuffleElement b2 = mul(b, b);
  const ShuffleElement want = W(g2, "121121", "2(1+q^-2)") + W(g2, "112211", "q^4+2q^2+1+q^-2+2q^-4+q^-6") +
                              W(g2, "121211", "q+2q^-1+q^-3") + W(g2, "112121", "q+2q^-1+q^-3");
  CHECK(b2 == want);
  CHECK(b2.specialize_q1().at(parse_word("121121")) == Integer(4));
  CHECK(mul(ShuffleElement::unit(g2), b) == b);
  CHECK(mul(b, ShuffleElement::unit(g2)) == b);
  // (w[1] + w[2]) * w[1] is inhomogeneous; bilinearity is checked on the two pieces.
  CHECK_THROWS_AS(W(g2, "1") + W(g2, "2"), Error);
  auto sum = oracle::to_map(mul(W(g2, "1"), W(g2, "1")));
  for (const auto& [w, p] : oracle::to_map(mul(W(g2, "2"), W(g2, "1")))) sum[w] = p;
  const std::map<Word, oracle::Poly> want_sum = {
      {parse_word("11"), {{0, 1}, {-2, 1}}}, {parse_word("12"), {{0, 1}}}, {parse_word("21"), {{3, 1}}}};
  CHECK(sum == want_sum);
  CHECK(mul(mul(W(g2, "1"), W(g2, "2")), W(g2, "1")) == mul(W(g2, "1"), mul(W(g2, "2"), W(g2, "1"))));
  const auto q1 = shuffle(g2, parse_word("1"), parse_word("2")).specialize_q1();
  CHECK(q1.size() == 2);
  CHECK(q1.at(parse_word("12")) == Integer(1));
  CHECK(power(b, 2) == b2);
  CHECK(power(b, 0) == ShuffleElement::unit(g2));
}

TEST_CASE("shuffle agrees with the interleaving oracle") {
  std::mt19937 rng(2);
  for (const char* name : {"G2", "B3", "C3", "D4", "A3"}) {
    const auto c = cartan(name);
    for (int i = 0; i < 40; ++i) {
      const Word u = random_word(rng, c->rank(), 4), v = random_word(rng, c->rank(), 4);
      CHECK(oracle::to_map(shuffle(c, u, v)) == oracle::shuffle(*c, u, v));
      const ShuffleElement x = random_element(rng, c, 3), y = random_element(rng, c, 3);
      CHECK(oracle::to_map(mul(x, y)) == oracle::mul(*c, oracle::to_map(x), oracle::to_map(y)));
    }
  }
}

TEST_CASE("shuffle algebra properties") {
  std::mt19937 rng(4);
  for (const char* name : {"G2", "B3", "C3", "D4"}) {
    const auto c = cartan(name);
    for (int i = 0; i < 25; ++i) {
      const ShuffleElement x = random_element(rng, c, 3), y = random_element(rng, c, 3), z = random_element(rng, c, 2);
      CHECK(mul(mul(x, y), z) == mul(x, mul(y, z)));
      CHECK(mul(x, y + y) == mul(x, y) + mul(x, y));
      CHECK(mul(x, y).reversal() == mul(y.reversal(), x.reversal()));
      const ShuffleElement xy = mul(x, y);
      if (!xy.is_zero()) CHECK(xy.weight() == x.weight() + y.weight());
    }
    for (int i = 0; i < 25; ++i) {
      const Word u = random_word(rng, c->rank(), 4), v = random_word(rng, c->rank(), 4);
      Integer mass(0);
      for (const auto& [w, k] : shuffle(c, u, v).specialize_q1()) mass += k;
      // binom(|u|+|v|, |u|)
      Integer binom(1);
      for (std::size_t j = 1; j <= u.size(); ++j) binom = binom * Integer(static_cast<int64_t>(v.size() + j)) / Integer(static_cast<int64_t>(j));
      CHECK(mass == binom);
    }
  }
}

TEST_CASE("element bookkeeping") {
  const auto g2 = cartan("G2");
  ShuffleElement x(g2);
  x.add_term(parse_word("12"), LaurentPoly::parse("q"));
  x.add_term(parse_word("21"), LaurentPoly(1));
  CHECK_THROWS_AS(x.add_term(parse_word("1"), LaurentPoly(1)), Error);
  CHECK(x.leading_word() == parse_word("21"));
  CHECK(x.to_string() == "w[2,1] + qw[1,2]");
  x.add_term(parse_word("21"), LaurentPoly(-1));
  CHECK(x.size() == 1);
  CHECK(x.bar() == W(g2, "12", "q^-1"));
  CHECK(!x.has_bar_invariant_coefficients());
  CHECK(x.proportionality_power(W(g2, "12")) == std::optional<int>(1));
  CHECK(!x.proportionality_power(W(g2, "12", "2")));
  CHECK_THROWS(ShuffleElement(g2).leading_word());
  const auto b3 = cartan("B3");
  CHECK_THROWS_AS(W(g2, "1") + W(b3, "1"), Error);
}

TEST_CASE("product projector agrees with full products") {
  std::mt19937 rng(9);
  for (const char* name : {"G2", "B3", "C3"}) {
    const auto c = cartan(name);
    for (int i = 0; i < 20; ++i) {
      const ShuffleElement x = random_element(rng, c, 3), y = random_element(rng, c, 3),
                           z = random_element(rng, c, 2);
      const ShuffleElement full = mul(mul(x, y), z);
      if (full.is_zero()) continue;
      std::vector<Word> targets;
      for (const auto& [w, k] : full.terms()) {
        if (rng() % 2) targets.push_back(w);
      }
      targets.push_back(full.leading_word());
      std::sort(targets.begin(), targets.end(), std::greater<>());
      targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
      const ProductProjector proj(c, targets);
      const std::vector<LaurentPoly> got = proj.project({&x, &y, &z}, 3);
      for (std::size_t k = 0; k < targets.size(); ++k) CHECK(got[k] == full.coefficient(targets[k]).shifted(3));
      CHECK(proj.restrict(full) == proj.project({&x, &y, &z}));
    }
  }
}
