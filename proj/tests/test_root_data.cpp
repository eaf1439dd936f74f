#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "qshuffle/errors.hpp"
#include "qshuffle/pbw.hpp"
#include "qshuffle/reference.hpp"
#include "qshuffle/root_data.hpp"

using namespace qshuffle;

namespace {

std::shared_ptr<const CartanDatum> cartan(const std::string& name) {
  return std::make_shared<const CartanDatum>(CartanDatum::parse(name));
}

// Reference root orders as coordinate vectors.
const std::map<std::string, std::pair<std::vector<int>, std::vector<std::vector<int>>>> kReferenceOrders = {
    {"G2", {{1, 2, 1, 2, 1, 2}, {{1, 0}, {3, 1}, {2, 1}, {3, 2}, {1, 1}, {0, 1}}}},
    {"B3",
     {{1, 2, 3, 1, 2, 1, 3, 2, 3},
      {{1, 0, 0}, {2, 1, 0}, {2, 1, 1}, {1, 1, 0}, {2, 2, 1}, {1, 1, 1}, {0, 1, 0}, {0, 1, 1}, {0, 0, 1}}}},
    {"C3",
     {{1, 2, 1, 3, 2, 1, 3, 2, 3},
      {{1, 0, 0}, {1, 1, 0}, {1, 2, 0}, {1, 1, 1}, {1, 2, 1}, {1, 2, 2}, {0, 1, 0}, {0, 1, 1}, {0, 0, 1}}}},
    {"D4",
     {{1, 3, 2, 4, 3, 1, 4, 3, 2, 4, 3, 4},
      {{1, 0, 0, 0}, {1, 0, 1, 0}, {1, 1, 1, 0}, {1, 0, 1, 1}, {1, 1, 1, 1}, {1, 1, 2, 1},
       {0, 1, 0, 0}, {0, 1, 1, 0}, {0, 1, 1, 1}, {0, 0, 1, 0}, {0, 0, 1, 1}, {0, 0, 0, 1}}}},
    {"A5",
     {{1, 2, 3, 4, 5, 1, 2, 3, 4, 1, 2, 3, 1, 2, 1},
      {{1, 0, 0, 0, 0}, {1, 1, 0, 0, 0}, {1, 1, 1, 0, 0}, {1, 1, 1, 1, 0}, {1, 1, 1, 1, 1},
       {0, 1, 0, 0, 0}, {0, 1, 1, 0, 0}, {0, 1, 1, 1, 0}, {0, 1, 1, 1, 1}, {0, 0, 1, 0, 0},
       {0, 0, 1, 1, 0}, {0, 0, 1, 1, 1}, {0, 0, 0, 1, 0}, {0, 0, 0, 1, 1}, {0, 0, 0, 0, 1}}}},
};

// s_i(v) = v - <v, alpha_i^vee> alpha_i with <alpha_j, alpha_i^vee> = a_ij.
std::vector<int> reflect(const CartanDatum& c, int i, std::vector<int> v) {
  int pairing = 0;
  for (int j = 1; j <= c.rank(); ++j) pairing += v[static_cast<std::size_t>(j - 1)] * c.cartan(i, j);
  v[static_cast<std::size_t>(i - 1)] -= pairing;
  return v;
}

}  // namespace

TEST_CASE("cartan data") {
  const auto g2 = cartan("G2");
  CHECK(g2->d(1) == 1);
  CHECK(g2->d(2) == 3);
  CHECK(g2->simple_form(1, 2) == -3);
  CHECK(g2->simple_form(1, 1) == 2);
  CHECK(g2->simple_form(2, 2) == 6);
  CHECK(g2->form(Weight({2, 1}), Weight({2, 1})) == 2);
  CHECK(cartan("B3")->d(1) == 1);
  CHECK(cartan("B3")->d(2) == 2);
  CHECK(cartan("B3")->d(3) == 2);
  CHECK(cartan("C3")->d(1) == 2);
  CHECK(cartan("C3")->d(3) == 1);
  for (const char* name : {"A1", "A5", "B2", "B3", "C3", "C4", "D4", "D5", "G2"}) {
    const auto c = cartan(name);
    for (int i = 1; i <= c->rank(); ++i) {
      CHECK(c->cartan(i, i) == 2);
      CHECK(c->simple_form(i, i) == 2 * c->d(i));
      for (int j = 1; j <= c->rank(); ++j) {
        if (i != j) CHECK(c->cartan(i, j) <= 0);
        CHECK(c->d(i) * c->cartan(i, j) == c->d(j) * c->cartan(j, i));
      }
    }
  }
  CHECK_THROWS_AS(CartanDatum::parse("E6"), Error);
  CHECK_THROWS_AS(CartanDatum::parse("F4"), Error);
  CHECK_THROWS_AS(CartanDatum::parse("X2"), Error);
}

TEST_CASE("positive roots agree with reflection closure") {
  const std::map<std::string, std::size_t> expected = {{"A5", 15}, {"B3", 9}, {"C3", 9}, {"D4", 12}, {"G2", 6},
                                                       {"A2", 3},  {"B4", 16}, {"C4", 16}, {"D5", 20}};
  for (const auto& [name, count] : expected) {
    const auto c = cartan(name);
    std::set<std::vector<int>> closure;
    std::vector<std::vector<int>> todo;
    for (int i = 1; i <= c->rank(); ++i) {
      std::vector<int> a(static_cast<std::size_t>(c->rank()), 0);
      a[static_cast<std::size_t>(i - 1)] = 1;
      todo.push_back(a);
    }
    while (!todo.empty()) {
      std::vector<int> v = todo.back();
      todo.pop_back();
      if (!closure.insert(v).second) continue;
      for (int i = 1; i <= c->rank(); ++i) {
        std::vector<int> w = reflect(*c, i, v);
        if (std::all_of(w.begin(), w.end(), [](int x) { return x >= 0; })) todo.push_back(w);
      }
    }
    CHECK_MESSAGE(closure.size() == count, name);
    CHECK(c->positive_roots().size() == count);
    for (const Weight& r : c->positive_roots()) CHECK(closure.count(r.coords()) == 1);
  }
}

TEST_CASE("reference convex orders") {
  for (const auto& [name, data] : kReferenceOrders) {
    const ConvexOrder order(cartan(name), data.first);
    REQUIRE(order.size() == data.second.size());
    for (std::size_t k = 0; k < order.size(); ++k) CHECK_MESSAGE(order.root(k) == Weight(data.second[k]), name);
    CHECK(*default_reduced_word(*cartan(name)) == data.first);
    const auto& ref = reference::imaginary_identity(name);
    CHECK(ref.reduced_word == data.first);
    CHECK(ref.roots == data.second);
  }
}

TEST_CASE("convex order errors") {
  CHECK_THROWS_AS(ConvexOrder(cartan("G2"), {1, 1, 2, 1, 2, 2}), Error);
  CHECK_THROWS_AS(ConvexOrder(cartan("G2"), {1, 2, 1, 2, 1}), Error);
  CHECK_THROWS_AS(ConvexOrder(cartan("G2"), {1, 2, 1, 2, 1, 3}), Error);
  try {
    ConvexOrder(cartan("G2"), {1, 1, 2, 1, 2, 2});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotReduced);
  }
  try {
    ConvexOrder(cartan("G2"), {1, 2});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::WrongLength);
  }
}

TEST_CASE("convexity of reduced-word orders") {
  std::vector<std::pair<std::string, std::vector<int>>> cases;
  for (const auto& [name, data] : kReferenceOrders) cases.emplace_back(name, data.first);
  cases.push_back({"G2", {2, 1, 2, 1, 2, 1}});
  cases.push_back({"A3", {}});
  cases.push_back({"B4", {}});
  cases.push_back({"C4", {}});
  cases.push_back({"D5", {}});
  for (auto& [name, word] : cases) {
    const auto c = cartan(name);
    if (word.empty()) word = default_reduced_word(*c).value_or(lyndon_reduced_word(*c));
    const ConvexOrder order(c, word);
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t j = i + 1; j < order.size(); ++j) {
        if (auto k = order.position_of(order.root(i) + order.root(j))) {
          CHECK_MESSAGE((i < *k && *k < j), name);
        }
      }
    }
  }
}

TEST_CASE("default and lyndon-induced reduced words") {
  for (const char* name : {"A2", "A3", "A4", "B2", "B4", "C2", "C4", "D5", "G2"}) {
    const auto c = cartan(name);
    if (const auto w = default_reduced_word(*c)) CHECK_NOTHROW(ConvexOrder(c, *w));
    CHECK_NOTHROW(ConvexOrder(c, lyndon_reduced_word(*c)));
  }
  CHECK(!default_reduced_word(*cartan("B4")));
}

TEST_CASE("kostant partitions") {
  const auto g2 = cartan("G2");
  const ConvexOrder order(g2, {1, 2, 1, 2, 1, 2});
  CHECK(kostant_partitions(order, Weight({1, 1})).size() == 2);
  CHECK(kostant_partitions(order, Weight({1, 0})) == std::vector<MVector>{MVector::parse("1,0,0,0,0,0")});
  const std::vector<MVector> p = kostant_partitions(order, Weight({2, 1}));
  const std::set<MVector> got(p.begin(), p.end());
  CHECK(got == std::set<MVector>{MVector::parse("0,0,1,0,0,0"), MVector::parse("1,0,0,0,1,0"),
                                 MVector::parse("2,0,0,0,0,1")});
  CHECK(kostant_partitions(order, Weight({0, 0})).size() == 1);

  // Counts agree with a brute-force recursion and do not depend on the word.
  const ConvexOrder other(g2, {2, 1, 2, 1, 2, 1});
  for (int a = 0; a <= 6; ++a) {
    for (int b = 0; b <= 4; ++b) {
      const Weight nu({a, b});
      const auto n = static_cast<long long>(kostant_partitions(order, nu).size());
      CHECK(n == oracle::kostant_count(g2->positive_roots(), 0, nu.coords()));
      CHECK(n == static_cast<long long>(kostant_partitions(other, nu).size()));
      for (const MVector& m : kostant_partitions(order, nu)) CHECK(m.weight(order) == nu);
    }
  }
  for (const char* name : {"B3", "C3", "D4", "A5"}) {
    const auto c = cartan(name);
    const ConvexOrder o(c, *default_reduced_word(*c));
    Weight nu(static_cast<std::size_t>(c->rank()));
    for (std::size_t i = 0; i < nu.rank(); ++i) nu[i] = 2;
    CHECK(static_cast<long long>(kostant_partitions(o, nu).size()) ==
          oracle::kostant_count(c->positive_roots(), 0, nu.coords()));
  }
}

TEST_CASE("mvectors") {
  const auto g2 = cartan("G2");
  const ConvexOrder order(g2, {1, 2, 1, 2, 1, 2});
  const MVector m = MVector::parse("1,0,1,0,1,0");
  CHECK(m.to_string() == "(1,0,1,0,1,0)");
  CHECK(m.csv() == "1,0,1,0,1,0");
  CHECK(m.weight(order) == Weight({4, 2}));
  CHECK(m.degree(order) == 6);
  CHECK(2 * m == MVector::parse("2,0,2,0,2,0"));
  CHECK(Weight({3, 2}).to_string() == "3a1+2a2");
  CHECK_THROWS_AS(MVector::parse("1,x"), Error);
}
