#include "qshuffle/reference.hpp"

#include "qshuffle/errors.hpp"

namespace qshuffle::reference {

const std::vector<ImaginaryIdentity>& imaginary_identities() {
  static const std::vector<ImaginaryIdentity> data = {
      {"G2",
       {1, 2, 1, 2, 1, 2},
       {{1, 0}, {3, 1}, {2, 1}, {3, 2}, {1, 1}, {0, 1}},
       "1,0,0,0,1,0",
       "1,0,1,0,1,0",
       -1},
      {"B3",
       {1, 2, 3, 1, 2, 1, 3, 2, 3},
       {{1, 0, 0}, {2, 1, 0}, {2, 1, 1}, {1, 1, 0}, {2, 2, 1}, {1, 1, 1}, {0, 1, 0}, {0, 1, 1}, {0, 0, 1}},
       "0,1,0,0,0,0,0,1,0",
       "0,1,0,0,1,0,0,1,0",
       -2},
      {"C3",
       {1, 2, 1, 3, 2, 1, 3, 2, 3},
       {{1, 0, 0}, {1, 1, 0}, {1, 2, 0}, {1, 1, 1}, {1, 2, 1}, {1, 2, 2}, {0, 1, 0}, {0, 1, 1}, {0, 0, 1}},
       "0,1,0,0,0,0,0,1,0",
       "0,1,0,0,1,0,0,1,0",
       -1},
      {"D4",
       {1, 3, 2, 4, 3, 1, 4, 3, 2, 4, 3, 4},
       {{1, 0, 0, 0},
        {1, 0, 1, 0},
        {1, 1, 1, 0},
        {1, 0, 1, 1},
        {1, 1, 1, 1},
        {1, 1, 2, 1},
        {0, 1, 0, 0},
        {0, 1, 1, 0},
        {0, 1, 1, 1},
        {0, 0, 1, 0},
        {0, 0, 1, 1},
        {0, 0, 0, 1}},
       "0,1,0,0,0,0,1,0,0,0,1,0",
       "0,1,0,0,1,0,0,1,0,0,1,0",
       -1},
      {"A5",
       {1, 2, 3, 4, 5, 1, 2, 3, 4, 1, 2, 3, 1, 2, 1},
       {{1, 0, 0, 0, 0},
        {1, 1, 0, 0, 0},
        {1, 1, 1, 0, 0},
        {1, 1, 1, 1, 0},
        {1, 1, 1, 1, 1},
        {0, 1, 0, 0, 0},
        {0, 1, 1, 0, 0},
        {0, 1, 1, 1, 0},
        {0, 1, 1, 1, 1},
        {0, 0, 1, 0, 0},
        {0, 0, 1, 1, 0},
        {0, 0, 1, 1, 1},
        {0, 0, 0, 1, 0},
        {0, 0, 0, 1, 1},
        {0, 0, 0, 0, 1}},
       "0,1,0,0,0,0,0,1,0,1,0,0,0,1,0",
       "0,1,0,1,0,0,1,0,1,0,1,0,0,1,0",
       -2},
  };
  return data;
}

const ImaginaryIdentity& imaginary_identity(const std::string& type) {
  for (const ImaginaryIdentity& x : imaginary_identities()) {
    if (x.type == type) return x;
  }
  throw Error(ErrorKind::InvalidArgument, "no reference identity for " + type);
}

const std::vector<WordTerm>& g2_b() {
  static const std::vector<WordTerm> data = {{"121", "1"}};
  return data;
}

const std::vector<WordTerm>& g2_b_squared() {
  static const std::vector<WordTerm> data = {
      {"121121", "2(1+q^-2)"},
      {"112211", "q^4+2q^2+1+q^-2+2q^-4+q^-6"},
      {"121211", "q+2q^-1+q^-3"},
      {"112121", "q+2q^-1+q^-3"},
  };
  return data;
}

const std::vector<WordTerm>& g2_b2() {
  static const std::vector<WordTerm> data = {
      {"121121", "q+q^-1"},
      {"112211", "q^5+2q^3+q+q^-1+2q^-3+q^-5"},
      {"121211", "q^2+2+q^-2"},
      {"112121", "q^2+2+q^-2"},
  };
  return data;
}

const std::vector<WordTerm>& g2_z() {
  static const std::vector<WordTerm> data = {{"121121", "q+q^-1"}};
  return data;
}

const G2Census& g2_census() {
  static const G2Census data = [] {
    G2Census c;
    for (int j = 0; j <= 4; ++j) c.imaginary.push_back("1,0,0,0,1," + std::to_string(j));
    for (int j = 0; j <= 1; ++j) c.imaginary.push_back("2,0,0,0,2," + std::to_string(j));
    for (int j = 0; j <= 2; ++j) c.imaginary.push_back(std::to_string(j) + ",1,0,0,0,1");
    c.primes = {"1,0,0,0,1,0", "2,0,0,0,2,0", "0,1,0,0,0,1"};
    return c;
  }();
  return data;
}

const std::vector<TypeAModule>& a5_modules() {
  static const std::vector<TypeAModule> data = {
      {"M",
       "0,1,0,0,0,0,0,1,0,1,0,0,0,1,0",
       "[1,2],[2,3,4],[3],[4,5]",
       {{1, {6}}, {2, {3, 9}}, {3, {6}}},
       252},
      {"M'",
       "0,1,0,1,0,0,1,0,1,0,1,0,0,1,0",
       "[1,2],[2,3],[3,4],[4,5],[1,2,3,4],[2,3,4,5]",
       {{2, {3, 5, 7, 9}}, {4, {5, 7}}},
       2522520},
      {"M''",
       "0,2,0,0,0,0,0,2,0,2,0,0,0,2,0",
       "[1,2],[1,2],[2,3,4],[2,3,4],[3],[3],[4,5],[4,5]",
       {{1, {6, 6}}, {2, {3, 3, 9, 9}}, {3, {6, 6}}},
       814773960},
  };
  return data;
}

}  // namespace qshuffle::reference
