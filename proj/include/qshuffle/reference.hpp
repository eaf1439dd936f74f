#pragma once

#include <string>
#include <vector>

namespace qshuffle::reference {

// b^2 = q^shift (b^[2] + z) for an imaginary vector b.
struct ImaginaryIdentity {
  std::string type;
  std::vector<int> reduced_word;
  // Positive roots in convex order, as coordinate vectors on the simple roots.
  std::vector<std::vector<int>> roots;
  std::string b;
  std::string z;
  int shift = 0;
};

const std::vector<ImaginaryIdentity>& imaginary_identities();
const ImaginaryIdentity& imaginary_identity(const std::string& type);

struct WordTerm {
  std::string word;
  std::string coefficient;
};

// Type G2 with the reduced word 121212.
const std::vector<WordTerm>& g2_b();
const std::vector<WordTerm>& g2_b_squared();
const std::vector<WordTerm>& g2_b2();
const std::vector<WordTerm>& g2_z();

struct G2Census {
  int max_degree = 7;
  std::size_t total = 116;
  std::vector<std::string> imaginary;
  std::vector<std::string> primes;
};
const G2Census& g2_census();

struct DrinfeldLine {
  int k;
  std::vector<int> exponents;  // P_k(u) = prod (u - q^{-e})
};

struct TypeAModule {
  std::string name;
  std::string mvector;  // A5, default reduced word
  std::string multisegment;
  std::vector<DrinfeldLine> drinfeld;
  long long dimension = 0;
};
// M, M' and M'' of the A5 example; N = 16.
const std::vector<TypeAModule>& a5_modules();

}  // namespace qshuffle::reference
