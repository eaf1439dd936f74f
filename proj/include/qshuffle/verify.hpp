#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace qshuffle {

enum class Tier { Fast, Standard, Heavy };

Tier parse_tier(const std::string& name);
const char* to_string(Tier tier);

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  double seconds = 0;
  bool passed() const;
};

struct VerifyOptions {
  Tier tier = Tier::Standard;
  std::optional<double> budget;  // seconds
  std::optional<std::filesystem::path> cache_dir;
  // Degree bound for census and conj1; negative selects the tier default.
  int max_degree = -1;
  int jobs = 1;
};

// g2, b3, c3, d4, a5, census, conj1.
const std::vector<std::string>& suite_names();
// Throws PreconditionViolated when the tier does not permit the suite and
// InvalidArgument for an unknown name.
SuiteReport run_suite(const std::string& name, const VerifyOptions& options);

}  // namespace qshuffle
