#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qweyl/weyl.hpp"

namespace qweyl {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SuiteParams {
  int m = 2, n = 2;
  std::optional<int> k, l;
  int max_deg = 3;
  uint64_t seed = 0;
};

struct CheckResult {
  std::string id;
  bool pass = false;
  std::string witness;  // nonempty iff !pass
};

struct SuiteReport {
  std::string suite;
  SuiteParams params;
  std::vector<CheckResult> checks;
  double elapsed_ms = 0.0;
  bool allPass() const;
};

/// Names of the registered suites, in catalog order.
std::vector<std::string> suite_names();
std::string suite_description(const std::string& name);

/// Runs the named suite. Throws UsageError for an unknown suite or
/// out-of-range parameters. Deterministic for fixed params and seed
/// (checks run concurrently but land in fixed slots).
SuiteReport run_suite(const std::string& name, const SuiteParams& params);

std::string report_text(const SuiteReport& r);
std::string report_json(const SuiteReport& r);
/// 0 when every check passed, 1 otherwise.
int exit_code_for(const SuiteReport& r);

/// Deterministic pseudo-random stream for sampled checks.
class Rng {
 public:
  explicit Rng(uint64_t seed);
  uint64_t next();
  long below(long bound);  // bound > 0

 private:
  uint64_t s_;
};

WeylElement random_element(Rng& rng, AlgebraSpec spec, int maxTerms, int maxDeg);
std::vector<GenRef> random_word(Rng& rng, AlgebraSpec spec, int len);

}  // namespace qweyl
