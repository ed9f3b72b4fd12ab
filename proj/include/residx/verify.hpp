#pragma once

// Exhaustive verification suites over the oracle models. Each suite counts
// the identities it checked and the ones that failed.

#include <string>
#include <string_view>
#include <vector>

#include "residx/arith.hpp"
#include "residx/decompose.hpp"

namespace residx {

/// {2, 3, 5, 8, -2, -3, -4, 9/25, 1/2}
const std::vector<Rational>& default_test_bases();

struct VerifyConfig {
  u64 max_n = 200;   // cyclic group orders
  u64 max_h = 8;
  u64 max_p = 2000;  // primes for the (Z/pZ)* suites
  u64 max_t = 24;
  std::vector<Rational> bases = default_test_bases();
};

struct SuiteResult {
  std::string name;
  u64 checks = 0;
  u64 violations = 0;
  std::string first_violation;
  std::vector<std::string> notes;

  bool ok() const { return violations == 0; }
};

const std::vector<std::string>& suite_names();

/// Throws a domain error for an unknown name.
SuiteResult run_suite(std::string_view name, const VerifyConfig& config);

}  // namespace residx
