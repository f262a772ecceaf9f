#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace krfusion {

struct PropertyResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::vector<std::string> failure_details;  // first few failures only
  bool passed() const { return failures == 0; }
};

struct SelfCheckReport {
  std::vector<PropertyResult> properties;
  int total_cases() const;
  bool passed() const;
};

/*
  Randomised structural invariants over all supported algebras of rank <= 4:
  permutation invariance of R, zero-weight gate, top weight, KR1 coefficient
  positivity, positivity-filter redundancy, q-binomial identities,
  Freudenthal totals and the Klimyk dimension homomorphism.
  `cases_per_property` random draws are made for every property.
*/
SelfCheckReport run_selfcheck(std::uint64_t seed, int cases_per_property);

}  // namespace krfusion
