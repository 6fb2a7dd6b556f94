#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "realgraph/group.hpp"

// The claim suite behind `verify-paper`: the two example groups, the twisted
// family, the lemma battery over the group catalog, and the spot theorem
// checks.  Each claim prints one line, "<id> = <observed> PASS" or
// "<id> = <observed> FAIL (<witness>)".

namespace rg {

struct VerifyOptions {
  uint64_t cap = kDefaultClosureCap;
  uint64_t seed = 0xC0FFEE;          // for the sampled ring checks
  std::vector<std::string> only;     // claim-id prefixes; empty runs all
};

// Runs the selected claims in registry order; returns the number of failures.
int run_verify(const VerifyOptions& opts, std::ostream& out);

// Claim identifiers in registry order.
std::vector<std::string> verify_claim_ids();

}  // namespace rg
