#pragma once

#include <functional>
#include <optional>

#include "hitchin2/report.hpp"

namespace hitchin2 {

// Verification suites. Each runs a list of identity checks and returns
// one record per check; cmd_verify aggregates them into a report.

struct SuiteOptions {
  uint64_t seed = 1;
  // optional numeric curve parameters; checks that need specific sampling
  // draw their own when absent
  std::optional<std::array<Rational, 3>> params;
  // sample count for the sampled identities
  int samples = 100;
};

const std::vector<std::string>& suite_names();  // excludes "all"
VerificationReport run_suite(const std::string& name, const SuiteOptions& opts);

}  // namespace hitchin2
