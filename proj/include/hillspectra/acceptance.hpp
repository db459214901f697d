#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hillspectra {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // measured values backing the verdict
};

struct AcceptanceSummary {
  std::vector<CriterionResult> results;
  int passed = 0;
  int failed = 0;
  bool all_pass = false;
};

// runs the twelve verification checks, streaming one PASS/FAIL line per
// check to `out` as it completes; quick mode shrinks index ranges and
// truncation sizes to smoke-test the machinery in well under a minute and
// labels the header accordingly; thresholds are identical in both modes
AcceptanceSummary run_acceptance(std::ostream& out, bool quick = false);

}  // namespace hillspectra
