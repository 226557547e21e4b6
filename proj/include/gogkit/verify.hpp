// The verification suite: every desk-scale checkable claim the toolkit
// reproduces, grouped into ten numbered criteria. Shared by the CLI
// `verify paper` subcommand and the acceptance test binary.
#pragma once

#include <string>
#include <vector>

namespace gogkit {

struct ClaimResult {
  std::string id;        // e.g. "3.index"
  std::string anchor;    // machine-readable claim tag, e.g. "lambda22.delta.index"
  std::string computed;
  std::string expected;
  bool pass = false;
  bool unverifiable = false;  // declared-metadata claims only
};

struct CriterionResult {
  int number = 0;
  std::string title;
  std::vector<ClaimResult> claims;
  long long elapsed_ms = 0;

  bool pass() const {
    for (const auto& c : claims)
      if (!c.pass && !c.unverifiable) return false;
    return true;
  }
};

struct VerificationReport {
  std::vector<CriterionResult> criteria;

  bool pass() const {
    for (const auto& c : criteria)
      if (!c.pass()) return false;
    return true;
  }
};

// Runs the criteria whose number or title contains `only` (all when
// empty). Never throws on claim failure; infrastructure errors surface as
// failed claims with the message in `computed`.
VerificationReport run_verification(const std::string& only = "");

std::string verification_report_json(const VerificationReport& report);

}  // namespace gogkit
