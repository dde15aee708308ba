#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "rigidity/corpus.hpp"
#include "rigidity/degrees.hpp"

namespace rigidity {

enum class Verdict { pass, fail, not_applicable, finding };

std::string to_string(Verdict v);

struct CheckReport {
  std::string claim;
  std::string statement; // emitted as the report's "quote" field
  std::string instance;
  nlohmann::ordered_json expected;
  nlohmann::ordered_json computed;
  Verdict verdict = Verdict::not_applicable;
};

/// Claim ids in suite order. Findings claims (suspected source-material
/// slips) report disagreement as `finding`, never `fail`.
std::vector<std::string> all_claims();
bool is_findings_claim(const std::string &claim);
std::string claim_statement(const std::string &claim);

/// Runs the selected claims over the corpus; one report per applicable
/// (claim, instance), sorted by (claim, instance). `claims` may be {"all"}.
std::vector<CheckReport> run_suite(const std::vector<std::string> &claims,
                                   const Corpus &corpus);

struct SuiteSummary {
  int pass = 0;
  int fail = 0;
  int na = 0;
  int findings = 0;
};
SuiteSummary summarize(const std::vector<CheckReport> &reports);

nlohmann::ordered_json report_json(const Corpus &corpus,
                                   const std::vector<CheckReport> &reports);

} // namespace rigidity
