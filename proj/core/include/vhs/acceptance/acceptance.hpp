#pragma once

#include <string>
#include <vector>

namespace vhs {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  double time_limit = 0;  ///< seconds; exceeding it fails the criterion
};

/// Identifiers of the acceptance criteria, 1..12.
std::vector<int> acceptance_ids();

/// Runs one criterion; exceptions are reported as failures.
CriterionResult run_criterion(int id);

/// Runs the given criteria (all when empty) in order.
std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids = {});

/// "PASS [3] title: detail (1.23 s)".
std::string format_result(const CriterionResult& r);

}  // namespace vhs
