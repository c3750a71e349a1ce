#pragma once

// The acceptance suite: one pass/fail result per criterion.

#include <cstdint>
#include <string>
#include <vector>

namespace nott {

struct AcceptanceOptions {
  std::uint64_t seed = 20240611;
  int jobs = 1;
  std::uint64_t budget = std::uint64_t{1} << 26;
};

struct CriterionResult {
  std::string id;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

/// "1", "2", "3a", ...
const std::vector<std::string>& acceptance_ids();

/// Throws UsageError for an unknown id.
CriterionResult run_criterion(const std::string& id, const AcceptanceOptions& options = {});

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

/// "PASS 3a  legacy d_{1,m} table  (6 types) [0.01 s]"
std::string format_result(const CriterionResult& result);

}  // namespace nott
