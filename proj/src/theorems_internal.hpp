#pragma once

#include <functional>
#include <string>
#include <vector>

#include "xint/theorems.hpp"

namespace xint::detail {

struct CrossRun {
  DisjointnessGraph meta;
  SearchResult best;
  std::vector<SetFamily> decoded;
};

/// Times `body` and turns an InvariantViolation into a failed report.
TheoremReport run_report(std::string theorem, nlohmann::json params, const std::function<void(TheoremReport&)>& body);

nlohmann::json families_json(const std::vector<SetFamily>& families);

void require_budget(const SetFamily& family);

/// Maximum k-family cross sum with the witness re-validated and recorded.
CrossRun run_cross(const SetFamily& family, int k, const SuiteOptions& options, TheoremReport& report);

}  // namespace xint::detail
