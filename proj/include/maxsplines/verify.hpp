#pragma once

#include <optional>
#include <string>
#include <vector>

#include "maxsplines/analysis.hpp"

namespace maxsplines {

// Options for the verification battery. The per-check tolerances are pinned
// constants; tol_override, when set, replaces every slack tolerance (so 0
// turns each inequality strict).
struct VerifyOptions {
  int p_max = 8;
  std::vector<int> n_set;  // empty = per-criterion defaults
  std::optional<double> tol_override;
};

struct CriterionResult {
  int index = 0;
  std::string name;
  bool pass = true;
  std::vector<BoundReport> rows;
};

struct VerifyResult {
  std::vector<CriterionResult> criteria;
  bool all_pass() const;
  std::vector<BoundReport> all_rows() const;
};

VerifyResult run_verification(const VerifyOptions& opts = {});

}  // namespace maxsplines
