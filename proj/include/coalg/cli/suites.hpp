#pragma once

#include <functional>
#include <string>
#include <vector>

#include "coalg/cli/report.hpp"
#include "coalg/cli/workspace.hpp"

namespace coalg {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool ok = false;
  Verdict verdict = Verdict::Fail;
  std::string summary;
  double seconds = 0;
};

struct Criterion {
  int id;
  std::string title;
  std::function<CriterionResult()> run;
};

/// The ten acceptance criteria, in order.
const std::vector<Criterion>& acceptance_criteria();

std::vector<std::string> suite_names();

/// `paper-examples`, `kan-cogroups`, `acceptance`.  Throws unknown-suite.
Report cmd_suite(const Workspace& ws, const std::string& name);

}  // namespace coalg
