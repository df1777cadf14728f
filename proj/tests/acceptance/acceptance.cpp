#include <cstdio>

#include "coalg/cli/suites.hpp"
#include "coalg/error.hpp"

int main() {
  int failures = 0;
  for (const auto& c : coalg::acceptance_criteria()) {
    coalg::CriterionResult r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r.id = c.id;
      r.title = c.title;
      r.summary = std::string("error: ") + e.what();
    }
    const char* status = !r.ok ? "FAIL" : r.verdict == coalg::Verdict::Bounded ? "PASS (bounded)" : "PASS";
    std::printf("criterion %d: %s  %s  [%s] %.2fs\n", r.id, status, r.title.c_str(), r.summary.c_str(), r.seconds);
    std::fflush(stdout);
    if (!r.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
