#include <cstdio>
#include <iostream>
#include <string>

#include "schurw/checklist.hpp"

// Runs the standing nine-criterion checklist and prints one line per
// criterion.  Failing rows and skipped grid points are listed under the
// criterion they belong to.  Exit code 0 iff every criterion passes.
int main(int argc, char** argv) {
  schurw::checklist::ChecklistOptions opt;
  for (int i = 1; i < argc; ++i)
    if (std::string(argv[i]) == "--limit-override") opt.limit_override = true;

  bool all_pass = true;
  double total_ms = 0.0;
  for (int i = 1; i <= schurw::checklist::kCriterionCount; ++i) {
    auto rep = schurw::checklist::run_criterion(i, opt);
    total_ms += rep.ms;
    std::cout << "criterion " << rep.index << ": " << rep.summary() << " -- " << rep.title
              << "\n";
    for (const auto& row : rep.rows)
      if (!row.pass)
        std::cout << "  FAIL " << row.claim_id << ": computed " << row.computed
                  << ", expected " << row.expected << " (" << row.provenance << ")\n";
    for (const auto& s : rep.skipped) std::cout << "  skipped: " << s << "\n";
    std::cout.flush();
    if (!rep.pass()) all_pass = false;
  }

  std::printf("total: %s (%.1f s)\n", all_pass ? "PASS" : "FAIL", total_ms / 1000.0);
  return all_pass ? 0 : 1;
}
