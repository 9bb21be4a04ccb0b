#pragma once
#include <iosfwd>
#include <string>
#include <vector>

// The standing verification checklist: nine criteria covering thresholds,
// dimension formulas, the defect instance, lattice saturation, partition
// identities, the diagram algebra, and the double centralizer.  Each criterion
// expands into named check rows (claim id, computed, expected, provenance,
// pass, wall time) plus a list of grid points skipped for size.
namespace schurw::checklist {

struct CheckRow {
  std::string claim_id;
  std::string computed;
  std::string expected;
  std::string provenance;  // "literature" | "oracle" | "definition"
  bool pass = false;
  double ms = 0.0;
};

struct CriterionReport {
  int index = 0;
  std::string title;
  std::vector<CheckRow> rows;
  std::vector<std::string> skipped;  // human-readable reasons, grid order
  double ms = 0.0;

  bool pass() const;
  // e.g. "PASS (8 verified, 4 skipped: size limit)"
  std::string summary() const;
};

struct ChecklistReport {
  std::vector<CriterionReport> criteria;
  bool pass() const;
};

struct ChecklistOptions {
  bool limit_override = false;  // also attempt the over-budget grid points
};

extern const int kCriterionCount;

CriterionReport run_criterion(int index, const ChecklistOptions& opt = {});
ChecklistReport run_all(const ChecklistOptions& opt = {});

void write_table(std::ostream& os, const ChecklistReport& rep);
void write_json(std::ostream& os, const ChecklistReport& rep);

}  // namespace schurw::checklist
