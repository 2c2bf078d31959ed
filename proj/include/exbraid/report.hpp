#pragma once

#include <optional>
#include <string>
#include <vector>

#include "exbraid/category.hpp"
#include "exbraid/finiteness.hpp"
#include "exbraid/json_io.hpp"

namespace exbraid {

// Embedded reference values the report is checked against.
struct Table1Row {
  Algebra algebra;
  int ell;
  std::size_t rank;
  bool pointed;
};
const std::vector<Table1Row>& table1_fixture();
// Maximum l per witness row, in all_witness_rows() order.
const std::vector<int>& table2_max_ell_fixture();

struct VerdictRange {
  Algebra algebra;
  int lo, hi;
};
// G2 7..60, F4 9..40, E6 12..60, E7 18..60, E8 30..60.
const std::vector<VerdictRange>& default_verdict_ranges();

// Certificate clauses expected for individual cases.
struct ClauseFixture {
  Algebra algebra;
  int ell;
  std::vector<std::string> clauses;  // each must appear in the certificate
};
const std::vector<ClauseFixture>& clause_fixtures();

struct ReportOptions {
  bool tables = true;
  bool verdicts = true;
  std::vector<VerdictRange> ranges = default_verdict_ranges();
  unsigned threads = 0;
  std::optional<int> jmax;
};

struct ReportResult {
  Json doc;
  std::string text;                     // fixed-width tables
  std::vector<std::string> mismatches;  // empty when everything matches
};

ReportResult run_report(const ReportOptions& opt);

// Text renderings, shared with the CLI.
std::string render_table1(const std::vector<std::pair<Algebra, ClassifyRow>>& rows);
std::string render_table2(const std::vector<TotientBound>& rows);
std::string render_verdicts(const std::vector<CaseReport>& cases);

// Checks a verdict suite against the expectations: Infinite whenever a
// verdict is sought, no verdict for the weakly integral cases, clause
// fixtures present. Returns mismatch descriptions.
std::vector<std::string> check_verdicts(const std::vector<CaseReport>& cases);

}  // namespace exbraid
