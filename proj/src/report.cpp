#include "exbraid/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "exbraid/labels.hpp"

namespace exbraid {

const std::vector<Table1Row>& table1_fixture() {
  static const std::vector<Table1Row> rows = {
      {Algebra::E6, 13, 3, true},
      {Algebra::E7, 19, 2, true},
      {Algebra::E8, 32, 3, false},
      {Algebra::G2, 8, 2, true},
  };
  return rows;
}

const std::vector<int>& table2_max_ell_fixture() {
  static const std::vector<int> v = {75, 120, 210, 66, 51, 33, 14};
  return v;
}

const std::vector<VerdictRange>& default_verdict_ranges() {
  static const std::vector<VerdictRange> r = {
      {Algebra::G2, 7, 60}, {Algebra::F4, 9, 40}, {Algebra::E6, 12, 60},
      {Algebra::E7, 18, 60}, {Algebra::E8, 30, 60},
  };
  return r;
}

const std::vector<ClauseFixture>& clause_fixtures() {
  static const std::vector<ClauseFixture> f = {
      {Algebra::G2, 21, {tag::kTW, tag::kRTdiii}},
      {Algebra::G2, 18, {tag::kTW, tag::kRTdiii}},
      {Algebra::G2, 24, {tag::kRTdiii, tag::kMatrix}},
      {Algebra::G2, 20, {tag::kRTdiii, tag::kMatrix}},
      {Algebra::G2, 10, {tag::kFibonacci}},
      {Algebra::G2, 15, {tag::kFibonacci}},
      {Algebra::F4, 22, {tag::kTW, tag::kRTdiv}},
      {Algebra::F4, 26, {tag::kTW, tag::kRTdiv}},
      {Algebra::F4, 24, {tag::kTW, tag::kSpectrumMatch, tag::kMatrix}},
      {Algebra::E6, 14, {tag::kRTcExcluded, tag::kRTdii}},
      {Algebra::E7, 20, {tag::kFibIsing}},
      {Algebra::E8, 33, {tag::kReductionF4, tag::kRTdiv}},
  };
  return f;
}

std::string render_table1(const std::vector<std::pair<Algebra, ClassifyRow>>& rows) {
  std::ostringstream os;
  os << "Non-trivial weakly integral C(g, q, l)\n";
  os << "+------+------+--------------------+\n";
  os << "| g    | l    | notes              |\n";
  os << "+======+======+====================+\n";
  for (Algebra a : all_algebras()) {
    bool any = false;
    for (const auto& [alg, r] : rows) {
      if (alg != a) continue;
      any = true;
      std::string notes = (r.pointed ? "pointed, " : "") + std::string("rank ") + std::to_string(r.rank);
      os << "| " << std::left << std::setw(5) << algebra_name(a) << "| " << std::setw(5) << r.ell << "| "
         << std::setw(19) << notes << "|\n";
    }
    if (!any)
      os << "| " << std::left << std::setw(5) << algebra_name(a) << "| " << std::setw(5) << "none"
         << "| " << std::setw(19) << "" << "|\n";
    os << "+------+------+--------------------+\n";
  }
  return os.str();
}

namespace {

std::string qratio(const std::vector<long>& num, const std::vector<long>& den) {
  std::string s;
  for (long n : num) s += "[" + std::to_string(n) + "]";
  if (!den.empty()) {
    s += "/";
    for (long n : den) s += "[" + std::to_string(n) + "]";
  }
  return s;
}

}  // namespace

std::string render_table2(const std::vector<TotientBound>& rows) {
  static const char* kRule =
      "+--------------------------+-----------------------------------------+----------------------------+-------+\n";
  std::ostringstream os;
  os << "Objects of non-integral FP-dimension\n";
  os << kRule;
  os << "| g                        | (nu, mu) internal coordinates           | FPdim(V_nu)                | max l |\n";
  os << "+==========================+=========================================+============================+=======+\n";
  for (const auto& t : rows) {
    const WitnessData w = witness_data(t.row);
    const std::string pair = "(" + w.nu.to_string() + ", " + w.mu.to_string() + ")";
    os << "| " << std::left << std::setw(25) << witness_row_name(t.row) << "| " << std::setw(40) << pair << "| "
       << std::setw(27) << qratio(w.num_qnumbers, w.den_qnumbers) << "| " << std::setw(6) << t.max_ell << "|\n";
  }
  os << kRule;
  return os.str();
}

std::string render_verdicts(const std::vector<CaseReport>& cases) {
  std::ostringstream os;
  os << std::left << std::setw(5) << "g" << std::setw(5) << "l" << std::setw(9) << "rank" << std::setw(14) << "object"
     << std::setw(3) << "d" << std::setw(6) << "po" << std::setw(14) << "outcome" << "certificate\n";
  for (const auto& r : cases) {
    os << std::setw(5) << algebra_name(r.algebra) << std::setw(5) << r.ell << std::setw(9) << r.rank;
    if (!r.verdict_sought) {
      os << "-- " << r.note << "\n";
      continue;
    }
    const std::string obj = r.object ? label_string(r.algebra, *r.object) : "-";
    os << std::setw(14) << obj << std::setw(3) << (r.d ? std::to_string(r.d) : "-") << std::setw(6)
       << (r.verdict.po ? std::to_string(*r.verdict.po) : "-") << std::setw(14) << outcome_name(r.verdict.outcome);
    for (std::size_t i = 0; i < r.verdict.certificate.size(); ++i) os << (i ? ", " : "") << r.verdict.certificate[i];
    if (!r.verdict.reason.empty()) os << " (" << r.verdict.reason << ")";
    os << "\n";
  }
  return os.str();
}

std::vector<std::string> check_verdicts(const std::vector<CaseReport>& cases) {
  std::vector<std::string> bad;
  for (const auto& r : cases) {
    const std::string id = algebra_name(r.algebra) + " l=" + std::to_string(r.ell);
    const bool table1 = std::any_of(table1_fixture().begin(), table1_fixture().end(),
                                    [&](const Table1Row& t) { return t.algebra == r.algebra && t.ell == r.ell; });
    if (table1) {
      if (r.verdict_sought) bad.push_back(id + ": weakly integral case received a verdict");
      continue;
    }
    if (r.rank < 2) {
      if (r.verdict_sought) bad.push_back(id + ": rank 1 case received a verdict");
      continue;
    }
    if (!r.verdict_sought) {
      bad.push_back(id + ": no verdict sought (" + r.note + ")");
      continue;
    }
    if (r.verdict.outcome != Outcome::Infinite) bad.push_back(id + ": expected Infinite, got " + r.verdict.to_string());
    for (const auto& f : clause_fixtures()) {
      if (f.algebra != r.algebra || f.ell != r.ell) continue;
      for (const auto& c : f.clauses)
        if (std::find(r.verdict.certificate.begin(), r.verdict.certificate.end(), c) == r.verdict.certificate.end())
          bad.push_back(id + ": certificate lacks " + c);
    }
  }
  return bad;
}

ReportResult run_report(const ReportOptions& opt) {
  ReportResult res;
  res.doc = Json::object();
  std::ostringstream text;

  if (opt.tables) {
    std::vector<std::pair<Algebra, ClassifyRow>> rows;
    Json t1 = Json::array();
    for (Algebra a : all_algebras())
      for (const auto& r : classify_weakly_integral(a, nullptr, opt.threads)) {
        rows.emplace_back(a, r);
        t1.push_back(to_json(r, a));
      }
    res.doc["table1"] = t1;
    text << render_table1(rows) << "\n";

    const auto& fx = table1_fixture();
    if (rows.size() != fx.size()) res.mismatches.push_back("table1: row count differs");
    for (std::size_t i = 0; i < std::min(rows.size(), fx.size()); ++i) {
      const auto& [a, r] = rows[i];
      if (a != fx[i].algebra || r.ell != fx[i].ell || r.rank != fx[i].rank || r.pointed != fx[i].pointed)
        res.mismatches.push_back("table1: row " + std::to_string(i) + " differs: " + algebra_name(a) + " l=" +
                                 std::to_string(r.ell));
    }

    std::vector<TotientBound> bounds;
    Json t2 = Json::array();
    for (WitnessRow w : all_witness_rows()) {
      bounds.push_back(totient_bound(w));
      t2.push_back(to_json(bounds.back()));
    }
    res.doc["table2"] = t2;
    text << render_table2(bounds) << "\n";
    const auto& mx = table2_max_ell_fixture();
    for (std::size_t i = 0; i < bounds.size(); ++i)
      if (bounds[i].max_ell != mx[i])
        res.mismatches.push_back("table2: " + witness_row_name(bounds[i].row) + " max l " +
                                 std::to_string(bounds[i].max_ell) + " != " + std::to_string(mx[i]));
  }

  if (opt.verdicts) {
    std::vector<CaseReport> all;
    for (const auto& r : opt.ranges) {
      auto part = analyze_range(r.algebra, r.lo, r.hi, opt.threads, opt.jmax);
      all.insert(all.end(), part.begin(), part.end());
    }
    Json v = Json::array();
    for (const auto& c : all) v.push_back(to_json(c));
    res.doc["verdicts"] = v;
    text << render_verdicts(all);
    for (auto& m : check_verdicts(all)) res.mismatches.push_back("verdicts: " + m);
  }

  res.doc["mismatches"] = res.mismatches;
  res.text = text.str();
  if (!res.mismatches.empty()) {
    res.text += "\nREGRESSION MISMATCHES:\n";
    for (const auto& m : res.mismatches) res.text += "  " + m + "\n";
  }
  return res;
}

}  // namespace exbraid
