#include "exbraid/category.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <sstream>
#include <thread>

#include "exbraid/error.hpp"

namespace exbraid {

CategorySpec::CategorySpec(Algebra a, int ell) : algebra_(a), ell_(ell), rs_(&RootSystem::get(a)) {
  if (ell < 2) throw PreconditionError("l must be at least 2");
  if (!nonempty(a, ell))
    throw PreconditionError("the alcove of " + algebra_name(a) + " at l=" + std::to_string(ell) + " is empty");
}

bool CategorySpec::nonempty(Algebra a, int ell) {
  const RootSystem& rs = RootSystem::get(a);
  const Root& th = ell % rs.m() == 0 ? rs.theta0() : rs.theta1();
  return ell >= 2 && rs.pair(rs.rho(), th) < ell;
}

CycloNumber CategorySpec::q_power(long num, long den) const {
  if (den <= 0) throw PreconditionError("q_power needs a positive denominator");
  return make_root_of_unity(2 * static_cast<std::uint32_t>(ell_) * static_cast<std::uint32_t>(den), num);
}

std::string CategorySpec::to_string() const {
  return "C(" + algebra_name(algebra_) + ", l=" + std::to_string(ell_) + ")";
}

CycloNumber qnumber(const CategorySpec& spec, long n) {
  if (n == 0) return CycloNumber();
  if (n < 0) return -qnumber(spec, -n);
  const long two_l = 2L * spec.ell();
  std::vector<mpq_class> c(static_cast<std::size_t>(two_l), 0);
  for (long j = 0; j < n; ++j) {
    long e = ((n - 1 - 2 * j) % two_l + two_l) % two_l;
    c[static_cast<std::size_t>(e)] += 1;
  }
  return CycloNumber::from_coeffs(static_cast<std::uint32_t>(two_l), c);
}

namespace {

// Weights of the fundamental weights against theta: <l_i, theta>.
std::vector<long> theta_weights(const CategorySpec& spec) {
  const auto& rs = spec.rs();
  std::vector<long> w(rs.rank());
  for (std::size_t i = 0; i < rs.rank(); ++i) w[i] = rs.pair(Weight::fundamental(rs.rank(), i + 1), spec.theta());
  return w;
}

void enumerate(std::size_t i, long budget, const std::vector<long>& w, Weight& cur, std::vector<Weight>& out) {
  if (i == w.size()) {
    out.push_back(cur);
    return;
  }
  for (int k = 0; k * w[i] <= budget; ++k) {
    cur.c[i] = k;
    enumerate(i + 1, budget - k * w[i], w, cur, out);
  }
  cur.c[i] = 0;
}

// [n] at q = zeta_{2l} equals s * [r] with 0 <= r <= l/2; r = 0 means zero.
std::pair<long, int> canonical_qnumber(long n, long ell) {
  int s = 1;
  if (n < 0) {
    n = -n;
    s = -s;
  }
  n %= 2 * ell;
  if (n > ell) {
    n = 2 * ell - n;
    s = -s;
  }
  if (n == 0 || n == ell) return {0, 0};
  if (2 * n > ell) n = ell - n;
  return {n, s};
}

}  // namespace

bool in_alcove(const CategorySpec& spec, const Weight& lambda) {
  if (lambda.rank() != spec.rs().rank() || !lambda.is_dominant()) return false;
  return spec.rs().pair(lambda + spec.rs().rho(), spec.theta()) < spec.ell();
}

std::vector<Weight> alcove(const CategorySpec& spec) {
  const auto& rs = spec.rs();
  const long budget = spec.ell() - 1 - rs.pair(rs.rho(), spec.theta());
  std::vector<Weight> out;
  if (budget < 0) return out;
  Weight cur(rs.rank());
  enumerate(0, budget, theta_weights(spec), cur, out);
  std::sort(out.begin(), out.end(), [](const Weight& a, const Weight& b) {
    long sa = 0, sb = 0;
    for (int x : a.c) sa += x;
    for (int x : b.c) sb += x;
    if (sa != sb) return sa < sb;
    return a > b;
  });
  return out;
}

std::size_t alcove_rank(const CategorySpec& spec) { return alcove(spec).size(); }

bool has_nonzero_label(const CategorySpec& spec) {
  const auto& rs = spec.rs();
  for (std::size_t i = 1; i <= rs.rank(); ++i)
    if (in_alcove(spec, Weight::fundamental(rs.rank(), i))) return true;
  return false;
}

std::pair<std::vector<long>, std::vector<long>> fpdim_qnumber_ratio(const RootSystem& rs,
                                                                     const Weight& lambda,
                                                                     bool use_coroots) {
  std::map<long, long> count;
  const Weight lr = lambda + rs.rho();
  for (const auto& a : rs.positive_roots()) {
    long top = use_coroots ? rs.pair_coroot(lr, a) : rs.pair(lr, a);
    long bot = use_coroots ? rs.pair_coroot(rs.rho(), a) : rs.pair(rs.rho(), a);
    count[top] += 1;
    count[bot] -= 1;
  }
  count.erase(1);  // [1] = 1
  std::vector<long> num, den;
  for (const auto& [n, c] : count) {
    for (long k = 0; k < c; ++k) num.push_back(n);
    for (long k = 0; k < -c; ++k) den.push_back(n);
  }
  return {num, den};
}

CycloNumber fpdim(const CategorySpec& spec, const Weight& lambda) {
  const auto& rs = spec.rs();
  if (lambda.rank() != rs.rank() || !lambda.is_dominant())
    throw PreconditionError("fpdim needs a dominant weight of the right rank");
  const bool coroots = !spec.m_divides();
  std::map<long, long> count;
  int sign = 1;
  const Weight lr = lambda + rs.rho();
  for (const auto& a : rs.positive_roots()) {
    long top = coroots ? rs.pair_coroot(lr, a) : rs.pair(lr, a);
    long bot = coroots ? rs.pair_coroot(rs.rho(), a) : rs.pair(rs.rho(), a);
    auto [rt, st] = canonical_qnumber(top, spec.ell());
    auto [rb, sb] = canonical_qnumber(bot, spec.ell());
    if (rb == 0) throw DivisionByZero("FP-dimension denominator vanishes at " + spec.to_string());
    sign *= sb;
    count[rb] -= 1;
    if (rt == 0) {
      count[0] += 1;
    } else {
      sign *= st;
      count[rt] += 1;
    }
  }
  if (count[0] > 0) return CycloNumber();
  CycloNumber num(sign), den(1);
  for (const auto& [r, c] : count) {
    if (c == 0 || r == 0) continue;
    CycloNumber v = qnumber(spec, r);
    for (long k = 0; k < c; ++k) num *= v;
    for (long k = 0; k < -c; ++k) den *= v;
  }
  return num / den;
}

WeakIntegrality is_weakly_integral(const CategorySpec& spec) {
  WeakIntegrality r{true, std::nullopt, 0};
  CycloNumber total;
  for (const auto& lambda : alcove(spec)) {
    CycloNumber d = fpdim(spec, lambda);
    CycloNumber sq = d * d;
    total += sq;
    auto v = as_integer(sq);
    if (!v && r.weakly_integral) {
      r.weakly_integral = false;
      r.witness = lambda;
    }
  }
  auto g = as_integer(total);
  if (g.has_value() != r.weakly_integral)
    throw InternalError("weak integrality: per-object and total-sum tests disagree at " + spec.to_string());
  if (g) r.global_dim = *g;
  return r;
}

bool is_pointed(const CategorySpec& spec) {
  const CycloNumber one(1);
  for (const auto& lambda : alcove(spec))
    if (!(fpdim(spec, lambda) == one)) return false;
  return true;
}

// ---- witness table ----

const std::vector<WitnessRow>& all_witness_rows() {
  static const std::vector<WitnessRow> v{WitnessRow::E6,     WitnessRow::E7,     WitnessRow::E8,
                                         WitnessRow::F4Even, WitnessRow::F4Odd,  WitnessRow::G2Div3,
                                         WitnessRow::G2NotDiv3};
  return v;
}

std::string witness_row_name(WitnessRow r) {
  switch (r) {
    case WitnessRow::E6: return "e6";
    case WitnessRow::E7: return "e7";
    case WitnessRow::E8: return "e8";
    case WitnessRow::F4Even: return "f4, l even";
    case WitnessRow::F4Odd: return "f4, l odd";
    case WitnessRow::G2Div3: return "g2, 3 | l";
    case WitnessRow::G2NotDiv3: return "g2, 3 does not divide l";
  }
  return "?";
}

Algebra witness_row_algebra(WitnessRow r) {
  switch (r) {
    case WitnessRow::E6: return Algebra::E6;
    case WitnessRow::E7: return Algebra::E7;
    case WitnessRow::E8: return Algebra::E8;
    case WitnessRow::F4Even:
    case WitnessRow::F4Odd: return Algebra::F4;
    default: return Algebra::G2;
  }
}

bool witness_row_applies(WitnessRow r, int ell) {
  switch (r) {
    case WitnessRow::F4Even: return ell % 2 == 0;
    case WitnessRow::F4Odd: return ell % 2 != 0;
    case WitnessRow::G2Div3: return ell % 3 == 0;
    case WitnessRow::G2NotDiv3: return ell % 3 != 0;
    default: return true;
  }
}

WitnessRow witness_row_for(Algebra a, int ell) {
  for (WitnessRow r : all_witness_rows())
    if (witness_row_algebra(r) == a && witness_row_applies(r, ell)) return r;
  throw InternalError("no witness row");
}

WitnessData witness_data(WitnessRow r) {
  // Weights in internal (Bourbaki) numbering. F4: the 26-dimensional
  // module is l4 internally.
  switch (r) {
    case WitnessRow::E6:
      return {r, Weight::fundamental(6, 2), Weight::fundamental(6, 1), {8, 9, 13}, {4, 3}};
    case WitnessRow::E7:
      return {r, Weight::fundamental(7, 1), Weight::fundamental(7, 7), {12, 14, 19}, {4, 6}};
    case WitnessRow::E8:
      return {r, Weight::fundamental(8, 8), Weight::fundamental(8, 8), {20, 24, 31}, {6, 10}};
    case WitnessRow::F4Even:
      return {r, Weight::fundamental(4, 4), Weight::fundamental(4, 4), {3, 8, 13, 18}, {4, 6, 9}};
    case WitnessRow::F4Odd:
      return {r, Weight::fundamental(4, 4), Weight::fundamental(4, 4), {13, 8}, {4}};
    case WitnessRow::G2Div3:
      return {r, Weight::fundamental(2, 1), Weight::fundamental(2, 1), {2, 7, 12}, {4, 6}};
    case WitnessRow::G2NotDiv3:
      return {r, Weight::fundamental(2, 1), Weight::fundamental(2, 1), {7}, {}};
  }
  throw InternalError("bad witness row");
}

namespace {

bool row_uses_coroots(WitnessRow r) {
  return r == WitnessRow::F4Odd || r == WitnessRow::G2NotDiv3;
}

std::uint64_t phi_u64(std::uint64_t n) { return euler_phi(n); }

}  // namespace

TotientBound totient_bound(WitnessRow r) {
  const WitnessData wd = witness_data(r);
  const RootSystem& rs = RootSystem::get(witness_row_algebra(r));
  auto [num, den] = fpdim_qnumber_ratio(rs, wd.nu, row_uses_coroots(r));
  LaurentPoly top = LaurentPoly::monomial(0), bottom = LaurentPoly::monomial(0);
  for (long a : num) top = top * LaurentPoly::qnumber(a);
  for (long b : den) bottom = bottom * LaurentPoly::qnumber(b);
  TotientBound tb;
  tb.row = r;
  tb.quotient = top.exact_div(bottom);
  const long low = tb.quotient.low();
  tb.relation = tb.quotient * LaurentPoly::monomial(-low);
  tb.degree = tb.quotient.high() - low;

  std::ostringstream os;
  bool first = true;
  for (long e = tb.relation.high(); e >= 0; --e) {
    mpz_class c = tb.relation.coeff(e);
    const bool k_here = (e == -low);
    if (c == 0 && !k_here) continue;
    std::string term;
    if (k_here) {
      term = c == 0 ? "-k" : "(" + c.get_str() + "-k)";
    } else {
      mpz_class a = abs(c);
      term = (c < 0 ? "-" : "") + (a == 1 && e != 0 ? std::string() : a.get_str());
    }
    std::string mono = e == 0 ? "" : (e == 1 ? "q" : "q^" + std::to_string(e));
    std::string piece = term;
    if (!mono.empty()) piece += (term.empty() || term == "-" ? "" : "*") + mono;
    if (piece.empty()) piece = "1";
    if (!first) {
      if (piece[0] == '-') piece = "- " + piece.substr(1);
      else piece = "+ " + piece;
    }
    if (!first) os << " ";
    os << piece;
    first = false;
  }
  tb.relation_string = os.str();

  tb.max_ell = 0;
  const long bound = tb.degree * tb.degree + 2;
  for (long ell = 2; ell <= bound; ++ell) {
    if (!witness_row_applies(r, static_cast<int>(ell))) continue;
    if (phi_u64(static_cast<std::uint64_t>(2 * ell)) <= static_cast<std::uint64_t>(tb.degree))
      tb.max_ell = static_cast<int>(ell);
  }
  return tb;
}

int smallest_nontrivial_ell(WitnessRow r) {
  const Algebra a = witness_row_algebra(r);
  for (int ell = 2;; ++ell) {
    if (!witness_row_applies(r, ell) || !CategorySpec::nonempty(a, ell)) continue;
    if (has_nonzero_label(CategorySpec(a, ell))) return ell;
  }
}

std::vector<ClassifyRow> classify_weakly_integral(Algebra a, ClassifyStats* stats, unsigned threads) {
  struct Job {
    WitnessRow row;
    int ell;
  };
  std::vector<Job> jobs;
  ClassifyStats st;
  st.first_ell = 1 << 30;
  for (WitnessRow r : all_witness_rows()) {
    if (witness_row_algebra(r) != a) continue;
    const int lo = smallest_nontrivial_ell(r);
    const int hi = totient_bound(r).max_ell;
    st.first_ell = std::min(st.first_ell, lo);
    st.last_ell = std::max(st.last_ell, hi);
    for (int ell = lo; ell <= hi; ++ell)
      if (witness_row_applies(r, ell)) jobs.push_back({r, ell});
  }
  std::sort(jobs.begin(), jobs.end(), [](const Job& x, const Job& y) { return x.ell < y.ell; });

  struct Outcome {
    bool nontrivial = false;
    bool rejected = false;
    bool full = false;
    std::optional<ClassifyRow> row;
  };
  auto work = [](Job j) {
    Outcome o;
    CategorySpec spec(witness_row_algebra(j.row), j.ell);
    if (!has_nonzero_label(spec)) return o;
    o.nontrivial = true;
    const Weight nu = witness_data(j.row).nu;
    if (in_alcove(spec, nu)) {
      CycloNumber d = fpdim(spec, nu);
      if (!as_integer(d * d)) {
        o.rejected = true;
        return o;
      }
    }
    o.full = true;
    auto wi = is_weakly_integral(spec);
    if (wi.weakly_integral) o.row = ClassifyRow{j.ell, alcove_rank(spec), is_pointed(spec)};
    return o;
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<Outcome> outcomes(jobs.size());
  for (std::size_t start = 0; start < jobs.size(); start += threads) {
    std::vector<std::future<Outcome>> futs;
    const std::size_t stop = std::min(jobs.size(), start + threads);
    for (std::size_t k = start; k < stop; ++k)
      futs.push_back(std::async(threads > 1 ? std::launch::async : std::launch::deferred, work, jobs[k]));
    for (std::size_t k = start; k < stop; ++k) outcomes[k] = futs[k - start].get();
  }

  std::vector<ClassifyRow> rows;
  for (const auto& o : outcomes) {
    if (o.nontrivial) ++st.scanned;
    if (o.rejected) ++st.witness_rejected;
    if (o.full) ++st.full_checks;
    if (o.row) rows.push_back(*o.row);
  }
  if (stats) *stats = st;
  return rows;
}

}  // namespace exbraid
