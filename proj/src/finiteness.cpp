#include "exbraid/finiteness.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <sstream>
#include <thread>

#include "exbraid/error.hpp"

namespace exbraid {

std::string outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Finite: return "Finite";
    case Outcome::Infinite: return "Infinite";
    default: return "Inconclusive";
  }
}

std::string Verdict::to_string() const {
  std::ostringstream os;
  os << outcome_name(outcome);
  if (!reason.empty()) os << " (" << reason << ")";
  os << " [";
  for (std::size_t i = 0; i < certificate.size(); ++i) os << (i ? ", " : "") << certificate[i];
  os << "]";
  if (po) os << " po=" << *po;
  return os.str();
}

std::optional<std::uint64_t> projective_order(const std::vector<CycloNumber>& values) {
  if (values.empty()) throw PreconditionError("empty spectrum");
  std::uint64_t t = 1;
  const CycloNumber base = inv(values[0]);
  for (std::size_t i = 1; i < values.size(); ++i) {
    auto o = root_of_unity_order(values[i] * base);
    if (!o) return std::nullopt;
    t = lcm_u64(t, *o);
  }
  return t;
}

std::optional<std::uint64_t> projective_order(const Spectrum& s) { return projective_order(s.exact()); }

std::string form_name(FormKind k) {
  switch (k) {
    case FormKind::PlusMinusChiAlpha: return "{+-chi,alpha}";
    case FormKind::ChiOmegaAlpha: return "chi{1,w,w^2}+{alpha}";
    default: return "{+-r,+-s}";
  }
}

namespace {

std::uint64_t order_or_zero(const CycloNumber& x) { return root_of_unity_order(x).value_or(0); }

}  // namespace

FormReport match_imprimitive_forms(const std::vector<CycloNumber>& v) {
  if (v.size() < 2 || v.size() > 5) throw PreconditionError("form matching needs 2 to 5 values");
  FormReport rep;
  const std::size_t d = v.size();
  if (d == 3) {
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j)
        if (v[i] == -v[j]) {
          FormMatch m{FormKind::PlusMinusChiAlpha, v[i], v[3 - i - j], {}, {}, {}, 0};
          rep.matches.push_back(m);
        }
  }
  if (d == 4) {
    for (std::size_t k = 0; k < 4; ++k) {
      std::vector<CycloNumber> rest;
      for (std::size_t i = 0; i < 4; ++i)
        if (i != k) rest.push_back(v[i]);
      const CycloNumber c0 = pow(rest[0], 3);
      if (pow(rest[1], 3) == c0 && pow(rest[2], 3) == c0)
        rep.matches.push_back({FormKind::ChiOmegaAlpha, rest[0], v[k], {}, {}, {}, 0});
    }
    static const int pairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
    for (const auto& p : pairings) {
      if (v[p[0]] == -v[p[1]] && v[p[2]] == -v[p[3]]) {
        FormMatch m{FormKind::PlusMinusRS, {}, {}, v[p[0]], v[p[2]], {}, 0};
        m.u = m.r / m.s;
        // u is defined only up to sign; take the larger of the two orders
        m.o_u = std::max(order_or_zero(m.u), order_or_zero(-m.u));
        rep.matches.push_back(m);
      }
    }
  }
  return rep;
}

std::string galois_class_name(GaloisClass g) {
  switch (g) {
    case GaloisClass::EvenK: return "even-k";
    case GaloisClass::OddK: return "odd-k";
    default: return "not-applicable";
  }
}

GaloisClass galois_class_po7(const std::vector<CycloNumber>& v) {
  if (v.size() != 3) return GaloisClass::NotApplicable;
  const CycloNumber base = inv(v[0]);
  // discrete logs of v1/v0, v2/v0 to base zeta_7
  auto log7 = [](const CycloNumber& x) -> int {
    for (int e = 0; e < 7; ++e)
      if (make_root_of_unity(7, e) == x) return e;
    return -1;
  };
  const int i = log7(v[1] * base), j = log7(v[2] * base);
  if (i <= 0 || j <= 0 || i == j) return GaloisClass::NotApplicable;
  int inv_i = 1;
  while ((inv_i * i) % 7 != 1) ++inv_i;
  // sigma: zeta -> zeta^(1/i) sends the set to {1, zeta, zeta^k}
  const int k = (j * inv_i) % 7;
  return k % 2 == 0 ? GaloisClass::EvenK : GaloisClass::OddK;
}

TWResult tw_irreducibility(const CategorySpec& spec, const Weight& z) {
  if (!in_alcove(spec, z)) throw PreconditionError(z.to_string() + " is not in the alcove of " + spec.to_string());
  TWResult r;
  if (!(spec.rs().dual(z) == z)) {
    r.refusal = "not self-dual";
    return r;
  }
  r.square = tensor_square_truncated(spec, z);
  if (!r.square->multiplicity_free()) {
    r.refusal = "tensor square not multiplicity free";
    return r;
  }
  for (const auto& s : r.square->summands)
    if (s.parity == Parity::Unsplit) {
      r.refusal = "summand parity undetermined";
      return r;
    }
  r.spectrum = sigma_spectrum(spec, z, *r.square);
  r.d = r.square->summands.size();
  if (!r.spectrum->distinct()) {
    r.refusal = "repeated eigenvalues";
    return r;
  }
  r.certified = true;
  return r;
}

namespace {

Verdict primitive_branch(const std::vector<CycloNumber>& v, std::size_t d, std::uint64_t po) {
  Verdict out;
  out.po = po;
  auto set = [&](Outcome o, const char* clause, std::string reason = {}) {
    out.outcome = o;
    out.certificate = {clause};
    out.reason = std::move(reason);
    return out;
  };
  switch (d) {
    case 2: return set(Outcome::Infinite, tag::kRTdi);
    case 3:
      if (po >= 8) return set(Outcome::Infinite, tag::kRTdii);
      if (po == 7) {
        switch (galois_class_po7(v)) {
          case GaloisClass::EvenK: return set(Outcome::Infinite, tag::kRTdii);
          case GaloisClass::OddK: return set(Outcome::Finite, tag::kRTdii);
          default: return set(Outcome::Inconclusive, tag::kRTdii, "galois-class-undetermined");
        }
      }
      return set(Outcome::Inconclusive, tag::kRTdii, "po-not-covered");
    case 4: {
      static const std::vector<std::uint64_t> bad = {6, 7, 8, 9, 10, 12, 15, 20, 24};
      if (std::find(bad.begin(), bad.end(), po) == bad.end()) return set(Outcome::Infinite, tag::kRTdiii);
      return set(Outcome::Inconclusive, tag::kRTdiii, "escalate-to-matrix");
    }
    default:
      if (po == 7 || po == 8 || po >= 13) return set(Outcome::Infinite, tag::kRTdiv);
      return set(Outcome::Inconclusive, tag::kRTdiv, "escalate-to-matrix");
  }
}

Verdict imprimitive_branch(const FormMatch& m) {
  Verdict out;
  if (m.kind != FormKind::PlusMinusRS) {
    out.outcome = Outcome::Finite;
    out.certificate = {tag::kRTci};
    return out;
  }
  out.certificate = {tag::kRTcii};
  const auto o = m.o_u;
  if (o == 7 || o == 8 || o == 9 || o >= 11)
    out.outcome = Outcome::Infinite;
  else if (o == 6)
    out.outcome = Outcome::Finite;
  else
    out.reason = (o == 5 || o == 10) ? "o(u)-undecidable" : "o(u)-not-covered";
  return out;
}

}  // namespace

Verdict decide(const std::vector<CycloNumber>& raw, std::size_t d, Evidence evidence) {
  if (evidence == Evidence::None) throw PreconditionError("decide needs irreducibility evidence");
  if (d < 2 || d > 5) throw PreconditionError("dimension must be between 2 and 5, got " + std::to_string(d));
  if (raw.size() != d) throw PreconditionError("spectrum size does not match d");
  if (raw[0].is_zero()) throw PreconditionError("eigenvalues must be nonzero");
  // only ratios are meaningful; the overall scale depends on the twist normalization
  std::vector<CycloNumber> v;
  for (const auto& x : raw) v.push_back(x / raw[0]);
  Verdict out;
  out.assumptions = {evidence == Evidence::TWVerified ? tag::kIrrTW : tag::kIrrCited};

  bool bad = false;
  for (std::size_t i = 0; i < d && !bad; ++i) {
    if (!root_of_unity_order(v[i])) bad = true;
    for (std::size_t j = i + 1; j < d && !bad; ++j)
      if (v[i] == v[j]) bad = true;
  }
  if (bad) {
    out.outcome = Outcome::Infinite;
    out.certificate = {tag::kRTa};
    return out;
  }
  const std::uint64_t po = *projective_order(v);
  out.po = po;
  if (po <= 5) {
    out.outcome = Outcome::Finite;
    out.certificate = {tag::kRTb};
    return out;
  }

  const Verdict prim = primitive_branch(v, d, po);
  const FormReport forms = match_imprimitive_forms(v);
  if (!forms.any()) {
    out.assumptions.push_back(tag::kPrimExcluded);
    out.outcome = prim.outcome;
    out.reason = prim.reason;
    out.certificate = {tag::kRTcExcluded};
    out.certificate.insert(out.certificate.end(), prim.certificate.begin(), prim.certificate.end());
    return out;
  }

  out.assumptions.push_back(tag::kPrimUndetermined);
  bool agree = prim.outcome != Outcome::Inconclusive;
  std::vector<std::string> cert;
  for (const auto& m : forms.matches) {
    const Verdict imp = imprimitive_branch(m);
    if (imp.outcome != prim.outcome) agree = false;
    for (const auto& c : imp.certificate)
      if (std::find(cert.begin(), cert.end(), c) == cert.end()) cert.push_back(c);
  }
  cert.insert(cert.end(), prim.certificate.begin(), prim.certificate.end());
  out.certificate = cert;
  if (agree) {
    out.outcome = prim.outcome;
  } else {
    out.outcome = Outcome::Inconclusive;
    out.reason = "primitivity-undetermined";
  }
  return out;
}

Verdict decide(const Spectrum& s, std::size_t d, Evidence evidence) { return decide(s.exact(), d, evidence); }

namespace {

Verdict cited(Outcome o, std::initializer_list<const char*> cert) {
  Verdict v;
  v.outcome = o;
  for (const char* c : cert) v.certificate.push_back(c);
  return v;
}

// TW certificate followed by the cascade, recorded into r.
bool run_object(const CategorySpec& spec, const Weight& z, CaseReport& r) {
  TWResult tw = tw_irreducibility(spec, z);
  r.object = z;
  r.target = z;
  r.spectrum = tw.spectrum;
  r.d = tw.d;
  if (!tw.certified) {
    r.verdict = Verdict{};
    r.verdict.reason = "tw-refused: " + tw.refusal;
    return false;
  }
  if (tw.d < 2 || tw.d > 5) {
    r.verdict = Verdict{};
    r.verdict.reason = "dimension " + std::to_string(tw.d) + " outside 2..5";
    return false;
  }
  r.verdict = decide(*tw.spectrum, tw.d, Evidence::TWVerified);
  r.verdict.certificate.insert(r.verdict.certificate.begin(), tag::kTW);
  return true;
}

// Diagonal of the explicit sigma_1 matrix, the spectrum family it realizes.
std::vector<CycloNumber> matrix_family_spectrum(int ell) { return build_AB(ell).a.diagonal(); }

void escalate(const CategorySpec& spec, CaseReport& r, std::optional<int> jmax) {
  if (r.verdict.outcome != Outcome::Inconclusive || r.verdict.reason != "escalate-to-matrix") return;
  auto scale = equal_up_to_scale(r.spectrum->exact(), matrix_family_spectrum(spec.ell()));
  if (!scale) {
    r.verdict.reason = "matrix-family-mismatch";
    return;
  }
  r.matrix = verify_matrix(spec.ell(), jmax);
  if (!r.matrix->braid_relation) {
    r.verdict.reason = "matrix-braid-relation-failed";
    return;
  }
  r.verdict.certificate.push_back(tag::kSpectrumMatch);
  r.verdict.certificate.push_back(tag::kMatrix);
  if (!r.matrix->first_scalar_power) {
    r.verdict.outcome = Outcome::Infinite;
    r.verdict.reason.clear();
  } else {
    r.verdict.reason = "matrix-power-scalar";
  }
}

// Other self-dual labels, smallest first, until one decides.
void fallback_search(const CategorySpec& spec, CaseReport& r) {
  const CaseReport primary = r;
  for (const Weight& z : alcove(spec)) {
    if (z.is_zero() || (primary.object && z == *primary.object)) continue;
    if (!(spec.rs().dual(z) == z)) continue;
    if (spec.rs().weyl_dim(z) > 100000) continue;
    CaseReport trial = primary;
    if (!run_object(spec, z, trial)) continue;
    if (trial.verdict.outcome == Outcome::Inconclusive) continue;
    trial.verdict.certificate.insert(trial.verdict.certificate.begin(), tag::kFallback);
    trial.note = "designated object " + primary.object->to_string() + " gave " + primary.verdict.to_string();
    r = trial;
    return;
  }
}

void analyze_g2(const CategorySpec& spec, CaseReport& r, std::optional<int> jmax) {
  const int ell = spec.ell();
  if (ell == 10 || ell == 15) {
    r.verdict = cited(Outcome::Infinite, {tag::kFibonacci});
    r.note = "contains the Fibonacci category";
    return;
  }
  run_object(spec, Weight::fundamental(2, 1), r);
  escalate(spec, r, jmax);
}

void analyze_f4(const CategorySpec& spec, CaseReport& r, std::optional<int> jmax) {
  const Weight v = Weight::fundamental(4, 4);  // 26-dimensional
  run_object(spec, v, r);
  if (spec.ell() == 24) {
    // repeated eigenvalues on V; the 52-dimensional object instead
    const std::string first = r.verdict.reason;
    run_object(spec, Weight::fundamental(4, 1), r);
    r.note = "26-dimensional object: " + first;
    escalate(spec, r, jmax);
    return;
  }
  if (r.verdict.outcome == Outcome::Inconclusive) fallback_search(spec, r);
}

void analyze_en(const CategorySpec& spec, CaseReport& r, std::optional<int> jmax) {
  const Algebra a = spec.algebra();
  const int ell = spec.ell();
  const int n = static_cast<int>(spec.rs().rank());
  if (a == Algebra::E7 && ell == 20) {
    if (r.rank != 6) throw InternalError("C(e7, l=20) should have rank 6");
    r.verdict = cited(Outcome::Infinite, {tag::kFibIsing});
    r.note = "Fibonacci x Ising";
    return;
  }
  if (a == Algebra::E8 && ell == 33) {
    if (r.rank != 5) throw InternalError("C(e8, l=33) should have rank 5");
    CaseReport f4 = analyze(CategorySpec(Algebra::F4, 22), jmax);
    r.verdict = f4.verdict;
    r.verdict.certificate.insert(r.verdict.certificate.begin(), tag::kReductionF4);
    r.note = "conjugate to C(f4, l=22)";
    return;
  }
  if (!en_stable_range(spec)) {
    r.verdict.reason = "out-of-plan: below the stable range";
    return;
  }
  r.object = en_vector_weight(a);
  r.target = en_target_weight(a);
  Spectrum s = en_series_spectrum(spec);
  Spectrum fused = restricted_spectrum(spec, *r.object, *r.target);
  if (!equal_up_to_scale(s.exact(), fused.exact()))
    throw InternalError("E-series spectrum disagrees with fusion at " + spec.to_string());
  r.spectrum = s;
  r.d = s.size();
  if (!(2 * n - 3 < ell - 2)) {
    r.verdict.reason = "irreducibility condition 2N-3 < l-2 fails";
    return;
  }
  r.verdict = decide(s, r.d, Evidence::Cited);
  r.verdict.certificate.insert(r.verdict.certificate.begin(), tag::kWenzlBCD);
}

}  // namespace

CaseReport analyze(const CategorySpec& spec, std::optional<int> jmax) {
  CaseReport r;
  r.algebra = spec.algebra();
  r.ell = spec.ell();
  r.rank = alcove_rank(spec);
  if (r.rank < 2) {
    r.verdict_sought = false;
    r.note = "trivial: rank 1";
    return r;
  }
  // the witness label settles most cases without touching the whole alcove
  bool integral_possible = true;
  const WitnessData w = witness_data(witness_row_for(spec.algebra(), spec.ell()));
  if (in_alcove(spec, w.nu)) {
    const CycloNumber f = fpdim(spec, w.nu);
    integral_possible = as_integer(f * f).has_value();
  }
  if (integral_possible && is_weakly_integral(spec).weakly_integral) {
    r.verdict_sought = false;
    r.note = is_pointed(spec) ? "weakly integral (pointed)" : "weakly integral";
    return r;
  }
  switch (spec.algebra()) {
    case Algebra::G2: analyze_g2(spec, r, jmax); break;
    case Algebra::F4: analyze_f4(spec, r, jmax); break;
    default: analyze_en(spec, r, jmax); break;
  }
  if (r.verdict.outcome == Outcome::Inconclusive && r.verdict.reason.empty()) r.verdict.reason = "out-of-plan";
  return r;
}

std::vector<CaseReport> analyze_range(Algebra a, int lo, int hi, unsigned threads, std::optional<int> jmax) {
  std::vector<int> ells;
  for (int ell = std::max(lo, 2); ell <= hi; ++ell)
    if (CategorySpec::nonempty(a, ell)) ells.push_back(ell);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<CaseReport> out(ells.size());
  auto work = [a, jmax](int ell) { return analyze(CategorySpec(a, ell), jmax); };
  for (std::size_t start = 0; start < ells.size(); start += threads) {
    std::vector<std::future<CaseReport>> futs;
    const std::size_t stop = std::min(ells.size(), start + threads);
    for (std::size_t k = start; k < stop; ++k)
      futs.push_back(std::async(threads > 1 ? std::launch::async : std::launch::deferred, work, ells[k]));
    for (std::size_t k = start; k < stop; ++k) out[k] = futs[k - start].get();
  }
  return out;
}

}  // namespace exbraid
