#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "exbraid/error.hpp"
#include "exbraid/finiteness.hpp"
#include "exbraid/labels.hpp"

using namespace exbraid;

namespace {

std::vector<CycloNumber> terms(int ell, const std::vector<std::pair<int, mpq_class>>& t) {
  return spectrum_from_terms(ell, t).exact();
}

std::vector<CycloNumber> roots(std::uint32_t n, const std::vector<long>& ks) {
  std::vector<CycloNumber> v;
  for (long k : ks) v.push_back(make_root_of_unity(n, k));
  return v;
}

bool has(const Verdict& v, const std::string& tag) {
  return std::find(v.certificate.begin(), v.certificate.end(), tag) != v.certificate.end();
}

// Oracle: smallest t in 1..bound with all t-th powers equal.
std::optional<std::uint64_t> brute_po(const std::vector<CycloNumber>& vals, std::uint64_t bound) {
  std::vector<CycloNumber> p = vals;
  for (std::uint64_t t = 1; t <= bound; ++t) {
    if (std::all_of(p.begin(), p.end(), [&](const CycloNumber& x) { return x == p[0]; })) return t;
    for (std::size_t i = 0; i < p.size(); ++i) p[i] *= vals[i];
  }
  return std::nullopt;
}

// Spectra the fixture suite runs through decide, with their d and evidence.
struct Fixture {
  std::string name;
  int ell;
  std::vector<CycloNumber> values;
  Evidence evidence;
};

std::vector<Fixture> fixture_set() {
  std::vector<Fixture> f;
  for (int ell : {18, 19, 20, 21, 22, 24, 26, 27, 30, 33, 40})
    f.push_back({"g2", ell, terms(ell, {{1, 0}, {-1, 6}, {-1, 12}, {1, 14}}), Evidence::TWVerified});
  for (int ell : {22, 26, 28, 30, 34, 40})
    f.push_back({"f4", ell, terms(ell, {{1, -24}, {1, -12}, {1, 2}, {-1, 0}, {-1, -6}}), Evidence::TWVerified});
  f.push_back({"f4-24", 24, terms(24, {{1, 0}, {1, 26}, {-1, 18}, {-1, 36}}), Evidence::TWVerified});
  for (auto [n, lo] : std::vector<std::pair<int, int>>{{6, 14}, {7, 21}, {8, 34}})
    for (int ell = lo; ell <= 60; ell += 5)
      f.push_back({"e" + std::to_string(n), ell, terms(ell, {{1, 1}, {-1, -1}, {1, 3 - 2 * n}}), Evidence::Cited});
  // hand-made cases reaching the other branches
  f.push_back({"po4", 4, roots(4, {0, 1}), Evidence::TWVerified});
  f.push_back({"pmchi", 10, roots(20, {0, 10, 4}), Evidence::TWVerified});
  f.push_back({"rs6", 12, roots(12, {0, 6, 2, 8}), Evidence::TWVerified});
  f.push_back({"po7even", 7, roots(7, {0, 1, 2}), Evidence::TWVerified});
  f.push_back({"po7odd", 7, roots(7, {0, 1, 3}), Evidence::TWVerified});
  return f;
}

}  // namespace

TEST(ProjectiveOrder, Examples) {
  EXPECT_EQ(projective_order(roots(4, {0, 1})), 4u);
  EXPECT_EQ(projective_order(terms(18, {{1, 0}, {-1, 6}, {-1, 12}, {1, 14}})), 18u);
  EXPECT_EQ(projective_order(terms(21, {{1, 0}, {-1, 6}, {-1, 12}, {1, 14}})), 42u);
  EXPECT_EQ(projective_order(std::vector<CycloNumber>{CycloNumber(3)}), 1u);
  EXPECT_FALSE(projective_order(std::vector<CycloNumber>{CycloNumber(1), CycloNumber(2)}).has_value());
}

TEST(ProjectiveOrder, G2OrderIsLOrTwoL) {
  for (int ell = 18; ell <= 60; ++ell)
    EXPECT_EQ(projective_order(terms(ell, {{1, 0}, {-1, 6}, {-1, 12}, {1, 14}})),
              static_cast<std::uint64_t>(ell % 2 ? 2 * ell : ell));
}

TEST(ProjectiveOrder, AgreesWithBruteForceOnComputedSpectra) {
  std::size_t checked = 0;
  for (Algebra a : all_algebras())
    for (int ell = 7; ell <= 60; ++ell) {
      if (!CategorySpec::nonempty(a, ell)) continue;
      CategorySpec s(a, ell);
      for (std::size_t i = 1; i <= s.rs().rank(); ++i) {
        const Weight w = Weight::fundamental(s.rs().rank(), i);
        if (!in_alcove(s, w) || s.rs().weyl_dim(w) > 300) continue;
        const auto sq = tensor_square_truncated(s, w);
        if (!sq.multiplicity_free()) continue;
        if (std::any_of(sq.summands.begin(), sq.summands.end(), [](const auto& x) { return x.parity == Parity::Unsplit; }))
          continue;
        const auto vals = sigma_spectrum(s, w, sq).exact();
        const std::uint64_t bound = std::lcm<std::uint64_t>(2, 4 * static_cast<std::uint64_t>(ell));
        EXPECT_EQ(projective_order(vals), brute_po(vals, bound)) << s.to_string() << " " << w.to_string();
        ++checked;
      }
      if (a != Algebra::G2 && a != Algebra::F4 && en_stable_range(s)) {
        const auto vals = en_series_spectrum(s).exact();
        EXPECT_EQ(projective_order(vals), brute_po(vals, 4 * ell));
        ++checked;
      }
    }
  EXPECT_GT(checked, 200u);
}

TEST(Forms, Examples) {
  // {1, -1, alpha} with alpha a primitive 5th root
  auto r = match_imprimitive_forms({CycloNumber(1), CycloNumber(-1), make_root_of_unity(5, 1)});
  ASSERT_TRUE(r.any());
  EXPECT_EQ(r.matches[0].kind, FormKind::PlusMinusChiAlpha);

  // {r, -r, s, -s} with r/s of order 6
  r = match_imprimitive_forms(roots(12, {0, 6, 2, 8}));
  bool rs = false;
  for (const auto& m : r.matches)
    if (m.kind == FormKind::PlusMinusRS) {
      rs = true;
      EXPECT_EQ(m.o_u, 6u);
    }
  EXPECT_TRUE(rs);

  // chi{1,w,w^2} + {alpha}
  r = match_imprimitive_forms(roots(15, {1, 6, 11, 2}));
  ASSERT_TRUE(r.any());
  EXPECT_EQ(r.matches[0].kind, FormKind::ChiOmegaAlpha);

  // the G2 spectrum never matches for l >= 18
  for (int ell = 18; ell <= 60; ++ell)
    EXPECT_FALSE(match_imprimitive_forms(terms(ell, {{1, 0}, {-1, 6}, {-1, 12}, {1, 14}})).any()) << ell;
}

TEST(Galois, Po7Classes) {
  EXPECT_EQ(galois_class_po7(roots(7, {0, 1, 2})), GaloisClass::EvenK);
  EXPECT_EQ(galois_class_po7(roots(7, {0, 1, 3})), GaloisClass::OddK);
  const CycloNumber c = make_root_of_unity(9, 2) * CycloNumber(3);
  std::vector<CycloNumber> scaled;
  for (const auto& x : roots(7, {0, 1, 2})) scaled.push_back(c * x);
  EXPECT_EQ(galois_class_po7(scaled), GaloisClass::EvenK);
  EXPECT_EQ(galois_class_po7(roots(8, {0, 1, 2})), GaloisClass::NotApplicable);
}

TEST(TW, Examples) {
  auto t = tw_irreducibility(CategorySpec(Algebra::G2, 18), Weight{1, 0});
  EXPECT_TRUE(t.certified);
  EXPECT_EQ(t.d, 4u);

  t = tw_irreducibility(CategorySpec(Algebra::F4, 24), from_labels(Algebra::F4, {1, 0, 0, 0}));
  EXPECT_FALSE(t.certified);
  EXPECT_NE(t.refusal.find("repeated"), std::string::npos) << t.refusal;

  t = tw_irreducibility(CategorySpec(Algebra::F4, 24), from_labels(Algebra::F4, {0, 0, 0, 1}));
  EXPECT_TRUE(t.certified);
  EXPECT_EQ(t.d, 4u);

  // E6 l1 is not self-dual
  t = tw_irreducibility(CategorySpec(Algebra::E6, 20), Weight::fundamental(6, 1));
  EXPECT_FALSE(t.certified);
  EXPECT_NE(t.refusal.find("self-dual"), std::string::npos) << t.refusal;
}

TEST(Decide, Examples) {
  Verdict v = decide(terms(21, {{1, 0}, {-1, 6}, {-1, 12}, {1, 14}}), 4, Evidence::TWVerified);
  EXPECT_EQ(v.outcome, Outcome::Infinite);
  EXPECT_TRUE(has(v, tag::kRTdiii));
  EXPECT_EQ(v.po, 42u);

  v = decide(terms(24, {{1, 0}, {-1, 6}, {-1, 12}, {1, 14}}), 4, Evidence::TWVerified);
  EXPECT_EQ(v.outcome, Outcome::Inconclusive);
  EXPECT_EQ(v.reason, "escalate-to-matrix");

  v = decide(terms(22, {{1, -24}, {1, -12}, {1, 2}, {-1, 0}, {-1, -6}}), 5, Evidence::TWVerified);
  EXPECT_EQ(v.outcome, Outcome::Infinite);
  EXPECT_TRUE(has(v, tag::kRTdiv));
  EXPECT_EQ(v.po, 22u);

  v = decide(terms(14, {{1, 1}, {-1, -1}, {1, -9}}), 3, Evidence::Cited);
  EXPECT_EQ(v.outcome, Outcome::Infinite);
  EXPECT_TRUE(has(v, tag::kRTcExcluded));
  EXPECT_TRUE(has(v, tag::kRTdii));
  EXPECT_GE(*v.po, 8u);
  EXPECT_NE(std::find(v.assumptions.begin(), v.assumptions.end(), tag::kIrrCited), v.assumptions.end());
}

TEST(Decide, CascadeBranches) {
  // (a) repeated value
  Verdict v = decide(terms(24, {{1, -24}, {1, -12}, {1, 2}, {-1, 0}, {-1, -6}}), 5, Evidence::TWVerified);
  EXPECT_EQ(v.outcome, Outcome::Infinite);
  EXPECT_TRUE(has(v, tag::kRTa));
  // (a) not a root of unity
  v = decide({CycloNumber(1), CycloNumber(2)}, 2, Evidence::TWVerified);
  EXPECT_EQ(v.outcome, Outcome::Infinite);
  EXPECT_TRUE(has(v, tag::kRTa));
  // (b) small projective order
  v = decide(roots(4, {0, 1}), 2, Evidence::TWVerified);
  EXPECT_EQ(v.outcome, Outcome::Finite);
  EXPECT_TRUE(has(v, tag::kRTb));
  EXPECT_FALSE(has(v, tag::kRTdi));  // exclusivity
  // (d)(i): d = 2, large order
  v = decide(roots(22, {0, 1}), 2, Evidence::TWVerified);
  EXPECT_EQ(v.outcome, Outcome::Infinite);
  EXPECT_TRUE(has(v, tag::kRTdi));
  // (d)(ii) Galois test at po 7
  v = decide(roots(7, {0, 1, 2}), 3, Evidence::TWVerified);
  EXPECT_EQ(v.outcome, Outcome::Infinite);
  v = decide(roots(7, {0, 1, 3}), 3, Evidence::TWVerified);
  EXPECT_EQ(v.outcome, Outcome::Finite);
  // (c)(ii) o(u) = 6 against primitive (d)(iii) with po 6: disagreement is not guessed
  v = decide(roots(12, {0, 6, 2, 8}), 4, Evidence::TWVerified);
  EXPECT_NE(v.outcome, Outcome::Infinite);
  // preconditions
  EXPECT_THROW(decide(roots(22, {0, 1}), 6, Evidence::TWVerified), PreconditionError);
  EXPECT_THROW(decide(roots(22, {0, 1}), 2, Evidence::None), PreconditionError);
}

TEST(Decide, VerdictShapeInvariants) {
  for (const auto& f : fixture_set()) {
    const Verdict v = decide(f.values, f.values.size(), f.evidence);
    if (v.outcome == Outcome::Inconclusive)
      EXPECT_FALSE(v.reason.empty()) << f.name;
    else
      EXPECT_TRUE(std::any_of(v.certificate.begin(), v.certificate.end(),
                              [](const std::string& c) { return c.rfind("RT(", 0) == 0; }))
          << f.name;
  }
}

TEST(Decide, ScaleInvariance) {
  const std::vector<CycloNumber> scales = {CycloNumber(-1), make_root_of_unity(7, 3), make_root_of_unity(48, 5),
                                           CycloNumber(mpq_class(5, 2)), CycloNumber(2) + make_root_of_unity(5, 1)};
  for (const auto& f : fixture_set()) {
    const Verdict base = decide(f.values, f.values.size(), f.evidence);
    for (const auto& c : scales) {
      std::vector<CycloNumber> s;
      for (const auto& x : f.values) s.push_back(c * x);
      const Verdict v = decide(s, s.size(), f.evidence);
      EXPECT_EQ(v.outcome, base.outcome) << f.name << " l=" << f.ell;
      EXPECT_EQ(v.certificate, base.certificate) << f.name;
      EXPECT_EQ(v.po, base.po) << f.name;
    }
  }
}

TEST(Decide, GaloisEquivariance) {
  for (const auto& f : fixture_set()) {
    const Verdict base = decide(f.values, f.values.size(), f.evidence);
    std::uint32_t n = 1;
    for (const auto& x : f.values) n = static_cast<std::uint32_t>(lcm_u64(n, x.conductor()));
    for (long j = 1; j < static_cast<long>(n); ++j) {
      if (std::gcd(j, static_cast<long>(n)) != 1) continue;
      std::vector<CycloNumber> g;
      for (const auto& x : f.values) g.push_back(galois_apply(x, j));
      const Verdict v = decide(g, g.size(), f.evidence);
      if (base.outcome != Outcome::Inconclusive && v.outcome != Outcome::Inconclusive)
        EXPECT_EQ(v.outcome, base.outcome) << f.name << " l=" << f.ell << " j=" << j;
      EXPECT_EQ(v.po, base.po);
    }
  }
}

TEST(Analyze, Examples) {
  CaseReport r = analyze(CategorySpec(Algebra::G2, 26));
  EXPECT_TRUE(r.verdict_sought);
  EXPECT_EQ(r.verdict.outcome, Outcome::Infinite);

  r = analyze(CategorySpec(Algebra::E8, 33));
  EXPECT_EQ(r.verdict.outcome, Outcome::Infinite);
  EXPECT_TRUE(has(r.verdict, tag::kReductionF4));
  EXPECT_TRUE(has(r.verdict, tag::kRTdiv));

  r = analyze(CategorySpec(Algebra::G2, 8));
  EXPECT_FALSE(r.verdict_sought);

  r = analyze(CategorySpec(Algebra::G2, 12));
  EXPECT_FALSE(r.verdict_sought);
  EXPECT_EQ(r.rank, 1u);

  r = analyze(CategorySpec(Algebra::G2, 24));
  EXPECT_EQ(r.verdict.outcome, Outcome::Infinite);
  EXPECT_TRUE(has(r.verdict, tag::kMatrix));
  ASSERT_TRUE(r.matrix.has_value());
  EXPECT_EQ(r.matrix->result(), "no-proportional-power");

  r = analyze(CategorySpec(Algebra::F4, 24));
  EXPECT_EQ(r.verdict.outcome, Outcome::Infinite);
  EXPECT_TRUE(has(r.verdict, tag::kSpectrumMatch));
  EXPECT_EQ(r.object, from_labels(Algebra::F4, {0, 0, 0, 1}));

  r = analyze(CategorySpec(Algebra::E7, 20));
  EXPECT_EQ(r.verdict.outcome, Outcome::Infinite);
  EXPECT_TRUE(has(r.verdict, tag::kFibIsing));
  EXPECT_EQ(r.rank, 6u);
}

TEST(Analyze, RangeIsOrderedAndDeterministic) {
  const auto a = analyze_range(Algebra::G2, 16, 30, 2);
  const auto b = analyze_range(Algebra::G2, 16, 30, 1);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].ell, b[i].ell);
    EXPECT_EQ(a[i].verdict.to_string(), b[i].verdict.to_string());
    if (i) EXPECT_LT(a[i - 1].ell, a[i].ell);
  }
}
