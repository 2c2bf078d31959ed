#include <gtest/gtest.h>

#include <algorithm>

#include "exbraid/braid.hpp"
#include "exbraid/error.hpp"
#include "exbraid/labels.hpp"

using namespace exbraid;

namespace {

std::vector<CycloNumber> terms(int ell, const std::vector<std::pair<int, mpq_class>>& t) {
  return spectrum_from_terms(ell, t).exact();
}

// (v_i / v_j)^2 = theta_i / theta_j for values with summand provenance.
void check_square_consistency(const CategorySpec& s, const Spectrum& sp) {
  for (const auto& a : sp.values)
    for (const auto& b : sp.values) {
      ASSERT_TRUE(a.summand && b.summand);
      const CycloNumber r = a.value / b.value;
      EXPECT_EQ(r * r, twist(s, *a.summand) / twist(s, *b.summand)) << s.to_string();
    }
}

}  // namespace

TEST(Braid, TwistExamples) {
  const RootSystem& g2 = RootSystem::get(Algebra::G2);
  EXPECT_EQ(twist_exponent(g2, Weight{1, 0}), 12);
  EXPECT_EQ(twist_exponent(g2, Weight{0, 0}), 0);
  CategorySpec s(Algebra::G2, 21);
  EXPECT_EQ(twist(s, Weight{0, 0}), CycloNumber(1));
  EXPECT_EQ(twist(s, Weight{1, 0}), pow(s.q(), 12));
  // rational exponents land in conductor 4l
  const RootSystem& e6 = RootSystem::get(Algebra::E6);
  EXPECT_EQ(twist_exponent(e6, Weight::fundamental(6, 1)), mpq_class(52, 3));
}

TEST(Braid, G2SpectrumFixtureAllLevels) {
  for (int ell = 18; ell <= 60; ++ell) {
    CategorySpec s(Algebra::G2, ell);
    const Spectrum sp = sigma_spectrum(s, Weight{1, 0});
    ASSERT_EQ(sp.size(), 4u);
    EXPECT_TRUE(equal_up_to_scale(sp.exact(), terms(ell, {{1, 0}, {-1, 6}, {-1, 12}, {1, 14}})).has_value()) << ell;
    EXPECT_TRUE(sp.distinct()) << ell;
    check_square_consistency(s, sp);
    const Spectrum n = normalize_ratios(sp);
    EXPECT_TRUE(equal_up_to_scale(n.exact(), terms(ell, {{1, -12}, {-1, -6}, {-1, 0}, {1, 2}})) == CycloNumber(1)) << ell;
  }
}

TEST(Braid, F4VectorSpectrumFixtureEvenLevels) {
  const Weight v = from_labels(Algebra::F4, {1, 0, 0, 0});
  for (int ell = 22; ell <= 60; ell += 2) {
    CategorySpec s(Algebra::F4, ell);
    const Spectrum sp = sigma_spectrum(s, v);
    ASSERT_EQ(sp.size(), 5u);
    EXPECT_TRUE(
        equal_up_to_scale(sp.exact(), terms(ell, {{1, -24}, {1, -12}, {1, 2}, {-1, 0}, {-1, -6}})).has_value())
        << ell;
    // distinct exactly when l != 24
    EXPECT_EQ(sp.distinct(), ell != 24) << ell;
    check_square_consistency(s, sp);
  }
}

TEST(Braid, F4VectorSpectrumDistinctOnOddLevels) {
  const Weight v = from_labels(Algebra::F4, {1, 0, 0, 0});
  for (int ell = 17; ell <= 39; ell += 2) {
    CategorySpec s(Algebra::F4, ell);
    const Spectrum sp = sigma_spectrum(s, v);
    EXPECT_TRUE(sp.distinct()) << ell;
    check_square_consistency(s, sp);
  }
}

TEST(Braid, F4AdjointSpectrumAtLevel24) {
  CategorySpec s(Algebra::F4, 24);
  const Spectrum sp = sigma_spectrum(s, from_labels(Algebra::F4, {0, 0, 0, 1}));
  ASSERT_EQ(sp.size(), 4u);
  EXPECT_TRUE(equal_up_to_scale(sp.exact(), terms(24, {{1, 0}, {1, 26}, {-1, 18}, {-1, 36}})).has_value());
  EXPECT_TRUE(sp.distinct());
  check_square_consistency(s, sp);
}

TEST(Braid, ESeriesSpectrumMatchesFusionInStableRange) {
  for (auto [a, n, first] : std::vector<std::tuple<Algebra, int, int>>{
           {Algebra::E6, 6, 14}, {Algebra::E7, 7, 21}, {Algebra::E8, 8, 34}}) {
    for (int ell = first - 1; ell <= 60; ++ell) {
      CategorySpec s(a, ell);
      if (ell < first) {
        EXPECT_FALSE(en_stable_range(s));
        EXPECT_THROW(en_series_spectrum(s), PreconditionError);
        continue;
      }
      ASSERT_TRUE(en_stable_range(s)) << algebra_name(a) << " " << ell;
      const Spectrum formula = en_series_spectrum(s);
      EXPECT_TRUE(equal_up_to_scale(formula.exact(), terms(ell, {{1, 1}, {-1, -1}, {1, 3 - 2 * n}})) == CycloNumber(1));
      const Spectrum fused = restricted_spectrum(s, en_vector_weight(a), en_target_weight(a));
      EXPECT_EQ(fused.size(), 3u);
      EXPECT_TRUE(equal_up_to_scale(fused.exact(), formula.exact()).has_value()) << algebra_name(a) << " " << ell;
      EXPECT_TRUE(formula.distinct());
    }
  }
}

TEST(Braid, DualEndNodeGivesSameE6Spectrum) {
  // the conjugate choice lambda_6 for V gives the same spectrum up to scale
  for (int ell : {14, 20, 31, 60}) {
    CategorySpec s(Algebra::E6, ell);
    const Weight v = en_vector_weight(Algebra::E6);
    const Weight vd = s.rs().dual(v);
    ASSERT_NE(v, vd);
    const Spectrum a = restricted_spectrum(s, v, en_target_weight(Algebra::E6));
    const Spectrum b = restricted_spectrum(s, vd, s.rs().dual(en_target_weight(Algebra::E6)));
    EXPECT_TRUE(equal_up_to_scale(a.exact(), b.exact()).has_value()) << ell;
  }
}

TEST(Braid, AllSpectrumValuesAreRootsOfUnity) {
  for (Algebra a : all_algebras())
    for (int ell : {18, 22, 25, 30, 36, 42}) {
      if (!CategorySpec::nonempty(a, ell)) continue;
      CategorySpec s(a, ell);
      for (std::size_t i = 1; i <= s.rs().rank(); ++i) {
        const Weight w = Weight::fundamental(s.rs().rank(), i);
        if (!in_alcove(s, w) || s.rs().weyl_dim(w) > 300) continue;
        const auto sq = tensor_square_truncated(s, w);
        if (!sq.multiplicity_free()) continue;
        if (std::any_of(sq.summands.begin(), sq.summands.end(), [](const auto& x) { return x.parity == Parity::Unsplit; }))
          continue;
        const Spectrum sp = sigma_spectrum(s, w, sq);
        for (const auto& v : sp.values) EXPECT_TRUE(root_of_unity_order(v.value).has_value());
        check_square_consistency(s, sp);
      }
    }
}

TEST(Braid, NormalizeRatios) {
  const Spectrum g = sigma_spectrum(CategorySpec(Algebra::G2, 21), Weight{1, 0});
  const Spectrum n = normalize_ratios(g);
  EXPECT_EQ(n.normalization, Normalization::RatioNormalized);
  // same multiset, summand order kept
  EXPECT_EQ(n.to_string(), "{q^2, -q^-6, -1, q^-12}");
  // no parities known: largest exponent goes to 1
  EXPECT_EQ(normalize_ratios(spectrum_from_terms(21, {{1, 0}, {-1, 6}, {-1, 12}, {1, 14}})).to_string(),
            "{q^-14, -q^-8, -q^-2, 1}");

  const Spectrum one = normalize_ratios(spectrum_from_terms(21, {{-1, 5}}));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one.values[0].value, CycloNumber(1));

  // pre-scaling does not change the normalized result
  for (int sign : {1, -1})
    for (int e : {-7, 0, 3, 11})
      EXPECT_EQ(normalize_ratios(rescale(g, sign, e)).exact(), n.exact());
}

TEST(Braid, EqualUpToScale) {
  const auto a = terms(30, {{1, 0}, {-1, 6}});
  const auto b = terms(30, {{-1, 9}, {1, 3}});
  auto c = equal_up_to_scale(a, b);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(*c, make_eigenvalue(30, 1, 3).value);
  EXPECT_FALSE(equal_up_to_scale(a, terms(30, {{1, 0}, {1, 6}})).has_value());
  EXPECT_FALSE(equal_up_to_scale(a, terms(30, {{1, 0}})).has_value());
}

TEST(Braid, EigenvalueFormatting) {
  EXPECT_EQ(make_eigenvalue(24, -1, 6).to_string(), "-q^6");
  EXPECT_EQ(make_eigenvalue(24, 1, 0).to_string(), "1");
  EXPECT_EQ(make_eigenvalue(24, 1, mpq_class(26, 3)).to_string(), "q^(26/3)");
  EXPECT_EQ(make_eigenvalue(24, 1, 48).value, CycloNumber(1));
}
