#include <gtest/gtest.h>

#include "checks.hpp"
#include "downup/classify.hpp"
#include "downup/error.hpp"

namespace downup {
namespace {

const Scalar half(1, 2);

TEST(Type, Partition) {
  EXPECT_EQ(tag(type_of({Scalar(1, 3), Scalar(2, 3), 0})), 'a');
  EXPECT_EQ(tag(type_of({2, 0, 0})), 'b');
  EXPECT_EQ(tag(type_of({1, 0, 7})), 'c');
  EXPECT_EQ(tag(type_of({2, 0, 1})), 'd');
}

TEST(Iso, SpecExamples) {
  const auto swap = iso_verdict({1, 2, 0}, {-half, half, 0});
  EXPECT_TRUE(swap.isomorphic);
  EXPECT_EQ(swap.rule, IsoRule::Cm00Swap);
  EXPECT_EQ(to_string(swap.rule), "CM00 swap");

  const auto rescale = iso_verdict({3, 0, 5}, {3, 0, 7});
  EXPECT_TRUE(rescale.isomorphic);
  EXPECT_EQ(rescale.rule, IsoRule::GammaRescaling);
  EXPECT_NE(rescale.detail.find("5/7"), std::string::npos);

  EXPECT_EQ(iso_verdict({3, 0, 0}, {Scalar(1, 3), 0, 0}).rule, IsoRule::AlphaDiffersGammaZero);
  EXPECT_EQ(iso_verdict({2, 0, 1}, {half, 0, 1}).rule, IsoRule::AlphaDiffersGammaNonzero);
  EXPECT_FALSE(iso_verdict({2, 0, 1}, {half, 0, 1}).isomorphic);
}

TEST(Iso, DichotomyBeforeTypes) {
  const auto v = iso_verdict({0, 1, 0}, {1, 0, 0});
  EXPECT_FALSE(v.isomorphic);
  EXPECT_EQ(v.rule, IsoRule::NoetherianDichotomy);
  EXPECT_EQ(iso_verdict({2, 3, 0}, {2, 3, 1}).rule, IsoRule::TypeMismatch);
}

TEST(Monomial, OnlyTheZeroTriple) {
  EXPECT_TRUE(is_monomial({0, 0, 0}));
  EXPECT_FALSE(is_monomial({0, 0, 1}));
  EXPECT_FALSE(is_monomial({0, 1, 0}));
  EXPECT_FALSE(is_monomial({1, 0, 0}));
}

TEST(Report, SeparatesByTorBound) {
  const auto r = invariant_report({3, 0, 0}, {3, 0, 1});
  ASSERT_TRUE(r.certifies_non_isomorphism());
  EXPECT_EQ(r.left.tor1_bound, 2u);
  EXPECT_EQ(r.right.tor1_bound, 1u);
  EXPECT_EQ(r.mismatches.front(), "type");
}

TEST(Report, OneSidedForSameInvariants) {
  const auto r = invariant_report({3, 0, 0}, {Scalar(1, 3), 0, 0});
  EXPECT_FALSE(r.certifies_non_isomorphism());
  EXPECT_FALSE(iso_verdict({3, 0, 0}, {Scalar(1, 3), 0, 0}).isomorphic);
  EXPECT_THROW(invariant_report({3, 1, 0}, {3, 0, 0}), DomainError);
}

TEST(Lambda, Values) {
  const auto seq = lambda_sequence(2, 2);
  ASSERT_EQ(seq.size(), 3u);
  EXPECT_EQ(seq[0], 2);
  EXPECT_EQ(seq[1], Scalar(4, 3));
  EXPECT_EQ(seq[2], Scalar(8, 21));
  for (int bad : {0, 1, -1}) EXPECT_THROW(lambda_sequence(bad, 2), DomainError);
}

TEST(Properties, ClassifySuites) {
  for (const auto& o : {verify::check_iso_reflexive_symmetric(200), verify::check_iso_soundness(60),
                        verify::check_iso_completeness(60), verify::check_classifier_table(),
                        verify::check_lambda(50, 20)})
    EXPECT_TRUE(o.passed) << o.detail;
}

}  // namespace
}  // namespace downup
