#include <gtest/gtest.h>

#include <algorithm>

#include "checks.hpp"
#include "downup/error.hpp"
#include "downup/homology.hpp"

namespace downup {
namespace {

using RB = ResolutionBasis;
const AlphabetPtr du = downup_alphabet();
NcPoly P(const char* text) { return parse(text, du); }

TEST(Modules, EquationsUseAlphaPlusBeta) {
  EXPECT_TRUE(satisfies_module_equations({1, -1}, {2, 0, 1}));
  EXPECT_FALSE(satisfies_module_equations({1, 1}, {2, 0, 1}));
  EXPECT_TRUE(satisfies_module_equations({4, 5}, {1, 0, 0}));
  EXPECT_TRUE(satisfies_module_equations({4, 5}, {2, -1, 0}));
  EXPECT_FALSE(satisfies_module_equations({1, 0}, {1, 0, 1}));
}

TEST(Differentials, D1OnD) {
  const Params p{2, 0, 1};
  BimoduleElement expected(0);
  expected.add(P("d"), RB::One, P("1"), 1, p);
  expected.add(P("1"), RB::One, P("d"), -1, p);
  EXPECT_EQ(apply_d1(BimoduleElement::generator(RB::D), p), expected);
}

TEST(Differentials, D3AtBetaZero) {
  const Params p{Scalar(3, 4), 0, -2};
  BimoduleElement expected(2);
  expected.add(P("d"), RB::DUU, P("1"), 1, p);
  expected.add(P("1"), RB::DDU, P("u"), -1, p);
  EXPECT_EQ(apply_d3(BimoduleElement::generator(RB::DDUU), p), expected);
}

TEST(Differentials, D3CarriesBetaTerms) {
  const Params p{1, 2, 3};
  BimoduleElement expected(2);
  expected.add(P("d"), RB::DUU, P("1"), 1, p);
  expected.add(P("1"), RB::DUU, P("d"), 2, p);
  expected.add(P("1"), RB::DDU, P("u"), -1, p);
  expected.add(P("u"), RB::DDU, P("1"), -2, p);
  EXPECT_EQ(apply_d3(BimoduleElement::generator(RB::DDUU), p), expected);
}

TEST(Differentials, ComposeToZero) {
  for (const Params& p : {Params{2, -1, 0}, Params{Scalar(1, 3), 5, -7}, Params{0, 0, 0}, Params{1, 0, 1}}) {
    EXPECT_TRUE(apply_d2(apply_d3(BimoduleElement::generator(RB::DDUU), p), p).is_zero());
    EXPECT_TRUE(apply_d1(apply_d2(BimoduleElement::generator(RB::DDU), p), p).is_zero());
    EXPECT_TRUE(apply_d1(apply_d2(BimoduleElement::generator(RB::DUU), p), p).is_zero());
  }
}

TEST(Differentials, WrongStage) {
  const Params p{1, 1, 1};
  EXPECT_THROW(apply_d1(BimoduleElement::generator(RB::DDU), p), DomainError);
  EXPECT_THROW(apply_d3(BimoduleElement::generator(RB::D), p), DomainError);
  BimoduleElement x(1);
  EXPECT_THROW(x.add(P("1"), RB::DDU, P("1"), 1, p), DomainError);
}

TEST(Enumerate, Examples) {
  EXPECT_EQ(enumerate_one_dim({1, 0, 1}, 20), (std::vector<OneDimModule>{{0, 0}}));
  const auto mods = enumerate_one_dim({2, 0, 1}, 5);
  EXPECT_NE(std::find(mods.begin(), mods.end(), OneDimModule{1, -1}), mods.end());
  for (const Params& p : {Params{2, 0, 0}, Params{1, 0, 0}, Params{3, 0, 2}, Params{1, 0, 1}}) {
    const auto m = enumerate_one_dim(p, 6);
    ASSERT_FALSE(m.empty());
    EXPECT_EQ(m.front(), (OneDimModule{0, 0}));
    for (const auto& x : m) EXPECT_TRUE(satisfies_module_equations(x, p));
  }
  EXPECT_EQ(enumerate_one_dim({2, 0, 1}, 7), enumerate_one_dim({2, 0, 1}, 7));
}

TEST(Tor, Tor1Examples) {
  EXPECT_EQ(tor_profile({0, 0}, {0, 0}, {1, 0, 1}).dims[1], 0u);
  EXPECT_EQ(tor_profile({0, 0}, {0, 0}, {5, 0, 0}).dims[1], 2u);
  EXPECT_EQ(tor_profile({1, 0}, {1, 0}, {2, 0, 0}).dims[1], 1u);
  EXPECT_EQ(tor_profile({0, 0}, {0, 0}, {0, 0, 0}), (TorProfile{{1, 2, 2, 1}}));
}

TEST(Tor, Preconditions) {
  EXPECT_THROW(tor_profile({1, 1}, {0, 0}, {2, 0, 0}), DomainError);
  EXPECT_THROW(tor_profile({0, 0}, {0, 0}, {2, 1, 0}), DomainError);
  EXPECT_NO_THROW(tor_profile_mechanical({0, 0}, {0, 0}, {2, 1, 0}));
  EXPECT_THROW(tor_profile_mechanical({1, 1}, {0, 0}, {2, 1, 0}), DomainError);
}

TEST(Tor, ClosedFormMatchesMechanical) {
  const Params p{3, 0, 2};
  const OneDimModule t1{1, -1}, t2{2, Scalar(-1, 2)};
  EXPECT_EQ(closed_form_complex(t1, t2, p), functor_complex(t1, t2, p));
  const auto c = closed_form_complex(t1, t2, p);
  EXPECT_EQ(c.f0, (Matrix{{1, Scalar(1, 2)}}));
  EXPECT_EQ(c.f2, (Matrix{{1}, {2}}));
}

TEST(Tor, HomologyOfHandMatrices) {
  TorComplex zero;
  EXPECT_EQ(homology_dimensions(zero), (TorProfile{{1, 2, 2, 1}}));
  TorComplex c;
  c.f0 = Matrix{{1, 0}};
  c.f1 = Matrix{{0, 0}, {0, 1}};
  c.f2 = Matrix{{1}, {0}};
  EXPECT_EQ(homology_dimensions(c), (TorProfile{{0, 0, 0, 0}}));
}

TEST(Tor, BoundExamples) {
  EXPECT_EQ(tor1_bound({2, 0, 1}, 100), 1u);
  EXPECT_EQ(tor1_bound({1, 0, 1}, 100), 0u);
  EXPECT_EQ(tor1_bound({Scalar(-5, 7), 0, 0}, 30), 2u);
  EXPECT_EQ(tor1_bound({1, 0, 0}, 30), 2u);
  EXPECT_THROW(tor1_bound({1, 1, 0}, 5), DomainError);
}

TEST(Properties, HomologySuites) {
  for (const auto& o : {verify::check_complex_property(20), verify::check_euler_characteristic(8),
                        verify::check_tor0_criterion(8), verify::check_functor_consistency(20),
                        verify::check_mechanical_complex(8), verify::check_tor1_table(100)})
    EXPECT_TRUE(o.passed) << o.detail;
}

}  // namespace
}  // namespace downup
