#include <gtest/gtest.h>

#include "checks.hpp"
#include "downup/downup.hpp"
#include "downup/error.hpp"

namespace downup {
namespace {

const AlphabetPtr om = omega_alphabet();
NcPoly W(const char* text) { return parse(text, om); }

DomainError::Kind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const DomainError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no DomainError";
  return DomainError::Kind::InvalidRule;
}

TEST(Params, ParseAndPrint) {
  const Params p = parse_params("2,-1/2,0");
  EXPECT_EQ(p, (Params{2, Scalar(-1, 2), 0}));
  EXPECT_EQ(to_string(p), "2,-1/2,0");
  EXPECT_THROW(parse_params("1,2"), ParseError);
  EXPECT_THROW(parse_params("1,2,3,4"), ParseError);
  EXPECT_THROW(parse_params("a,b,c"), ParseError);
}

TEST(PbwNormalForm, DuudIntoBasisCoordinates) {
  const Params p{3, 0, 5};
  const PBWElem e = pbw_normal_form(parse("d u u d", downup_alphabet()), p);
  PBWElem expected;
  expected.add({1, 1, 1}, 3);
  expected.add({1, 0, 1}, 5);
  EXPECT_EQ(e, expected);
}

TEST(PbwNormalForm, AcceptsOmegaInput) {
  const Params p{2, 0, 1};
  EXPECT_TRUE(pbw_normal_form(W("d w"), p).is_zero());
  EXPECT_THROW(pbw_normal_form(W("w"), Params{2, 1, 1}), DomainError);
}

TEST(Omega, DuInOmegaCoordinates) {
  const Params p{Scalar(7, 3), 0, -4};
  OmegaElem expected;
  expected.add({0, 1, 0}, 1);
  expected.add({1, 0, 1}, Scalar(7, 3));
  expected.add({0, 0, 0}, -4);
  EXPECT_EQ(pbw_to_omega(PBWElem::single({0, 1, 0}), p), expected);
}

TEST(Omega, OmegaBackToPbw) {
  const Params p{Scalar(7, 3), 0, -4};
  PBWElem expected;
  expected.add({0, 1, 0}, 1);
  expected.add({1, 0, 1}, Scalar(-7, 3));
  expected.add({0, 0, 0}, 4);
  EXPECT_EQ(omega_to_pbw(OmegaElem::single({0, 1, 0}), p), expected);
  EXPECT_TRUE(omega_to_pbw(OmegaElem{}, p).is_zero());
  EXPECT_TRUE(pbw_to_omega(PBWElem{}, p).is_zero());
}

TEST(Omega, RequiresBetaZero) {
  const Params p{1, 1, 1};
  EXPECT_EQ(kind_of([&] { omega_rules(p); }), DomainError::Kind::BetaNonzero);
  EXPECT_EQ(kind_of([&] { pbw_to_omega(PBWElem::single({0, 0, 0}), p); }), DomainError::Kind::BetaNonzero);
  EXPECT_EQ(kind_of([&] { omega_to_pbw(OmegaElem::single({0, 0, 0}), p); }), DomainError::Kind::BetaNonzero);
  EXPECT_EQ(kind_of([&] { ideal_power_membership(W("w"), 1, p); }), DomainError::Kind::BetaNonzero);
}

TEST(Omega, OmegaDuIsOmegaSquaredPlusOmega) {
  const Params p{5, 0, 1};
  OmegaElem expected;
  expected.add({0, 2, 0}, 1);
  expected.add({0, 1, 0}, 1);
  EXPECT_EQ(omega_coordinates(W("w d u"), p), expected);
}

TEST(IdealPower, Examples) {
  const Params p{2, 0, 1};
  EXPECT_TRUE(ideal_power_membership(W("w"), 1, p));
  EXPECT_FALSE(ideal_power_membership(W("w"), 2, p));
  EXPECT_TRUE(ideal_power_membership(W("w d u w"), 2, p));
  EXPECT_FALSE(ideal_power_membership(W("w d u w"), 4, p));
  EXPECT_FALSE(ideal_power_membership(W("u"), 1, p));
  EXPECT_TRUE(ideal_power_membership(W("d u - 2 u d - 1"), 1, p));
  EXPECT_THROW(ideal_power_membership(W("w"), 0, p), std::invalid_argument);
}

TEST(BimodClass, Examples) {
  const Params p{2, 0, 1};
  EXPECT_EQ(bimod_class(W("u^2 w d^3"), p), BimodClass::single({2, 3}));
  EXPECT_EQ(bimod_class(W("w d u"), p), BimodClass::single({0, 0}));
  EXPECT_EQ(bimod_class(W("w d^2 u"), p), BimodClass::single({0, 1}, 3));
  EXPECT_EQ(bimod_class(W("w^2 + w d"), p), BimodClass::single({0, 1}));
  EXPECT_EQ(to_string(bimod_class(W("w d^2 u"), p)), "3*[w*d]");
  EXPECT_EQ(kind_of([&] { bimod_class(W("u"), p); }), DomainError::Kind::NotInIdeal);
}

TEST(BimodClass, GammaScalesTheAction) {
  // w d^2 u = alpha w^2 d + gamma (1 + alpha) w d
  EXPECT_EQ(bimod_class(W("w d^2 u"), Params{2, 0, 3}), BimodClass::single({0, 1}, 9));
  EXPECT_TRUE(bimod_class(W("w d^2 u"), Params{2, 0, 0}).is_zero());
}

TEST(BimodFormula, Examples) {
  EXPECT_TRUE(bimod_action_formula(0, 0, Side::Right, {2, 0, 1}).is_zero());
  EXPECT_TRUE(bimod_action_formula(0, 4, Side::Left, {2, 0, 1}).is_zero());
  EXPECT_EQ(bimod_action_formula(1, 1, Side::Left, {3, 0, 1}), BimodClass::single({0, 1}));
  EXPECT_EQ(bimod_action_formula(0, 2, Side::Right, {2, 0, 1}), BimodClass::single({0, 1}, 3));
  EXPECT_EQ(bimod_action_formula(2, 3, Side::Right, {2, 0, Scalar(1, 2)}), BimodClass::single({2, 2}, Scalar(7, 2)));
  EXPECT_EQ(kind_of([] { bimod_action_formula(1, 1, Side::Left, {1, 0, 1}); }), DomainError::Kind::AlphaIsOne);
  EXPECT_EQ(kind_of([] { bimod_action_formula(1, 1, Side::Left, {2, 1, 1}); }), DomainError::Kind::BetaNonzero);
}

TEST(Properties, DownUpSuites) {
  for (const auto& o :
       {verify::check_omega_annihilation(20), verify::check_omega_roundtrip(60, 6),
        verify::check_ideal_power_closure(3, 6), verify::check_bimod_formula(4, 5, false),
        verify::check_bimod_formula(4, 5, true), verify::check_omega_du_identity(),
        verify::check_omega_squared_absorption(4, 3), verify::check_omega_basis_all_gamma(6, 6)})
    EXPECT_TRUE(o.passed) << o.detail;
}

}  // namespace
}  // namespace downup
