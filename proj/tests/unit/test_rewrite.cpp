#include <gtest/gtest.h>

#include "checks.hpp"
#include "downup/downup.hpp"
#include "downup/error.hpp"
#include "downup/quotients.hpp"
#include "downup/rewrite.hpp"

namespace downup {
namespace {

const AlphabetPtr du = downup_alphabet();
NcPoly P(const char* text) { return parse(text, du); }

TEST(Reduce, DownUpRelationExample) {
  EXPECT_EQ(reduce(P("d^2*u"), downup_rules({2, -1, 0})), P("2*d*u*d - u*d^2"));
  EXPECT_EQ(to_string(reduce(P("d^2*u"), downup_rules({2, -1, 0}))), "2*d*u*d - u*d^2");
}

TEST(Reduce, NormalWordsAreFixed) {
  const auto rules = downup_rules({3, 5, 7});
  EXPECT_EQ(reduce(P("u^2 d u d^3"), rules), P("u^2 d u d^3"));
  EXPECT_EQ(reduce(P("d u"), rules), P("d u"));
  EXPECT_TRUE(is_normal(Word{1, 0, 1, 0}, rules));
  EXPECT_FALSE(is_normal(Word{0, 1, 1}, rules));
}

TEST(Reduce, GammaTermsDropDegree) {
  // du^2 -> u when alpha = beta = 0, gamma = 1
  EXPECT_EQ(reduce(P("d u u d"), downup_rules({0, 0, 1})), P("u d"));
  EXPECT_EQ(reduce(P("d u u d"), downup_rules({3, 0, 5})), P("3 u d u d + 5 u d"));
}

TEST(RewriteSites, LargestRuleThenLeftmost) {
  const auto rules = downup_rules({1, 1, 1});
  const auto sites = rewrite_sites(Word{0, 0, 1, 1}, rules);
  ASSERT_EQ(sites.size(), 2u);
  EXPECT_EQ(sites[0].rule, 0u);
  EXPECT_EQ(sites[0].position, 0u);
  EXPECT_EQ(sites[1].rule, 1u);
  EXPECT_EQ(sites[1].position, 1u);
}

TEST(RuleSet, RejectsIncompatibleRules) {
  const Word d{0}, u{1};
  EXPECT_THROW(RuleSet(du, {{u, NcPoly::monomial(du, d)}}), DomainError);
  EXPECT_THROW(RuleSet(du, {{Word{}, NcPoly(du)}}), DomainError);
  EXPECT_THROW(RuleSet(du, {{d, NcPoly(du)}, {d, NcPoly::constant(du, 1)}}), DomainError);
  EXPECT_NO_THROW(RuleSet(du, {{Word{0, 1}, P("u d + 1")}}));
}

TEST(CriticalPairs, DownUpOverlapResolves) {
  const auto pairs = critical_pairs(downup_rules({2, -1, 3}), 4);
  ASSERT_FALSE(pairs.empty());
  bool found = false;
  for (const auto& cp : pairs) {
    found = found || cp.overlap == Word{0, 0, 1, 1};
    EXPECT_TRUE(cp.residual.is_zero()) << to_string(cp.residual);
  }
  EXPECT_TRUE(found);
  EXPECT_TRUE(all_resolve(pairs));
}

TEST(CriticalPairs, QuantumPlaneHasNoOverlaps) {
  EXPECT_TRUE(critical_pairs(quantum_rules(QuantumAlgebra::plane(3)), 4).empty());
}

TEST(CriticalPairs, OmegaRulesResolveUpToSix) {
  const auto pairs = critical_pairs(omega_rules({Scalar(-2, 3), 0, 5}), 6);
  EXPECT_FALSE(pairs.empty());
  EXPECT_TRUE(all_resolve(pairs));
}

TEST(CriticalPairs, DetectsANonConfluentSystem) {
  const auto ab = make_alphabet({"a", "b"});
  const RuleSet rules(ab, {{Word{0, 1}, parse("b", ab)}, {Word{1, 0}, parse("a", ab)}});
  const auto pairs = critical_pairs(rules, 3);
  EXPECT_FALSE(all_resolve(pairs));
}

TEST(CriticalPairs, DegreeBoundBelowRulesThrows) {
  EXPECT_THROW(critical_pairs(downup_rules({1, 1, 1}), 2), std::invalid_argument);
}

TEST(Properties, RewriteSuites) {
  for (const auto& o : {verify::check_idempotence(20), verify::check_congruence(20),
                        verify::check_strategy_independence(15), verify::check_pbw_normal_words(8),
                        verify::check_downup_critical_pairs(20), verify::check_shipped_critical_pairs()})
    EXPECT_TRUE(o.passed) << o.detail;
}

}  // namespace
}  // namespace downup
