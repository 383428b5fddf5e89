#include <gtest/gtest.h>

#include "checks.hpp"
#include "downup/downup.hpp"
#include "downup/error.hpp"
#include "downup/expr.hpp"
#include "downup/quotients.hpp"
#include "oracles.hpp"

namespace downup {
namespace {

const AlphabetPtr du = downup_alphabet();

NcPoly P(const char* text) { return parse(text, du); }
NcPoly M(Word w, Scalar c = 1) { return NcPoly::monomial(du, std::move(w), c); }

TEST(Scalar, ParsesIntegersAndFractionsInLowestTerms) {
  EXPECT_EQ(parse_scalar("3/6"), Scalar(1, 2));
  EXPECT_EQ(parse_scalar("-4/2"), Scalar(-2));
  EXPECT_EQ(to_string(parse_scalar("-0")), "0");
  EXPECT_EQ(to_string(rational(6, -4)), "-3/2");
  EXPECT_THROW(rational(1, 0), std::domain_error);
  EXPECT_THROW(parse_scalar("1/"), ParseError);
  EXPECT_THROW(parse_scalar("1/0"), ParseError);
  EXPECT_THROW(parse_scalar("x"), ParseError);
}

TEST(Scalar, GeometricSumCoversAlphaOne) {
  EXPECT_EQ(geometric_sum(2, 3), 7);
  EXPECT_EQ(geometric_sum(1, 5), 5);
  EXPECT_EQ(geometric_sum(Scalar(1, 2), 2), Scalar(3, 2));
  EXPECT_EQ(geometric_sum(3, 0), 0);
}

TEST(Word, DeglexPutsLongerWordsFirstThenHigherLetters) {
  const Word dud{0, 1, 0}, udd{1, 0, 0}, dd{0, 0};
  EXPECT_GT(dud, udd);
  EXPECT_GT(udd, dd);
  EXPECT_GT(Word{0}, Word{1});
  EXPECT_GT(Word{1}, Word{});
}

TEST(NcPoly, MultiplicationConcatenates) {
  EXPECT_EQ(mul(P("d"), P("u")), M({0, 1}));
  EXPECT_TRUE(add(P("d*u"), scale(-1, P("d*u"))).is_zero());
}

TEST(NcPoly, DifferenceOfSquaresMatchesHandExpansion) {
  const NcPoly got = mul(P("d+u"), P("d-u"));
  EXPECT_EQ(got, oracle::expand_difference_of_squares());
  EXPECT_EQ(got.size(), 4u);
}

TEST(NcPoly, PowerAndDegree) {
  const NcPoly sq = pow(P("d+u"), 2);
  EXPECT_EQ(sq, P("d d + d u + u d + u u"));
  EXPECT_EQ(sq.degree(), 2u);
  EXPECT_EQ(pow(P("d"), 0), NcPoly::constant(du, 1));
  EXPECT_EQ(NcPoly(du).degree(), 0u);
}

TEST(Parse, AcceptsTheFullGrammar) {
  const NcPoly p = P("d^2*u - 2*d*u*d + u*d^2");
  EXPECT_EQ(p.coefficient(Word{0, 0, 1}), 1);
  EXPECT_EQ(p.coefficient(Word{0, 1, 0}), -2);
  EXPECT_EQ(p.coefficient(Word{1, 0, 0}), 1);
  EXPECT_EQ(P("du"), P("d*u"));
  EXPECT_EQ(P("  2/3 d  "), M({0}, Scalar(2, 3)));
  EXPECT_EQ(P("(d+u)^2 - (d+u)(d+u)"), NcPoly(du));
  EXPECT_EQ(P("-(d - 1)"), P("1 - d"));
  EXPECT_EQ(P("d^0"), P("1"));
}

TEST(Parse, OmegaAliases) {
  const auto om = omega_alphabet();
  const NcPoly w = NcPoly::letter(om, "w");
  EXPECT_EQ(parse("omega", om), w);
  EXPECT_EQ(parse("\xCF\x89", om), w);
  EXPECT_EQ(parse("u omega d", om), parse("u*w*d", om));
}

TEST(Parse, UnknownLetterCarriesLetterAndPosition) {
  try {
    P("d*z");
    FAIL() << "expected UnknownLetterError";
  } catch (const UnknownLetterError& e) {
    EXPECT_EQ(e.letter(), "z");
    EXPECT_EQ(e.position(), 2u);
  }
  EXPECT_THROW(P("omega"), UnknownLetterError);
  EXPECT_THROW(P("\xCF\x89"), UnknownLetterError);
}

TEST(Parse, SyntaxErrors) {
  for (const char* bad : {"d +", "d^", "(d", "d)", "1/0", "d^-1", "*d", ""}) EXPECT_THROW(P(bad), ParseError) << bad;
}

TEST(NcPoly, MixingAlphabetsThrows) {
  const NcPoly d = P("d");
  const NcPoly w = NcPoly::letter(omega_alphabet(), "w");
  EXPECT_THROW(d + w, AlphabetMismatchError);
  EXPECT_THROW(d * w, AlphabetMismatchError);
}

TEST(Print, DescendingTermsWithCollapsedPowers) {
  EXPECT_EQ(to_string(P("u*d^2 + 2*d*u*d")), "2*d*u*d + u*d^2");
  EXPECT_EQ(to_string(P("d d u")), "d^2*u");
  EXPECT_EQ(to_string(P("-d + 3/2")), "-d + 3/2");
  EXPECT_EQ(to_string(NcPoly(du)), "0");
  EXPECT_EQ(to_string(P("1")), "1");
  EXPECT_EQ(to_string(parse("y^2 x", quantum_alphabet())), "y^2*x");
}

TEST(Substitute, IsAnAlgebraMap) {
  const auto om = omega_alphabet();
  const NcPoly p = parse("w d + 2 u w", om);
  const NcPoly image = substitute(p, du, [&](Letter l) {
    return om->name(l) == "w" ? P("d u - u d") : P(om->name(l).c_str());
  });
  EXPECT_EQ(image, P("d u d - u d d + 2 u d u - 2 u u d"));
}

TEST(Properties, ExprSuites) {
  for (const auto& o : {verify::check_ring_axioms(60), verify::check_parse_print(40), verify::check_canonical_form(40)})
    EXPECT_TRUE(o.passed) << o.detail;
}

}  // namespace
}  // namespace downup
