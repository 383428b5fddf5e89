#include <gtest/gtest.h>

#include "checks.hpp"
#include "downup/error.hpp"
#include "downup/quotients.hpp"
#include "oracles.hpp"

namespace downup {
namespace {

const AlphabetPtr qa = quantum_alphabet();
const AlphabetPtr om = omega_alphabet();

QElem Q(std::initializer_list<std::pair<std::array<unsigned, 2>, Scalar>> terms) {
  QElem e;
  for (const auto& [idx, c] : terms) e.add(idx, c);
  return e;
}

TEST(Quantum, PlaneSwap) {
  EXPECT_EQ(q_normal_form(parse("y x", qa), QuantumAlgebra::plane(5)), Q({{{1, 1}, 5}}));
  EXPECT_EQ(q_normal_form(parse("x y", qa), QuantumAlgebra::plane(5)), Q({{{1, 1}, 1}}));
}

TEST(Quantum, WeylCubic) {
  // yyx = y(3xy + 1) = 3(3xy + 1)y + y
  const QElem e = q_normal_form(parse("y^2 x", qa), QuantumAlgebra::weyl(3));
  EXPECT_EQ(e, Q({{{1, 2}, 9}, {{0, 1}, 4}}));
  EXPECT_EQ(to_string(to_poly(e)), "9*x*y^2 + 4*y");
}

TEST(Quantum, MultiplicationMatchesNormalForm) {
  const QuantumAlgebra w = QuantumAlgebra::weyl(Scalar(-2, 3));
  const QElem a = q_normal_form(parse("y^2 + x", qa), w), b = q_normal_form(parse("x y - x", qa), w);
  EXPECT_EQ(q_mul(a, b, w), q_normal_form(parse("(y^2 + x)(x y - x)", qa), w));
}

TEST(Quantum, AlphaZeroRejected) {
  EXPECT_THROW(QuantumAlgebra(0, 1), DomainError);
}

TEST(Project, Examples) {
  EXPECT_TRUE(project(parse("w", om), {2, 0, 1}).is_zero());
  EXPECT_EQ(project(parse("d^2 u", om), {2, 0, 0}), Q({{{1, 2}, 4}}));
  EXPECT_EQ(project(parse("d u", om), {2, 0, 1}), Q({{{1, 1}, 2}, {{0, 0}, 1}}));
}

TEST(Project, QuotientSelection) {
  EXPECT_EQ(omega_quotient({3, 0, 0}).constant(), 0);
  EXPECT_EQ(omega_quotient({3, 0, 1}).constant(), 1);
  EXPECT_THROW(omega_quotient({3, 1, 0}), DomainError);
  EXPECT_THROW(omega_quotient({3, 0, 2}), DomainError);
  EXPECT_THROW(omega_quotient({0, 0, 1}), DomainError);
}

TEST(Abelianization, GammaZero) {
  const auto pres = abelianization({2, 0, 0});
  ASSERT_EQ(pres.summands.size(), 1u);
  EXPECT_EQ(pres.summands[0].kind, Summand::Kind::Quotient);
  EXPECT_EQ(abelian_invariants(pres), (AbelianInvariants{true, true, 1}));
  EXPECT_EQ(graded_dimensions(pres, 6), (std::vector<std::size_t>{1, 2, 3, 2, 2, 2, 2}));
}

TEST(Abelianization, GammaOneSplits) {
  const auto pres = abelianization({2, 0, 1});
  ASSERT_EQ(pres.summands.size(), 2u);
  EXPECT_EQ(pres.summands[0].kind, Summand::Kind::BaseField);
  EXPECT_EQ(abelian_invariants(pres), (AbelianInvariants{false, false, 2}));
  EXPECT_EQ(to_string(pres), "K (+) K[d,u]/(d*u + 1)");
  EXPECT_THROW(graded_dimensions(pres, 3), std::exception);
}

TEST(Abelianization, SumOneCases) {
  EXPECT_EQ(abelianization({1, 0, 0}).summands.at(0).kind, Summand::Kind::Polynomial);
  EXPECT_EQ(graded_dimensions(abelianization({Scalar(1, 2), Scalar(1, 2), 0}), 3),
            (std::vector<std::size_t>{1, 2, 3, 4}));
  const auto c = abelianization({1, 0, 1});
  EXPECT_EQ(abelian_invariants(c), (AbelianInvariants{true, true, 1}));
  EXPECT_TRUE(vanishes_in(CommPoly::monomial({"d", "u"}, {1, 0}), c));
}

TEST(Abelianization, BaseFieldAlone) {
  const AbelianPresentation k{{Summand{}}};
  EXPECT_EQ(abelian_invariants(k), (AbelianInvariants{true, true, 1}));
  EXPECT_EQ(graded_dimensions(k, 2), (std::vector<std::size_t>{1, 0, 0}));
}

TEST(Abelianization, GradedDimensionsAgainstBruteForce) {
  const std::vector<std::string> vars{"d", "u"};
  const std::vector<CommPoly> gens{CommPoly::monomial(vars, {2, 1}), CommPoly::monomial(vars, {1, 2})};
  EXPECT_EQ(oracle::quotient_dimensions(gens, 2, 6), graded_dimensions(abelianization({5, 0, 0}), 6));
}

TEST(CommutativeImage, CountsLetters) {
  const CommPoly c = commutative_image(parse("d u d - 2 d d u", downup_alphabet()));
  EXPECT_EQ(c, CommPoly::monomial({"d", "u"}, {2, 1}, -1));
}

TEST(CommRewriter, ReducesModuloRelations) {
  const auto pres = abelianization({3, 0, 1});
  const CommRewriter r(pres.summands.at(1));
  EXPECT_TRUE(r.confluent_up_to(8));
  // (1-3) du = 1, so du -> -1/2
  EXPECT_EQ(r.reduce(CommPoly::monomial({"d", "u"}, {2, 1})), CommPoly::monomial({"d", "u"}, {1, 0}, Scalar(-1, 2)));
}

TEST(Properties, QuotientSuites) {
  for (const auto& o : {verify::check_projection_homomorphism(20), verify::check_projection_kernel(30),
                        verify::check_quantum_domain(30), verify::check_abelianization_functorial(20),
                        verify::check_abelianization_graded(12, 6, false),
                        verify::check_abelianization_graded(12, 6, true),
                        verify::check_commutative_confluence(5, 8)})
    EXPECT_TRUE(o.passed) << o.detail;
}

}  // namespace
}  // namespace downup
