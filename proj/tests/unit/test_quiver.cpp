#include <gtest/gtest.h>

#include "checks.hpp"
#include "downup/error.hpp"
#include "downup/quiver.hpp"

namespace downup {
namespace {

using Table = std::map<std::pair<std::string, std::string>, unsigned>;

TEST(Quiver, ZeroDownUpAlgebra) {
  const auto alg = zero_downup_quiver();
  EXPECT_EQ(arrow_tor_table(alg), (Table{{{"e", "e"}, 2}}));
  EXPECT_EQ(to_string(monomial_abelianization(alg)), "K[X_d,X_u]/(X_d^2*X_u, X_d*X_u^2)");
}

TEST(Quiver, TwoVerticesCountsBySourceAndTarget) {
  const Quiver q({"e", "f"}, {{"a", "f", "e"}, {"b", "f", "e"}, {"c", "f", "e"}});
  const auto table = arrow_tor_table(MonomialAlgebra(q, {}));
  EXPECT_EQ(table.at({"e", "f"}), 3u);
  EXPECT_EQ(table.at({"f", "e"}), 0u);
  EXPECT_EQ(table.at({"e", "e"}), 0u);
}

TEST(Quiver, NoArrows) {
  const MonomialAlgebra alg(Quiver({"x", "y", "z"}, {}), {});
  for (const auto& [key, n] : arrow_tor_table(alg)) EXPECT_EQ(n, 0u);
  const auto pres = monomial_abelianization(alg);
  EXPECT_EQ(pres.summands.size(), 3u);
  EXPECT_EQ(abelian_invariants(pres).summand_count, 3u);
  EXPECT_FALSE(abelian_invariants(pres).connected);
}

TEST(Quiver, RelationsComposeRightToLeft) {
  const Quiver q({"e", "f"}, {{"a", "e", "f"}, {"b", "f", "e"}});
  EXPECT_NO_THROW(MonomialAlgebra(q, {{"b", "a"}}));
  EXPECT_THROW(MonomialAlgebra(q, {{"a", "a"}}), DomainError);
  EXPECT_THROW(MonomialAlgebra(q, {{"a"}}), DomainError);
  EXPECT_THROW(MonomialAlgebra(q, {{"b", "zz"}}), DomainError);
}

TEST(Quiver, InvalidQuivers) {
  EXPECT_THROW(Quiver({"e"}, {{"a", "e", "f"}}), DomainError);
  EXPECT_THROW(Quiver({"e", "e"}, {}), DomainError);
  EXPECT_THROW(Quiver({"e"}, {{"a", "e", "e"}, {"a", "e", "e"}}), DomainError);
}

TEST(Quiver, LoopRelationsOnlyEnterTheirVertex) {
  const Quiver q({"e", "f"}, {{"x", "e", "e"}, {"a", "e", "f"}, {"b", "f", "e"}});
  const auto pres = monomial_abelianization(MonomialAlgebra(q, {{"x", "x"}, {"b", "a"}}));
  ASSERT_EQ(pres.summands.size(), 2u);
  EXPECT_EQ(to_string(pres.summands[0]), "K[X_x]/(X_x^2)");
  EXPECT_EQ(pres.summands[1].kind, Summand::Kind::BaseField);
}

TEST(ParseQuiver, LineFormat) {
  const auto alg = parse_quiver(R"(# A(0,0,0)
vertex e
arrow d e e
arrow u e e
relation d d u
relation d u u
)");
  EXPECT_EQ(arrow_tor_table(alg), arrow_tor_table(zero_downup_quiver()));
  EXPECT_EQ(monomial_abelianization(alg), monomial_abelianization(zero_downup_quiver()));
}

TEST(ParseQuiver, Json) {
  const auto alg = parse_quiver(R"({"vertices": ["e", "f"],
    "arrows": [{"id": "a", "source": "f", "target": "e"}, {"id": "b", "source": "e", "target": "f"}],
    "relations": [["a", "b"]]})");
  EXPECT_EQ(alg.quiver().arrows().size(), 2u);
  EXPECT_EQ(arrow_tor_table(alg).at({"e", "f"}), 1u);
}

TEST(ParseQuiver, Errors) {
  EXPECT_THROW(parse_quiver("{\"vertices\": [}"), ParseError);
  EXPECT_THROW(parse_quiver("vertex e\nbogus line"), ParseError);
  EXPECT_THROW(parse_quiver("vertex e\narrow a e"), ParseError);
  EXPECT_THROW(parse_quiver("vertex e\narrow a e g"), DomainError);
}

TEST(Properties, QuiverSuites) {
  for (const auto& o : {verify::check_quiver_counts(), verify::check_quiver_graded()}) EXPECT_TRUE(o.passed) << o.detail;
}

}  // namespace
}  // namespace downup
