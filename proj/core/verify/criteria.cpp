#include <chrono>
#include <sstream>

#include "checks.hpp"
#include "downup/classify.hpp"
#include "downup/homology.hpp"
#include "downup/quiver.hpp"
#include "downup/quotients.hpp"
#include "oracles.hpp"
#include "random.hpp"

namespace downup::verify {

using testing::Random;

namespace {

/// Runs the parts in order, stopping at the first failure, and enforces a
/// wall-clock budget when one is given.
Outcome all_of(std::vector<std::pair<std::string, std::function<Outcome()>>> parts,
               double budget_seconds = 0) {
  const auto start = std::chrono::steady_clock::now();
  std::string summary;
  for (auto& [label, part] : parts) {
    const Outcome o = part();
    if (!o.passed) return {false, label + ": " + o.detail};
    summary += (summary.empty() ? "" : "; ") + label + " (" + o.detail + ")";
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  if (budget_seconds > 0 && elapsed.count() > budget_seconds) {
    std::ostringstream os;
    os << "took " << elapsed.count() << " s, budget " << budget_seconds << " s";
    return {false, os.str()};
  }
  return {true, summary};
}

struct TableRow {
  Params left;
  Params right;
  bool isomorphic;
  IsoRule rule;
};

Params P(Scalar a, Scalar b, Scalar g) { return {std::move(a), std::move(b), std::move(g)}; }

const Scalar half(1, 2);

}  // namespace

Outcome check_tor1_table(std::size_t min_pairs) {
  Tally t;
  Random rng(801);
  const OneDimModule trivial{0, 0};

  // gamma != 0, alpha = 1: one module per parameter, so vary gamma
  std::size_t pairs_i = 0;
  while (pairs_i < min_pairs) {
    const Params p{1, 0, rng.nonzero_rational()};
    const auto mods = enumerate_one_dim(p, 10);
    t.expect(mods.size() == 1 && mods[0] == trivial, [&] { return "extra modules for " + to_string(p); });
    for (const auto& m1 : mods)
      for (const auto& m2 : mods) {
        ++pairs_i;
        t.expect(tor_profile(m1, m2, p).dims[1] == 0, [&] { return "Tor_1 != 0 for " + to_string(p); });
      }
  }

  // gamma != 0, alpha != 1
  std::size_t pairs_ii = 0, attained = 0;
  for (int s = 0; s < 6 || pairs_ii < min_pairs; ++s) {
    const Params p{s == 0 ? Scalar(2) : rng.rational_avoiding({1}), 0, s == 0 ? Scalar(1) : rng.nonzero_rational()};
    const auto mods = enumerate_one_dim(p, 11);
    for (const auto& m1 : mods)
      for (const auto& m2 : mods) {
        ++pairs_ii;
        const unsigned tor1 = tor_profile(m1, m2, p).dims[1];
        attained += tor1 == 1;
        t.expect(tor1 <= 1, [&] { return "Tor_1 > 1 for " + to_string(p); });
      }
  }
  t.expect(attained > 0, [] { return "Tor_1 = 1 never attained with gamma != 0, alpha != 1"; });

  // gamma = 0
  std::size_t pairs_iii = 0, diagonal = 0;
  for (int s = 0; s < 8 || pairs_iii < min_pairs; ++s) {
    const Scalar alpha = s == 0 ? Scalar(1) : s == 1 ? Scalar(2) : s == 2 ? Scalar(0) : rng.rational();
    const Params p{alpha, 0, 0};
    const auto mods = enumerate_one_dim(p, 11);
    t.expect(tor_profile(trivial, trivial, p).dims[1] == 2, [&] { return "Tor_1(K,K) != 2 for " + to_string(p); });
    for (const auto& m1 : mods) {
      if (alpha != 1 && !(m1 == trivial)) {
        ++diagonal;
        t.expect(tor_profile(m1, m1, p).dims[1] == 1, [&] { return "Tor_1(T,T) != 1 for " + to_string(p); });
      }
      for (const auto& m2 : mods) {
        ++pairs_iii;
        t.expect(tor_profile(m1, m2, p).dims[1] <= 2, [&] { return "Tor_1 > 2 for " + to_string(p); });
      }
    }
  }
  std::ostringstream note;
  note << pairs_i << "/" << pairs_ii << "/" << pairs_iii << " pairs per regime, " << attained
       << " with Tor_1 = 1, " << diagonal << " diagonal checks";
  return t.outcome(note.str());
}

Outcome check_classifier_table() {
  using R = IsoRule;
  const std::vector<TableRow> rows{
      {P(1, 2, 0), P(-half, half, 0), true, R::Cm00Swap},
      {P(3, 0, 5), P(3, 0, 7), true, R::GammaRescaling},
      {P(3, 0, 0), P(Scalar(1, 3), 0, 0), false, R::AlphaDiffersGammaZero},
      {P(2, 0, 1), P(half, 0, 1), false, R::AlphaDiffersGammaNonzero},
      {P(2, 3, 0), P(2, 3, 4), false, R::TypeMismatch},
      {P(1, 0, 0), P(1, 0, 1), false, R::TypeMismatch},
      {P(2, 0, 0), P(2, 0, 1), false, R::TypeMismatch},
      {P(1, 0, 1), P(1, 0, half), true, R::GammaRescaling},
      {P(0, 0, 0), P(0, 0, 0), true, R::GammaRescaling},
      {P(0, 1, 0), P(0, 0, 0), false, R::NoetherianDichotomy},
      {P(2, -1, 1), P(2, 0, 1), false, R::NoetherianDichotomy},
      {P(2, -1, 1), P(2, -1, 3), true, R::Cm00Identity},
      {P(2, -1, 1), P(2, -1, 0), false, R::TypeMismatch},
      {P(1, 2, 1), P(-half, half, 5), true, R::Cm00Swap},
      {P(1, 2, 0), P(1, 3, 0), false, R::Cm00Refuted},
      {P(1, 2, 0), P(half, half, 0), false, R::TypeMismatch},
      {P(3, -2, 1), P(Scalar(3, 2), -half, 1), true, R::Cm00Swap},
      {P(4, 0, 0), P(4, 0, 0), true, R::GammaRescaling},
      {P(-1, 0, 0), P(1, 0, 0), false, R::TypeMismatch},
      {P(-1, 0, 1), P(-1, 0, 2), true, R::GammaRescaling},
      {P(half, 0, 0), P(2, 0, 0), false, R::AlphaDiffersGammaZero},
      {P(0, 0, 1), P(0, 0, 2), true, R::GammaRescaling},
      {P(0, 0, 1), P(3, 0, 1), false, R::AlphaDiffersGammaNonzero},
      {P(1, 1, 0), P(-1, 1, 0), true, R::Cm00Swap},
      {P(2, 2, 0), P(2, 2, 0), true, R::Cm00Identity},
      {P(2, 2, 1), P(-1, half, 0), false, R::TypeMismatch},
      {P(1, -1, 0), P(1, -1, 7), false, R::TypeMismatch},
      {P(1, 3, 1), P(1, 4, 1), false, R::Cm00Refuted},
      {P(5, 0, 0), P(5, 1, 0), false, R::NoetherianDichotomy},
      {P(2, 0, 3), P(3, 0, 2), false, R::AlphaDiffersGammaNonzero},
  };
  Tally t;
  for (const auto& row : rows)
    for (bool flip : {false, true}) {
      const auto& a = flip ? row.right : row.left;
      const auto& b = flip ? row.left : row.right;
      const auto v = iso_verdict(a, b);
      t.expect(v.isomorphic == row.isomorphic && v.rule == row.rule, [&] {
        return to_string(a) + " vs " + to_string(b) + " gave " + to_string(v.rule);
      });
      t.expect(!v.isomorphic || !v.detail.empty(), [] { return "isomorphic verdict without detail"; });
    }
  t.expect(iso_verdict(P(3, 0, 5), P(3, 0, 7)).detail.find("5/7") != std::string::npos,
           [] { return "rescaling factor 5/7 missing"; });
  for (const auto& row : rows)
    for (const auto* p : {&row.left, &row.right})
      t.expect(is_monomial(*p) == (*p == P(0, 0, 0)), [&] { return "monomiality wrong at " + to_string(*p); });
  return t.outcome(std::to_string(rows.size()) + " pairs");
}

std::vector<Check> acceptance_checks() {
  return {
      {"criterion 1: rewriting and PBW basis",
       [] {
         return all_of({{"normal words up to length 8", [] { return check_pbw_normal_words(8); }},
                        {"critical pairs at 50 parameters", [] { return check_downup_critical_pairs(50); }}},
                       10);
       }},
      {"criterion 2: omega calculus",
       [] {
         return all_of({{"roundtrip on 500 elements", [] { return check_omega_roundtrip(500, 8); }},
                        {"d omega = omega u = 0", [] { return check_omega_annihilation(50); }},
                        {"closure for n <= 4", [] { return check_ideal_power_closure(4, 10); }}},
                       30);
       }},
      {"criterion 3: omega/omega^2 action",
       [] {
         return all_of({{"formula vs class, i,l <= 6, 20 alphas", [] { return check_bimod_formula(6, 20, false); }},
                        {"omega du = omega^2 + omega", [] { return check_omega_du_identity(); }}});
       }},
      {"criterion 4: resolution differentials",
       [] { return all_of({{"d1 d2 = d2 d3 = 0 at 50 parameters", [] { return check_complex_property(50); }}}, 5); }},
      {"criterion 5: Tor_1 table", [] { return check_tor1_table(100); }},
      {"criterion 6: classifier truth table", [] { return check_classifier_table(); }},
      {"criterion 7: abelianization",
       [] {
         return all_of({
             {"graded dimensions of (alpha,0,0)",
              [] {
                Random rng(802);
                Tally t;
                for (int s = 0; s < 20; ++s) {
                  const Params p{s == 0 ? Scalar(0) : rng.rational_avoiding({1}), 0, 0};
                  std::vector<CommPoly> gens;
                  const RuleSet rules = downup_rules(p);
                  for (const auto& rule : rules.rules())
                    gens.push_back(commutative_image(NcPoly::monomial(downup_alphabet(), rule.lhs) - rule.rhs));
                  t.expect(graded_dimensions(abelianization(p), 6) == oracle::quotient_dimensions(gens, 2, 6),
                           [&] { return "mismatch at " + to_string(p); });
                }
                return t.outcome();
              }},
             {"invariants of (alpha,0,1)",
              [] {
                Random rng(803);
                Tally t;
                for (int s = 0; s < 20; ++s) {
                  const Params p{s == 0 ? Scalar(0) : rng.rational_avoiding({1}), 0, 1};
                  const auto inv = abelian_invariants(abelianization(p));
                  t.expect(inv.summand_count == 2 && !inv.units_finite_dimensional && !inv.connected,
                           [&] { return "wrong invariants at " + to_string(p); });
                }
                return t.outcome();
              }},
             {"quiver presentation of A(0,0,0)",
              [] {
                Tally t;
                const auto pres = monomial_abelianization(zero_downup_quiver());
                const std::vector<std::string> vars{"X_d", "X_u"};
                const std::vector<CommPoly> expected{CommPoly::monomial(vars, {2, 1}),
                                                     CommPoly::monomial(vars, {1, 2})};
                t.expect(pres.summands.size() == 1 && pres.summands[0].variables == vars,
                         [&] { return "unexpected presentation " + to_string(pres); });
                t.expect(pres.summands[0].relations == expected,
                         [&] { return "unexpected relations " + to_string(pres); });
                return t.outcome();
              }},
             {"quiver graded dimensions", [] { return check_quiver_graded(); }},
         });
       }},
      {"criterion 8: Lambda recursion", [] { return check_lambda(50, 20); }},
  };
}

}  // namespace downup::verify
