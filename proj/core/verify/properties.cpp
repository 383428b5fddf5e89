#include <chrono>
#include <exception>
#include <set>

#include "checks.hpp"
#include "downup/classify.hpp"
#include "downup/downup.hpp"
#include "downup/error.hpp"
#include "downup/homology.hpp"
#include "downup/quiver.hpp"
#include "downup/quotients.hpp"
#include "downup/rewrite.hpp"
#include "oracles.hpp"
#include "random.hpp"

namespace downup::verify {

using testing::Random;

CheckResult run_check(const Check& check) {
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = check.run();
  } catch (const std::exception& e) {
    outcome = {false, std::string("exception: ") + e.what()};
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  return {check.name, outcome.passed, outcome.detail, elapsed.count()};
}

namespace {

constexpr Letter kD = 0, kU = 1;              // {d,u}
constexpr Letter kOd = 0, kOw = 1, kOu = 2;   // {d,w,u}

std::string show(const NcPoly& p) { return to_string(p); }

Word omega_word(unsigned i, unsigned j, unsigned l) {
  return Word::power(kOu, i) * Word::power(kOw, j) * Word::power(kOd, l);
}

NcPoly omega_monomial(unsigned i, unsigned j, unsigned l, const Scalar& c = 1) {
  return NcPoly::monomial(omega_alphabet(), omega_word(i, j, l), c);
}

Params alpha_gamma(const Scalar& alpha, const Scalar& gamma) { return {alpha, 0, gamma}; }

/// The three rule sets the library ships, for random parameters.
std::vector<RuleSet> shipped_rule_sets(Random& rng) {
  std::vector<RuleSet> out;
  out.push_back(downup_rules(rng.params()));
  out.push_back(omega_rules(rng.params_beta_zero()));
  out.push_back(quantum_rules(QuantumAlgebra(rng.nonzero_rational(), rng.integer(0, 1))));
  return out;
}

NcPoly relation_poly(const RewriteRule& rule, const AlphabetPtr& a) {
  return NcPoly::monomial(a, rule.lhs) - rule.rhs;
}

}  // namespace

// --- expr ------------------------------------------------------------------

Outcome check_ring_axioms(std::size_t samples) {
  Random rng(101);
  Tally t;
  const auto a = downup_alphabet();
  for (std::size_t s = 0; s < samples; ++s) {
    const NcPoly p = rng.poly(a, 3), q = rng.poly(a, 3), r = rng.poly(a, 3);
    t.expect((p * q) * r == p * (q * r), [&] { return "associativity fails at p = " + show(p); });
    t.expect(p * (q + r) == p * q + p * r, [&] { return "left distributivity fails at p = " + show(p); });
    t.expect((p + q) * r == p * r + q * r, [&] { return "right distributivity fails at p = " + show(p); });
    t.expect(p + q == q + p, [&] { return "addition not commutative at p = " + show(p); });
    t.expect((p - p).is_zero(), [&] { return "p - p nonzero at p = " + show(p); });
  }
  return t.outcome();
}

Outcome check_parse_print(std::size_t samples) {
  Random rng(102);
  Tally t;
  for (const auto& a : {downup_alphabet(), omega_alphabet(), quantum_alphabet()}) {
    for (std::size_t s = 0; s < samples; ++s) {
      const NcPoly p = rng.poly(a, 6, 5);
      const std::string text = to_string(p);
      t.expect(parse(text, a) == p, [&] { return "parse(print(p)) != p for " + text; });
    }
    t.expect(parse(to_string(NcPoly(a)), a).is_zero(), [] { return "zero does not roundtrip"; });
  }
  return t.outcome();
}

Outcome check_canonical_form(std::size_t samples) {
  Random rng(103);
  Tally t;
  const auto a = downup_alphabet();
  for (std::size_t s = 0; s < samples; ++s) {
    const NcPoly p = rng.poly(a, 4), q = rng.poly(a, 4);
    const NcPoly back = (p + q) - q;
    t.expect(back == p && back.terms() == p.terms(), [&] { return "(p+q)-q differs from p = " + show(p); });
    t.expect((p == q) == (p.terms() == q.terms()), [&] { return "equality disagrees with tables"; });
    const NcPoly commutator = p * q - q * p;
    for (const auto& [w, c] : commutator.terms())
      t.expect(!is_zero(c), [&] { return "stored zero coefficient"; });
  }
  return t.outcome();
}

// --- rewrite ---------------------------------------------------------------

Outcome check_idempotence(std::size_t samples) {
  Random rng(201);
  Tally t;
  for (std::size_t s = 0; s < samples; ++s)
    for (const auto& rules : shipped_rule_sets(rng)) {
      const NcPoly p = rng.poly(rules.alphabet(), 8);
      const NcPoly once = reduce(p, rules);
      t.expect(reduce(once, rules) == once, [&] { return "reduce not idempotent on " + show(p); });
      for (const auto& [w, c] : once.terms())
        t.expect(is_normal(w, rules), [&] { return "reduce left a reducible word in " + show(once); });
    }
  return t.outcome();
}

Outcome check_congruence(std::size_t samples) {
  Random rng(202);
  Tally t;
  for (std::size_t s = 0; s < samples; ++s)
    for (const auto& rules : shipped_rule_sets(rng)) {
      const NcPoly p = rng.poly(rules.alphabet(), 4), q = rng.poly(rules.alphabet(), 4);
      const NcPoly rp = reduce(p, rules), rq = reduce(q, rules);
      t.expect(reduce(p * q, rules) == reduce(rp * rq, rules),
               [&] { return "product congruence fails for " + show(p) + " and " + show(q); });
      t.expect(reduce(p + q, rules) == reduce(rp + rq, rules),
               [&] { return "sum congruence fails for " + show(p) + " and " + show(q); });
    }
  return t.outcome();
}

Outcome check_strategy_independence(std::size_t samples) {
  Random rng(203);
  Tally t;
  const SiteChooser random_site = [&](std::span<const RewriteSite> sites) {
    return static_cast<std::size_t>(rng.integer(0, static_cast<int>(sites.size()) - 1));
  };
  const SiteChooser last_site = [](std::span<const RewriteSite> sites) { return sites.size() - 1; };
  for (std::size_t s = 0; s < samples; ++s)
    for (const auto& rules : shipped_rule_sets(rng)) {
      const NcPoly p = rng.poly(rules.alphabet(), 8);
      const NcPoly expected = reduce(p, rules);
      t.expect(reduce(p, rules, last_site) == expected, [&] { return "order dependence on " + show(p); });
      for (int k = 0; k < 3; ++k)
        t.expect(reduce(p, rules, random_site) == expected,
                 [&] { return "random order changes the normal form of " + show(p); });
    }
  return t.outcome();
}

Outcome check_pbw_normal_words(std::size_t max_length) {
  Tally t;
  const auto expected_list = oracle::pbw_words(max_length);
  const std::set<Word> expected(expected_list.begin(), expected_list.end());
  t.expect(expected.size() == expected_list.size(), [] { return "oracle produced duplicates"; });
  Random rng(204);
  const auto a = downup_alphabet();
  for (int s = 0; s < 3; ++s) {
    const RuleSet rules = downup_rules(s == 0 ? Params{1, 1, 1} : rng.params());
    std::size_t normal = 0;
    for (const auto& w : oracle::all_words(2, max_length)) {
      const bool is_pbw = expected.count(w) > 0;
      const bool nf = is_normal(w, rules);
      normal += nf;
      t.expect(is_pbw == nf, [&] {
        return "word " + to_string(w, *a) + (nf ? " is normal but not PBW" : " is PBW but not normal");
      });
    }
    t.expect(normal == expected.size(), [&] { return "normal word count mismatch"; });
  }
  return t.outcome(std::to_string(expected.size()) + " normal words");
}

Outcome check_downup_critical_pairs(std::size_t param_samples) {
  Random rng(205);
  Tally t;
  std::size_t pairs_seen = 0;
  const auto a = downup_alphabet();
  for (std::size_t s = 0; s < param_samples; ++s) {
    const Params p = s % 2 ? rng.params_beta_nonzero() : rng.params();
    const auto pairs = critical_pairs(downup_rules(p), 6);
    pairs_seen += pairs.size();
    bool has_d2u2 = false;
    for (const auto& cp : pairs) {
      has_d2u2 = has_d2u2 || cp.overlap == Word{kD, kD, kU, kU};
      t.expect(cp.residual.is_zero(), [&] {
        return "residual " + show(cp.residual) + " at " + to_string(cp.overlap, *a) + " for " + to_string(p);
      });
    }
    t.expect(has_d2u2, [&] { return "overlap d^2u^2 missing for " + to_string(p); });
  }
  return t.outcome(std::to_string(pairs_seen) + " ambiguities");
}

Outcome check_shipped_critical_pairs() {
  Random rng(206);
  Tally t;
  for (int s = 0; s < 20; ++s) {
    const auto omega = critical_pairs(omega_rules(rng.params_beta_zero()), 6);
    t.expect(!omega.empty() && all_resolve(omega), [] { return "omega rules not confluent up to degree 6"; });
    const auto quantum = critical_pairs(quantum_rules(QuantumAlgebra(rng.nonzero_rational(), s % 2)), 4);
    t.expect(quantum.empty(), [] { return "quantum rule reported an overlap"; });
  }
  return t.outcome();
}

// --- downup ----------------------------------------------------------------

Outcome check_omega_annihilation(std::size_t param_samples) {
  Random rng(301);
  Tally t;
  const auto a = downup_alphabet();
  const NcPoly d = NcPoly::letter(a, "d"), u = NcPoly::letter(a, "u");
  for (std::size_t s = 0; s < param_samples; ++s) {
    const Params p = alpha_gamma(rng.rational(), rng.rational());
    const NcPoly w = omega_element(p);
    t.expect(pbw_normal_form(d * w, p).is_zero(), [&] { return "d*omega != 0 for " + to_string(p); });
    t.expect(pbw_normal_form(w * u, p).is_zero(), [&] { return "omega*u != 0 for " + to_string(p); });
    t.expect(!pbw_normal_form(w, p).is_zero(), [&] { return "omega vanishes for " + to_string(p); });
  }
  return t.outcome();
}

Outcome check_omega_roundtrip(std::size_t samples, std::size_t max_degree) {
  Random rng(302);
  Tally t;
  const auto a = downup_alphabet();
  for (std::size_t s = 0; s < samples; ++s) {
    const Params p = alpha_gamma(rng.rational(), rng.rational());
    const NcPoly x = rng.poly(a, max_degree);
    const PBWElem e = pbw_normal_form(x, p);
    t.expect(omega_to_pbw(pbw_to_omega(e, p), p) == e,
             [&] { return "omega_to_pbw(pbw_to_omega(x)) != x for " + show(x) + ", " + to_string(p); });
    OmegaElem o;
    for (int k = 0; k < 3; ++k) {
      const unsigned j = static_cast<unsigned>(rng.integer(0, static_cast<int>(max_degree) / 2));
      const unsigned rest = static_cast<unsigned>(max_degree) - 2 * j;
      const unsigned i = static_cast<unsigned>(rng.integer(0, static_cast<int>(rest)));
      const unsigned l = static_cast<unsigned>(rng.integer(0, static_cast<int>(rest - i)));
      o.add({i, j, l}, rng.nonzero_rational(9));
    }
    t.expect(pbw_to_omega(omega_to_pbw(o, p), p) == o,
             [&] { return "pbw_to_omega(omega_to_pbw(o)) != o for " + to_string(o); });
  }
  return t.outcome();
}

Outcome check_ideal_power_closure(unsigned max_n, std::size_t samples) {
  Random rng(303);
  Tally t;
  std::size_t nonzero = 0;
  for (unsigned n = 1; n <= max_n; ++n)
    for (std::size_t s = 0; s < samples; ++s) {
      const Params p = alpha_gamma(rng.rational(), rng.rational());
      OmegaElem product = OmegaElem::single({0, 0, 0});
      for (unsigned f = 0; f < n; ++f) {
        OmegaElem factor;
        for (int k = 0; k < 2; ++k)
          factor.add({static_cast<unsigned>(rng.integer(0, 1)), static_cast<unsigned>(rng.integer(1, 2)),
                      static_cast<unsigned>(rng.integer(0, 1))},
                     rng.nonzero_rational(5));
        product = omega_product(product, factor, p);
      }
      nonzero += !product.is_zero();
      t.expect(ideal_power_membership(product, n),
               [&] { return "product of " + std::to_string(n) + " ideal elements escapes the power: " +
                            to_string(product); });
      t.expect(ideal_power_membership(to_poly(product), n, p) == true,
               [&] { return "membership disagrees between coordinate and polynomial inputs"; });
    }
  return t.outcome(std::to_string(nonzero) + " nonzero products");
}

Outcome check_bimod_formula(unsigned max_index, std::size_t alpha_samples, bool random_gamma) {
  Random rng(random_gamma ? 305 : 304);
  Tally t;
  const auto oa = omega_alphabet();
  const NcPoly d = NcPoly::letter(oa, "d"), u = NcPoly::letter(oa, "u");
  for (std::size_t s = 0; s < alpha_samples; ++s) {
    const Scalar alpha = rng.rational_avoiding({0, 1});
    const Params p = alpha_gamma(alpha, random_gamma ? rng.rational() : Scalar(1));
    for (unsigned i = 0; i <= max_index; ++i)
      for (unsigned l = 0; l <= max_index; ++l) {
        const NcPoly x = omega_monomial(i, 1, l);
        t.expect(bimod_class(x * u, p) == bimod_action_formula(i, l, Side::Right, p), [&] {
          return "right action mismatch at (" + std::to_string(i) + "," + std::to_string(l) + ") " +
                 to_string(p);
        });
        t.expect(bimod_class(d * x, p) == bimod_action_formula(i, l, Side::Left, p), [&] {
          return "left action mismatch at (" + std::to_string(i) + "," + std::to_string(l) + ") " +
                 to_string(p);
        });
      }
  }
  return t.outcome();
}

Outcome check_omega_du_identity() {
  Random rng(306);
  Tally t;
  const auto a = downup_alphabet();
  const NcPoly du = NcPoly::monomial(a, Word{kD, kU});
  OmegaElem expected;
  expected.add({0, 2, 0}, 1);
  expected.add({0, 1, 0}, 1);
  for (int s = 0; s < 20; ++s) {
    const Params p = alpha_gamma(s == 0 ? Scalar(2) : rng.rational(), 1);
    const NcPoly w = omega_element(p);
    t.expect(pbw_normal_form(w * du, p) == pbw_normal_form(w * w + w, p),
             [&] { return "omega du != omega^2 + omega in the down-up algebra " + to_string(p); });
    t.expect(omega_coordinates(omega_monomial(0, 1, 0) * parse("d u", omega_alphabet()), p) == expected,
             [&] { return "omega coordinates of omega du wrong for " + to_string(p); });
  }
  return t.outcome();
}

Outcome check_omega_squared_absorption(unsigned max_exponent, std::size_t param_samples) {
  Random rng(307);
  Tally t;
  for (std::size_t s = 0; s < param_samples; ++s) {
    const Params p = alpha_gamma(rng.rational(), rng.rational());
    for (unsigned r = 0; r <= max_exponent; ++r)
      for (unsigned q = 0; q <= max_exponent; ++q) {
        const NcPoly x = omega_monomial(0, 1, r) * omega_monomial(q, 1, 0);
        const OmegaElem c = omega_coordinates(x, p);
        for (const auto& [idx, v] : c.terms())
          t.expect(idx[0] == 0 && idx[2] == 0 && idx[1] >= 2, [&] {
            return "omega d^" + std::to_string(r) + " u^" + std::to_string(q) + " omega has term " +
                   to_string(c);
          });
      }
  }
  return t.outcome();
}

Outcome check_omega_basis_all_gamma(std::size_t param_samples, std::size_t max_degree) {
  Random rng(308);
  Tally t;
  const auto a = downup_alphabet();
  for (std::size_t s = 0; s < param_samples; ++s) {
    // gamma deliberately away from 1
    const Params p = alpha_gamma(rng.rational(), s == 0 ? Scalar(0) : rng.rational_avoiding({1}));
    std::vector<std::map<std::array<unsigned, 3>, Scalar>> rows;
    for (unsigned j = 0; 2 * j <= max_degree; ++j)
      for (unsigned i = 0; i + 2 * j <= max_degree; ++i)
        for (unsigned l = 0; i + 2 * j + l <= max_degree; ++l) {
          // substitute omega by hand and normalize with the down-up rules only
          const NcPoly x = NcPoly::monomial(a, Word::power(kU, i)) * pow(omega_element(p), j) *
                           NcPoly::monomial(a, Word::power(kD, l));
          const auto e = pbw_normal_form(x, p);
          rows.emplace_back(e.terms().begin(), e.terms().end());
        }
    const std::size_t count = rows.size();
    const std::size_t rank = oracle::span_rank(std::move(rows));
    t.expect(rank == count, [&] { return "omega monomials dependent for " + to_string(p); });
    t.expect(count == oracle::pbw_words(max_degree).size(), [] { return "omega and PBW counts differ"; });
    for (int k = 0; k < 5; ++k) {
      const NcPoly z = rng.poly(a, 3, 2) * omega_element(p) * rng.poly(a, 3, 2);
      t.expect(ideal_power_membership(z, 1, p), [&] { return "a omega b outside span for " + to_string(p); });
    }
  }
  return t.outcome();
}

// --- quotients -------------------------------------------------------------

Outcome check_projection_homomorphism(std::size_t param_samples) {
  Random rng(401);
  Tally t;
  const auto a = downup_alphabet();
  for (std::size_t s = 0; s < param_samples; ++s) {
    const Params p = alpha_gamma(rng.nonzero_rational(), Scalar(static_cast<int>(s % 2)));
    const QuantumAlgebra qa = omega_quotient(p);
    const NcPoly x = rng.poly(a, 4), y = rng.poly(a, 4);
    t.expect(project(x * y, p) == q_mul(project(x, p), project(y, p), qa),
             [&] { return "projection not multiplicative on " + show(x) + ", " + show(y); });
    t.expect(project(x + y, p) == project(x, p) + project(y, p), [&] { return "projection not additive"; });
  }
  return t.outcome();
}

Outcome check_projection_kernel(std::size_t samples) {
  Random rng(402);
  Tally t;
  const auto a = downup_alphabet();
  std::size_t in_kernel = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    const Params p = alpha_gamma(rng.nonzero_rational(), Scalar(static_cast<int>(s % 2)));
    NcPoly x(a);
    switch (s % 3) {
      case 0: x = rng.poly(a, 6); break;
      case 1: x = rng.poly(a, 2, 2) * omega_element(p) * rng.poly(a, 2, 2); break;
      default: x = rng.poly(a, 2, 2) * omega_element(p) * rng.poly(a, 2, 2) + rng.poly(a, 3, 1); break;
    }
    const bool zero = project(x, p).is_zero();
    in_kernel += zero;
    t.expect(zero == ideal_power_membership(x, 1, p),
             [&] { return "kernel and ideal disagree on " + show(x) + " for " + to_string(p); });
  }
  return t.outcome(std::to_string(in_kernel) + " in the kernel");
}

Outcome check_quantum_domain(std::size_t samples) {
  Random rng(403);
  Tally t;
  auto random_elem = [&] {
    QElem e;
    while (e.is_zero())
      for (int k = 0; k < 3; ++k) {
        const unsigned i = static_cast<unsigned>(rng.integer(0, 6));
        e.add({i, static_cast<unsigned>(rng.integer(0, 6 - static_cast<int>(i)))}, rng.rational(9));
      }
    return e;
  };
  for (std::size_t s = 0; s < samples; ++s) {
    const QuantumAlgebra qa(rng.nonzero_rational(), static_cast<int>(s % 2));
    const QElem x = random_elem(), y = random_elem();
    t.expect(!q_mul(x, y, qa).is_zero(), [&] { return "zero divisors " + to_string(x) + ", " + to_string(y); });
  }
  return t.outcome();
}

namespace {

std::vector<Params> abelian_grid(Random& rng, std::size_t n, bool gamma_zero, bool any_beta) {
  std::vector<Params> out;
  for (std::size_t s = 0; s < n; ++s) {
    Params p{rng.rational(), any_beta ? rng.rational() : Scalar(0), gamma_zero ? Scalar(0) : rng.rational()};
    if (s % 4 == 3) p.alpha = 1 - p.beta;  // c = 0
    out.push_back(p);
  }
  return out;
}

std::vector<CommPoly> commuted_relations(const Params& p) {
  const auto a = downup_alphabet();
  std::vector<CommPoly> out;
  const RuleSet rules = downup_rules(p);
  for (const auto& rule : rules.rules()) out.push_back(commutative_image(relation_poly(rule, a)));
  return out;
}

}  // namespace

Outcome check_abelianization_functorial(std::size_t param_samples) {
  Random rng(404);
  Tally t;
  std::vector<Params> grid = abelian_grid(rng, param_samples, false, true);
  const auto zero_gamma = abelian_grid(rng, param_samples / 2, true, true);
  grid.insert(grid.end(), zero_gamma.begin(), zero_gamma.end());
  grid.push_back({1, 0, 1});
  grid.push_back({0, 0, 0});
  for (const auto& p : grid) {
    const auto pres = abelianization(p);
    for (const auto& r : commuted_relations(p))
      t.expect(vanishes_in(r, pres), [&] {
        return "relation " + to_string(r) + " survives in " + to_string(pres) + " for " + to_string(p);
      });
  }
  return t.outcome();
}

Outcome check_abelianization_graded(std::size_t param_samples, unsigned max_degree, bool any_beta) {
  Random rng(any_beta ? 406 : 405);
  Tally t;
  for (const auto& p : abelian_grid(rng, param_samples, true, any_beta)) {
    const auto emitted = graded_dimensions(abelianization(p), max_degree);
    const auto brute = oracle::quotient_dimensions(commuted_relations(p), 2, max_degree);
    t.expect(emitted == brute, [&] { return "graded dimensions differ for " + to_string(p); });
  }
  return t.outcome();
}

Outcome check_commutative_confluence(std::size_t param_samples, unsigned max_degree) {
  Random rng(407);
  Tally t;
  auto grid = abelian_grid(rng, param_samples, false, true);
  const auto zero_gamma = abelian_grid(rng, param_samples, true, true);
  grid.insert(grid.end(), zero_gamma.begin(), zero_gamma.end());
  for (const auto& p : grid)
    for (const auto& s : abelianization(p).summands)
      t.expect(CommRewriter(s).confluent_up_to(max_degree),
               [&] { return "summand " + to_string(s) + " not confluent for " + to_string(p); });
  for (const auto& s : monomial_abelianization(zero_downup_quiver()).summands)
    t.expect(CommRewriter(s).confluent_up_to(max_degree), [] { return "quiver summand not confluent"; });
  return t.outcome();
}

// --- homology --------------------------------------------------------------

Outcome check_complex_property(std::size_t param_samples) {
  Random rng(501);
  Tally t;
  using RB = ResolutionBasis;
  for (std::size_t s = 0; s < param_samples; ++s) {
    const Params p = s % 2 ? rng.params_beta_nonzero() : rng.params();
    for (RB b : {RB::DDU, RB::DUU})
      t.expect(apply_d1(apply_d2(BimoduleElement::generator(b), p), p).is_zero(),
               [&] { return "d1 d2 (" + to_string(b) + ") != 0 for " + to_string(p); });
    const auto top = apply_d2(apply_d3(BimoduleElement::generator(RB::DDUU), p), p);
    t.expect(top.is_zero(), [&] { return "d2 d3 != 0 for " + to_string(p) + ": " + to_string(top); });
  }
  return t.outcome();
}

namespace {

std::vector<Params> tor_grid(Random& rng, std::size_t n) {
  std::vector<Params> out{{1, 0, 1}, {2, 0, 1}, {0, 0, 0}, {2, 0, 0}, {1, 0, 0}};
  while (out.size() < n) {
    Params p = alpha_gamma(rng.rational(), out.size() % 2 ? Scalar(0) : rng.nonzero_rational());
    if (out.size() % 5 == 0) p.alpha = 1;
    out.push_back(p);
  }
  return out;
}

}  // namespace

Outcome check_euler_characteristic(std::size_t param_samples) {
  Random rng(502);
  Tally t;
  auto check = [&](const TorProfile& prof, const std::string& where) {
    const int euler = static_cast<int>(prof.dims[0]) - static_cast<int>(prof.dims[1]) +
                      static_cast<int>(prof.dims[2]) - static_cast<int>(prof.dims[3]);
    t.expect(euler == 0 && prof.dims[0] <= 1, [&] { return "Euler characteristic fails at " + where; });
  };
  for (const auto& p : tor_grid(rng, param_samples)) {
    const auto mods = enumerate_one_dim(p, 6);
    for (const auto& m1 : mods)
      for (const auto& m2 : mods) check(tor_profile(m1, m2, p), to_string(p));
  }
  for (std::size_t s = 0; s < param_samples; ++s) {
    const Params p = rng.params_beta_nonzero();
    const auto mods = enumerate_one_dim(p, 4);
    for (const auto& m1 : mods)
      for (const auto& m2 : mods) check(tor_profile_mechanical(m1, m2, p), to_string(p));
  }
  return t.outcome();
}

Outcome check_tor0_criterion(std::size_t param_samples) {
  Random rng(503);
  Tally t;
  for (const auto& p : tor_grid(rng, param_samples)) {
    const auto mods = enumerate_one_dim(p, 6);
    for (const auto& m1 : mods)
      for (const auto& m2 : mods)
        t.expect((tor_profile(m1, m2, p).dims[0] == 1) == (m1 == m2),
                 [&] { return "Tor_0 criterion fails for " + to_string(p); });
  }
  return t.outcome();
}

Outcome check_functor_consistency(std::size_t samples) {
  Random rng(504);
  Tally t;
  const auto grid = tor_grid(rng, samples);
  for (std::size_t s = 0; s < samples; ++s) {
    const Params& p = grid[s];
    const auto mods = enumerate_one_dim(p, 4, 1000 + s);
    const auto& m1 = mods[static_cast<std::size_t>(rng.integer(0, static_cast<int>(mods.size()) - 1))];
    const auto& m2 = mods[static_cast<std::size_t>(rng.integer(0, static_cast<int>(mods.size()) - 1))];
    t.expect(functor_complex(m1, m2, p) == closed_form_complex(m1, m2, p),
             [&] { return "mechanical and closed-form matrices differ for " + to_string(p); });
  }
  return t.outcome();
}

Outcome check_mechanical_complex(std::size_t samples) {
  Random rng(505);
  Tally t;
  for (std::size_t s = 0; s < samples; ++s) {
    const Params p = rng.params_beta_nonzero();
    const auto mods = enumerate_one_dim(p, 3, 2000 + s);
    for (const auto& m1 : mods)
      for (const auto& m2 : mods) {
        const auto c = functor_complex(m1, m2, p);
        t.expect(c.f0 * c.f1 == Matrix(1, 2) && c.f1 * c.f2 == Matrix(2, 1),
                 [&] { return "functor complex is not a complex for " + to_string(p); });
      }
  }
  return t.outcome();
}

// --- quiver ----------------------------------------------------------------

Outcome check_quiver_counts() {
  Tally t;
  const auto zero = zero_downup_quiver();
  const auto table = arrow_tor_table(zero);
  t.expect(monomial_abelianization(zero).summands.size() == zero.quiver().vertices().size(),
           [] { return "summand count differs from vertex count"; });
  unsigned best = 0;
  for (const auto& [key, n] : table) best = std::max(best, n);
  t.expect(best == zero.quiver().arrows().size() && best == 2, [] { return "one-vertex maximum is not 2"; });

  Random rng(601);
  for (int s = 0; s < 40; ++s) {
    const int nv = rng.integer(1, 4);
    std::vector<std::string> vertices;
    for (int v = 0; v < nv; ++v) vertices.push_back("v" + std::to_string(v));
    std::vector<Arrow> arrows;
    const int na = rng.integer(0, 6);
    for (int k = 0; k < na; ++k)
      arrows.push_back({"a" + std::to_string(k), vertices[static_cast<std::size_t>(rng.integer(0, nv - 1))],
                        vertices[static_cast<std::size_t>(rng.integer(0, nv - 1))]});
    const MonomialAlgebra alg(Quiver(vertices, arrows), {});
    t.expect(monomial_abelianization(alg).summands.size() == vertices.size(),
             [] { return "summand count differs from vertex count"; });
    unsigned total = 0, max_entry = 0;
    for (const auto& [key, n] : arrow_tor_table(alg)) {
      total += n;
      max_entry = std::max(max_entry, n);
    }
    t.expect(total == arrows.size(), [] { return "arrow table does not add up to the arrow count"; });
    if (nv == 1)
      t.expect(max_entry == arrows.size(), [] { return "one-vertex maximum differs from the arrow count"; });
  }
  return t.outcome();
}

Outcome check_quiver_graded() {
  Tally t;
  const auto pres = monomial_abelianization(zero_downup_quiver());
  std::vector<CommPoly> gens = pres.summands.at(0).relations;
  const auto brute = oracle::quotient_dimensions(gens, 2, 6);
  t.expect(graded_dimensions(pres, 6) == brute, [] { return "quiver graded dimensions differ from brute force"; });
  t.expect(graded_dimensions(abelianization({0, 0, 0}), 6) == brute,
           [] { return "quiver and down-up abelianizations of A(0,0,0) differ"; });
  return t.outcome();
}

// --- classify --------------------------------------------------------------

namespace {

Params grid_triple(Random& rng, bool beta_zero) {
  static const std::vector<Scalar> values{-2, -1, Scalar(-1, 2), 0, Scalar(1, 2), 1, 2, 3};
  auto pick = [&] { return values[static_cast<std::size_t>(rng.integer(0, static_cast<int>(values.size()) - 1))]; };
  return {pick(), beta_zero ? Scalar(0) : pick(), Scalar(rng.integer(0, 2))};
}

/// A partner likely to be isomorphic to p: rescaled gamma, or the CM00 swap.
Params partner(const Params& p, Random& rng) {
  Params q = p;
  if (!is_zero(q.gamma)) q.gamma *= rng.nonzero_rational(5);
  if (!is_zero(p.beta) && rng.integer(0, 1)) {
    q.alpha = -p.alpha / p.beta;
    q.beta = 1 / p.beta;
  }
  return q;
}

}  // namespace

Outcome check_iso_reflexive_symmetric(std::size_t triples) {
  Random rng(701);
  Tally t;
  for (std::size_t s = 0; s < triples; ++s) {
    const Params p = grid_triple(rng, s % 3 == 0);
    t.expect(iso_verdict(p, p).isomorphic, [&] { return "not reflexive at " + to_string(p); });
    const Params q = s % 2 ? partner(p, rng) : grid_triple(rng, s % 3 == 0);
    const auto pq = iso_verdict(p, q), qp = iso_verdict(q, p);
    t.expect(pq.isomorphic == qp.isomorphic && pq.rule == qp.rule,
             [&] { return "not symmetric at " + to_string(p) + " vs " + to_string(q); });
  }
  return t.outcome();
}

Outcome check_iso_soundness(std::size_t triples) {
  Random rng(702);
  Tally t;
  std::size_t positives = 0;
  for (std::size_t s = 0; s < triples; ++s) {
    const Params p = grid_triple(rng, true);
    const Params q = s % 2 ? partner(p, rng) : grid_triple(rng, true);
    if (!iso_verdict(p, q).isomorphic) continue;
    ++positives;
    const auto report = invariant_report(p, q, 12);
    t.expect(!report.certifies_non_isomorphism(),
             [&] { return "isomorphic pair with an invariant mismatch: " + to_string(p) + " vs " + to_string(q); });
  }
  return t.outcome(std::to_string(positives) + " isomorphic pairs");
}

Outcome check_iso_completeness(std::size_t triples) {
  Random rng(703);
  Tally t;
  std::size_t separated = 0;
  for (std::size_t s = 0; s < triples; ++s) {
    const Params p = grid_triple(rng, true), q = grid_triple(rng, true);
    if (iso_verdict(p, q).isomorphic) continue;
    const bool differ = type_of(p) != type_of(q) || tor1_bound(p, 12) != tor1_bound(q, 12) ||
                        abelian_invariants(abelianization(p)).connected !=
                            abelian_invariants(abelianization(q)).connected;
    if (!differ) continue;
    ++separated;
    t.expect(invariant_report(p, q, 12).certifies_non_isomorphism(),
             [&] { return "report misses a separating invariant: " + to_string(p) + " vs " + to_string(q); });
  }
  return t.outcome(std::to_string(separated) + " separated pairs");
}

Outcome check_lambda(std::size_t alpha_samples, unsigned m_max) {
  Random rng(704);
  Tally t;
  for (std::size_t s = 0; s < alpha_samples; ++s) {
    const Scalar alpha = s == 0 ? Scalar(2) : rng.rational_avoiding({0, 1, -1});
    const auto seq = lambda_sequence(alpha, m_max);
    t.expect(seq.size() == m_max + 1 && seq[0] == alpha, [&] { return "Lambda_0 != alpha"; });
    Scalar prev = alpha;
    for (unsigned m = 1; m < seq.size(); ++m) {
      // the recursion with its printed quotient, not the geometric sum
      const Scalar expected = alpha * prev * (alpha - 1) / (power(alpha, m + 1) - 1);
      t.expect(seq[m] == expected && !is_zero(seq[m]),
               [&] { return "Lambda_" + std::to_string(m) + " wrong for alpha = " + to_string(alpha); });
      prev = expected;
    }
  }
  t.expect(lambda_sequence(2, 1).at(1) == Scalar(4, 3), [] { return "Lambda_1(2) != 4/3"; });
  for (int bad : {0, 1, -1}) {
    bool threw = false;
    try {
      lambda_sequence(bad, 3);
    } catch (const DomainError&) {
      threw = true;
    }
    t.expect(threw, [&] { return "no domain error at alpha = " + std::to_string(bad); });
  }
  return t.outcome();
}

std::vector<Check> property_checks() {
  return {
      {"expr: ring axioms", [] { return check_ring_axioms(200); }},
      {"expr: parse after print is the identity", [] { return check_parse_print(100); }},
      {"expr: canonical sparse tables", [] { return check_canonical_form(100); }},
      {"rewrite: idempotence", [] { return check_idempotence(60); }},
      {"rewrite: congruence", [] { return check_congruence(60); }},
      {"rewrite: strategy independence", [] { return check_strategy_independence(40); }},
      {"rewrite: normal words are u^i(du)^j d^k", [] { return check_pbw_normal_words(8); }},
      {"rewrite: down-up ambiguities resolve", [] { return check_downup_critical_pairs(50); }},
      {"rewrite: omega and quantum ambiguities", [] { return check_shipped_critical_pairs(); }},
      {"downup: d omega = omega u = 0", [] { return check_omega_annihilation(50); }},
      {"downup: omega basis roundtrip", [] { return check_omega_roundtrip(200, 8); }},
      {"downup: omega^n closure", [] { return check_ideal_power_closure(4, 15); }},
      {"downup: bimodule action formula (gamma = 1)", [] { return check_bimod_formula(6, 20, false); }},
      {"downup: bimodule action formula (any gamma)", [] { return check_bimod_formula(6, 10, true); }},
      {"downup: omega du = omega^2 + omega", [] { return check_omega_du_identity(); }},
      {"downup: omega d^r u^s omega absorption", [] { return check_omega_squared_absorption(5, 5); }},
      {"downup: omega basis for every gamma", [] { return check_omega_basis_all_gamma(12, 7); }},
      {"quotients: projection is an algebra map", [] { return check_projection_homomorphism(50); }},
      {"quotients: projection kernel is <omega>", [] { return check_projection_kernel(90); }},
      {"quotients: quantum algebras are domains", [] { return check_quantum_domain(100); }},
      {"quotients: abelianization kills the relations", [] { return check_abelianization_functorial(40); }},
      {"quotients: graded dimensions vs brute force", [] { return check_abelianization_graded(30, 6, true); }},
      {"quotients: commutative rewriter confluence", [] { return check_commutative_confluence(12, 8); }},
      {"homology: complex property", [] { return check_complex_property(50); }},
      {"homology: Euler characteristic", [] { return check_euler_characteristic(20); }},
      {"homology: Tor_0 criterion", [] { return check_tor0_criterion(20); }},
      {"homology: functor consistency", [] { return check_functor_consistency(20); }},
      {"homology: mechanical complex for beta != 0", [] { return check_mechanical_complex(20); }},
      {"quiver: arrow counts", [] { return check_quiver_counts(); }},
      {"quiver: graded dimensions of A(0,0,0)", [] { return check_quiver_graded(); }},
      {"classify: reflexive and symmetric", [] { return check_iso_reflexive_symmetric(200); }},
      {"classify: soundness of invariant reports", [] { return check_iso_soundness(120); }},
      {"classify: completeness of invariant reports", [] { return check_iso_completeness(120); }},
      {"classify: lambda sequence", [] { return check_lambda(50, 20); }},
  };
}

}  // namespace downup::verify
