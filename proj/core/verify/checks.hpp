#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace downup::verify {

struct Outcome {
  bool passed = true;
  std::string detail;
};

struct Check {
  std::string name;
  std::function<Outcome()> run;
};

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
  double seconds;
};

/// Runs one check, timing it and turning an escaped exception into a failure.
CheckResult run_check(const Check& check);

/// Every named invariant of the library, in a fixed order.
std::vector<Check> property_checks();

/// Acceptance criteria 1 to 8, named "criterion N: ...".
std::vector<Check> acceptance_checks();

/// Counts cases and remembers the first failing one.
class Tally {
 public:
  void expect(bool ok, const std::function<std::string()>& describe) {
    ++cases_;
    if (!ok && !failure_) failure_ = describe();
  }
  void fail(std::string why) {
    ++cases_;
    if (!failure_) failure_ = std::move(why);
  }
  bool ok() const { return !failure_; }
  std::size_t cases() const { return cases_; }
  Outcome outcome(const std::string& note = {}) const {
    if (failure_) return {false, *failure_};
    return {true, std::to_string(cases_) + " cases" + (note.empty() ? "" : ", " + note)};
  }

 private:
  std::size_t cases_ = 0;
  std::optional<std::string> failure_;
};

// Parameterized suites shared by the property list and the acceptance criteria.
Outcome check_ring_axioms(std::size_t samples);
Outcome check_parse_print(std::size_t samples);
Outcome check_canonical_form(std::size_t samples);
Outcome check_idempotence(std::size_t samples);
Outcome check_congruence(std::size_t samples);
Outcome check_strategy_independence(std::size_t samples);
Outcome check_pbw_normal_words(std::size_t max_length);
Outcome check_downup_critical_pairs(std::size_t param_samples);
Outcome check_shipped_critical_pairs();
Outcome check_omega_annihilation(std::size_t param_samples);
Outcome check_omega_roundtrip(std::size_t samples, std::size_t max_degree);
Outcome check_ideal_power_closure(unsigned max_n, std::size_t samples);
Outcome check_bimod_formula(unsigned max_index, std::size_t alpha_samples, bool random_gamma);
Outcome check_omega_du_identity();
Outcome check_omega_squared_absorption(unsigned max_exponent, std::size_t param_samples);
Outcome check_omega_basis_all_gamma(std::size_t param_samples, std::size_t max_degree);
Outcome check_projection_homomorphism(std::size_t param_samples);
Outcome check_projection_kernel(std::size_t samples);
Outcome check_quantum_domain(std::size_t samples);
Outcome check_abelianization_functorial(std::size_t param_samples);
Outcome check_abelianization_graded(std::size_t param_samples, unsigned max_degree, bool any_beta);
Outcome check_commutative_confluence(std::size_t param_samples, unsigned max_degree);
Outcome check_complex_property(std::size_t param_samples);
Outcome check_euler_characteristic(std::size_t param_samples);
Outcome check_tor0_criterion(std::size_t param_samples);
Outcome check_functor_consistency(std::size_t samples);
Outcome check_mechanical_complex(std::size_t samples);
Outcome check_tor1_table(std::size_t min_pairs);
Outcome check_quiver_counts();
Outcome check_quiver_graded();
Outcome check_iso_reflexive_symmetric(std::size_t triples);
Outcome check_iso_soundness(std::size_t triples);
Outcome check_iso_completeness(std::size_t triples);
Outcome check_classifier_table();
Outcome check_lambda(std::size_t alpha_samples, unsigned m_max);

}  // namespace downup::verify
