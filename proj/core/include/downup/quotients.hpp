#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "downup/downup.hpp"
#include "downup/expr.hpp"
#include "downup/rewrite.hpp"
#include "downup/sparse_table.hpp"

namespace downup {

// --- quantum plane and quantum Weyl algebra --------------------------------

/// K<x,y>/(yx - alpha xy - constant): the quantum plane for constant 0, the
/// quantum Weyl algebra for constant 1.
class QuantumAlgebra {
 public:
  /// Throws DomainError(UnsupportedParams) when alpha = 0.
  QuantumAlgebra(Scalar alpha, Scalar constant);

  static QuantumAlgebra plane(const Scalar& alpha) { return {alpha, 0}; }
  static QuantumAlgebra weyl(const Scalar& alpha) { return {alpha, 1}; }

  const Scalar& alpha() const noexcept { return alpha_; }
  const Scalar& constant() const noexcept { return constant_; }

 private:
  Scalar alpha_;
  Scalar constant_;
};

struct QuantumBasis;
/// Coordinates (i, l) of x^i y^l.
using QElem = SparseTable<QuantumBasis, 2>;

/// {y, x} with y > x, so that yx is the leading word of the relation.
AlphabetPtr quantum_alphabet();
RuleSet quantum_rules(const QuantumAlgebra& qa);

QElem q_normal_form(const NcPoly& p, const QuantumAlgebra& qa);
NcPoly to_poly(const QElem& e);
QElem q_mul(const QElem& a, const QElem& b, const QuantumAlgebra& qa);
std::string to_string(const QElem& e);

/// The quotient A/<w> for beta = 0, alpha != 0, gamma in {0, 1}.
QuantumAlgebra omega_quotient(const Params& params);
/// Image of p under A -> A/<w>, d -> y, u -> x. `p` may be over {d,u} or the
/// omega alphabet.
QElem project(const NcPoly& p, const Params& params);

// --- commutative polynomials and abelianizations ---------------------------

using Exponents = std::vector<unsigned>;

struct ExponentsDescending {
  /// Total degree first, then lexicographic with the first variable largest.
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Polynomial in commuting variables with rational coefficients.
class CommPoly {
 public:
  using Terms = std::map<Exponents, Scalar, ExponentsDescending>;

  explicit CommPoly(std::vector<std::string> variables);
  static CommPoly monomial(std::vector<std::string> variables, Exponents e, const Scalar& c = 1);

  const std::vector<std::string>& variables() const noexcept { return variables_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// A single term (any nonzero coefficient).
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  /// Every term has the same total degree.
  bool is_homogeneous() const;
  const Exponents& leading() const { return terms_.begin()->first; }
  const Scalar& leading_coefficient() const { return terms_.begin()->second; }
  Scalar constant_term() const;

  void add_term(const Exponents& e, const Scalar& c);
  CommPoly& operator+=(const CommPoly& other);
  friend CommPoly operator+(CommPoly a, const CommPoly& b) { return a += b; }
  friend CommPoly operator*(const CommPoly& a, const CommPoly& b);
  friend bool operator==(const CommPoly&, const CommPoly&) = default;

 private:
  std::vector<std::string> variables_;
  Terms terms_;
};

unsigned total_degree(const Exponents& e);
std::string to_string(const CommPoly& p);
/// Image of a noncommutative polynomial in the polynomial ring on its letters.
CommPoly commutative_image(const NcPoly& p);

/// One factor of a product decomposition of a commutative algebra. In a
/// down-up abelianization a BaseField summand is the augmentation d, u -> 0.
struct Summand {
  enum class Kind { BaseField, Polynomial, Quotient };
  Kind kind = Kind::BaseField;
  std::vector<std::string> variables;
  std::vector<CommPoly> relations;
  friend bool operator==(const Summand&, const Summand&) = default;
};

struct AbelianPresentation {
  std::vector<Summand> summands;
  friend bool operator==(const AbelianPresentation&, const AbelianPresentation&) = default;
};

std::string to_string(const Summand& s);
std::string to_string(const AbelianPresentation& p);

/// A(alpha,beta,gamma)/(commutators). With c = 1 - alpha - beta:
///   gamma = 0, c != 0: K[d,u]/(d^2u, du^2)
///   gamma = 0, c = 0:  K[d,u]
///   gamma != 0, c != 0: K (+) K[d,u]/(du - gamma/c)
///   gamma != 0, c = 0: K[d,u]/(d, u)
/// Relations are emitted monic.
AbelianPresentation abelianization(const Params& params);

struct AbelianInvariants {
  bool connected;
  bool units_finite_dimensional;
  std::size_t summand_count;
  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

/// connected iff there is one summand; units_finite_dimensional is false
/// exactly when some summand has a non-monomial relation.
AbelianInvariants abelian_invariants(const AbelianPresentation& pres);

/// Normal forms modulo the relations of one summand. Each relation is used as
/// the rule "leading monomial -> rest"; the rule set is expected to be
/// confluent, which `confluent_up_to` checks exhaustively.
class CommRewriter {
 public:
  explicit CommRewriter(const Summand& summand);

  CommPoly reduce(const CommPoly& p) const;
  /// For every monomial of degree <= max_degree, every one-step rewrite
  /// reduces to the same normal form.
  bool confluent_up_to(unsigned max_degree) const;
  bool is_normal(const Exponents& e) const;
  /// Number of normal monomials of each total degree 0..max_degree. For a
  /// homogeneous presentation these are the graded dimensions.
  std::vector<std::size_t> normal_monomial_counts(unsigned max_degree) const;

 private:
  struct Rule {
    Exponents lead;
    CommPoly tail;  // lead = tail in the quotient
  };
  CommPoly rewrite_once(const Exponents& m, const Rule& rule) const;

  Summand summand_;
  std::vector<Rule> rules_;
};

/// Graded dimensions of a presentation whose summands are homogeneous.
std::vector<std::size_t> graded_dimensions(const AbelianPresentation& pres, unsigned max_degree);

/// True iff p in K[d,u] maps to zero in every summand of the down-up
/// abelianization (BaseField summands evaluate at d = u = 0).
bool vanishes_in(const CommPoly& p, const AbelianPresentation& pres);

/// All exponent vectors of a given total degree in `nvars` variables.
std::vector<Exponents> monomials_of_degree(std::size_t nvars, unsigned degree);

}  // namespace downup
