#pragma once

#include <string>
#include <string_view>

#include "downup/expr.hpp"
#include "downup/rewrite.hpp"
#include "downup/scalar.hpp"
#include "downup/sparse_table.hpp"

namespace downup {

/// Parameters (alpha, beta, gamma) of the down-up algebra A(alpha, beta, gamma).
struct Params {
  Scalar alpha;
  Scalar beta;
  Scalar gamma;

  friend bool operator==(const Params&, const Params&) = default;
};

/// Parses "a,b,c" with each entry a rational `p` or `p/q`.
Params parse_params(std::string_view text);
std::string to_string(const Params& params);

/// {d, u} with d > u.
AlphabetPtr downup_alphabet();
/// {d, w, u} with d > w > u; `w` is the omega letter, also spelled "omega".
AlphabetPtr omega_alphabet();

/// d^2u -> alpha dud + beta ud^2 + gamma d, du^2 -> alpha udu + beta u^2d + gamma u.
RuleSet downup_rules(const Params& params);
/// du -> w + alpha ud + gamma, dw -> 0, wu -> 0. Requires beta = 0.
RuleSet omega_rules(const Params& params);

struct PbwBasis;
struct OmegaBasis;
struct BimodBasis;

/// Coordinates (i, j, k) of u^i (du)^j d^k.
using PBWElem = SparseTable<PbwBasis, 3>;
/// Coordinates (i, j, l) of u^i w^j d^l. Only meaningful when beta = 0.
using OmegaElem = SparseTable<OmegaBasis, 3>;
/// Coordinates (i, l) of the class [u^i w d^l] in <w>/<w>^2.
using BimodClass = SparseTable<BimodBasis, 2>;

/// Coordinates of p in the PBW basis. `p` may be over {d,u} or, when
/// beta = 0, over the omega alphabet.
PBWElem pbw_normal_form(const NcPoly& p, const Params& params);
NcPoly to_poly(const PBWElem& e);

/// w = du - alpha ud - gamma as an element of the free algebra on {d,u}.
NcPoly omega_element(const Params& params);
/// Replaces the letter w by du - alpha ud - gamma.
NcPoly lower_omega(const NcPoly& p, const Params& params);

OmegaElem pbw_to_omega(const PBWElem& e, const Params& params);
PBWElem omega_to_pbw(const OmegaElem& e, const Params& params);
NcPoly to_poly(const OmegaElem& e);

/// Omega-basis coordinates of an element given over either alphabet.
OmegaElem omega_coordinates(const NcPoly& p, const Params& params);
OmegaElem omega_product(const OmegaElem& a, const OmegaElem& b, const Params& params);

/// True iff every omega-basis term of p has w-exponent >= n, i.e. p lies in
/// the n-th power of the ideal generated by w.
bool ideal_power_membership(const NcPoly& p, unsigned n, const Params& params);
bool ideal_power_membership(const OmegaElem& e, unsigned n);

/// Class of p in <w>/<w>^2. Throws DomainError(NotInIdeal) when p is not in <w>.
BimodClass bimod_class(const NcPoly& p, const Params& params);

enum class Side { Left, Right };

/// Closed form for [u^i w d^l] * u (right) and d * [u^i w d^l] (left):
///   right: gamma (alpha^l - 1)/(alpha - 1) [u^i w d^(l-1)], zero for l = 0
///   left:  gamma (alpha^i - 1)/(alpha - 1) [u^(i-1) w d^l], zero for i = 0
/// The quotients are evaluated as geometric sums. Requires beta = 0 and
/// alpha != 1; gamma = 1 gives the classical statement.
BimodClass bimod_action_formula(unsigned i, unsigned l, Side side, const Params& params);

std::string to_string(const PBWElem& e);
std::string to_string(const OmegaElem& e);
std::string to_string(const BimodClass& c);

}  // namespace downup
