#pragma once

#include <string>
#include <vector>

#include "downup/downup.hpp"
#include "downup/quotients.hpp"

namespace downup {

/// Partition of parameter space by (gamma = 0?) x (alpha + beta = 1?):
///   a: gamma = 0, alpha+beta = 1     b: gamma = 0, alpha+beta != 1
///   c: gamma != 0, alpha+beta = 1    d: gamma != 0, alpha+beta != 1
enum class DownUpType { A, B, C, D };

DownUpType type_of(const Params& params);
char tag(DownUpType type);

/// The clause that decided an isomorphism question.
enum class IsoRule {
  NoetherianDichotomy,       // one algebra is a domain (beta != 0), the other is not
  TypeMismatch,              // different types are never isomorphic
  Cm00Identity,              // noetherian, (alpha', beta') = (alpha, beta)
  Cm00Swap,                  // noetherian, (alpha', beta') = (-alpha/beta, 1/beta)
  Cm00Refuted,               // noetherian, neither parameter relation holds
  GammaRescaling,            // beta = 0, alpha' = alpha, gamma = lambda gamma'
  AlphaDiffersGammaZero,     // beta = gamma = 0, alpha' != alpha
  AlphaDiffersGammaNonzero,  // beta = 0, gamma, gamma' != 0, alpha' != alpha
};

std::string to_string(IsoRule rule);

struct IsoVerdict {
  bool isomorphic;
  IsoRule rule;
  std::string detail;
};

/// Decides A(p) ~ A(q) over the algebraic closure of Q.
IsoVerdict iso_verdict(const Params& p, const Params& q);

/// Only A(0,0,0) is a monomial algebra.
bool is_monomial(const Params& params);

struct InvariantColumn {
  DownUpType type;
  unsigned tor1_bound;
  AbelianInvariants abelian;
};

/// Side-by-side separating invariants. A mismatch proves non-isomorphism; a
/// clean report proves nothing.
struct InvariantReport {
  InvariantColumn left;
  InvariantColumn right;
  std::vector<std::string> mismatches;

  bool certifies_non_isomorphism() const { return !mismatches.empty(); }
};

/// Requires beta = beta' = 0.
InvariantReport invariant_report(const Params& p, const Params& q, unsigned samples = 30);

/// Lambda_0 = alpha, Lambda_m = alpha Lambda_(m-1) / (1 + alpha + ... + alpha^m).
/// Requires alpha not in {0, 1, -1}.
std::vector<Scalar> lambda_sequence(const Scalar& alpha, unsigned m_max);

}  // namespace downup
