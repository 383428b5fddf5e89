#include "downup/classify.hpp"

#include "downup/error.hpp"
#include "downup/homology.hpp"

namespace downup {

DownUpType type_of(const Params& params) {
  const bool gamma_zero = is_zero(params.gamma);
  const bool sum_one = params.alpha + params.beta == 1;
  if (gamma_zero) return sum_one ? DownUpType::A : DownUpType::B;
  return sum_one ? DownUpType::C : DownUpType::D;
}

char tag(DownUpType type) {
  switch (type) {
    case DownUpType::A: return 'a';
    case DownUpType::B: return 'b';
    case DownUpType::C: return 'c';
    case DownUpType::D: return 'd';
  }
  return '?';
}

std::string to_string(IsoRule rule) {
  switch (rule) {
    case IsoRule::NoetherianDichotomy: return "noetherian dichotomy";
    case IsoRule::TypeMismatch: return "type mismatch";
    case IsoRule::Cm00Identity: return "CM00 identity";
    case IsoRule::Cm00Swap: return "CM00 swap";
    case IsoRule::Cm00Refuted: return "CM00 refuted";
    case IsoRule::GammaRescaling: return "gamma rescaling";
    case IsoRule::AlphaDiffersGammaZero: return "alpha differs, gamma = 0";
    case IsoRule::AlphaDiffersGammaNonzero: return "alpha differs, gamma != 0";
  }
  return "?";
}

namespace {

std::string gamma_witness(const Params& p, const Params& q) {
  if (is_zero(p.gamma)) return "gamma = gamma' = 0";
  return "gamma = lambda gamma' with lambda = " + to_string(Scalar(p.gamma / q.gamma));
}

}  // namespace

IsoVerdict iso_verdict(const Params& p, const Params& q) {
  const bool p_noetherian = !is_zero(p.beta);
  const bool q_noetherian = !is_zero(q.beta);
  if (p_noetherian != q_noetherian)
    return {false, IsoRule::NoetherianDichotomy,
            "exactly one of beta, beta' is zero, so exactly one algebra is a domain"};

  const DownUpType tp = type_of(p), tq = type_of(q);
  if (tp != tq)
    return {false, IsoRule::TypeMismatch,
            std::string("types ") + tag(tp) + " and " + tag(tq) + " differ"};

  if (p_noetherian) {
    if (p.alpha == q.alpha && p.beta == q.beta)
      return {true, IsoRule::Cm00Identity, "(alpha', beta') = (alpha, beta); " + gamma_witness(p, q)};
    const Scalar swapped_alpha = -p.alpha / p.beta;
    const Scalar swapped_beta = 1 / p.beta;
    if (q.alpha == swapped_alpha && q.beta == swapped_beta)
      return {true, IsoRule::Cm00Swap,
              "(alpha', beta') = (-alpha/beta, 1/beta) = (" + to_string(swapped_alpha) + ", " +
                  to_string(swapped_beta) + "); " + gamma_witness(p, q)};
    return {false, IsoRule::Cm00Refuted,
            "(alpha', beta') is neither (alpha, beta) nor (" + to_string(swapped_alpha) + ", " +
                to_string(swapped_beta) + ")"};
  }

  if (p.alpha == q.alpha) return {true, IsoRule::GammaRescaling, "alpha' = alpha; " + gamma_witness(p, q)};
  const std::string detail = "alpha = " + to_string(p.alpha) + " != alpha' = " + to_string(q.alpha);
  if (is_zero(p.gamma)) return {false, IsoRule::AlphaDiffersGammaZero, detail};
  return {false, IsoRule::AlphaDiffersGammaNonzero, detail};
}

bool is_monomial(const Params& params) {
  return is_zero(params.alpha) && is_zero(params.beta) && is_zero(params.gamma);
}

InvariantReport invariant_report(const Params& p, const Params& q, unsigned samples) {
  if (!is_zero(p.beta) || !is_zero(q.beta))
    throw DomainError(DomainError::Kind::UnsupportedParams,
                      "invariant_report covers beta = 0 only");
  auto column = [&](const Params& x) {
    return InvariantColumn{type_of(x), tor1_bound(x, samples),
                           abelian_invariants(abelianization(x))};
  };
  InvariantReport report{column(p), column(q), {}};
  const auto& l = report.left;
  const auto& r = report.right;
  if (l.type != r.type) report.mismatches.push_back("type");
  if (l.tor1_bound != r.tor1_bound) report.mismatches.push_back("tor1_bound");
  if (l.abelian.connected != r.abelian.connected) report.mismatches.push_back("abelian.connected");
  if (l.abelian.units_finite_dimensional != r.abelian.units_finite_dimensional)
    report.mismatches.push_back("abelian.units_finite_dimensional");
  if (l.abelian.summand_count != r.abelian.summand_count)
    report.mismatches.push_back("abelian.summand_count");
  return report;
}

std::vector<Scalar> lambda_sequence(const Scalar& alpha, unsigned m_max) {
  if (is_zero(alpha) || alpha == 1 || alpha == -1)
    throw DomainError(DomainError::Kind::LambdaDomain,
                      "lambda sequence needs alpha outside {0, 1, -1}");
  std::vector<Scalar> out{alpha};
  for (unsigned m = 1; m <= m_max; ++m) out.push_back(alpha * out.back() / geometric_sum(alpha, m + 1));
  return out;
}

}  // namespace downup
