#include "downup/downup.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

#include "downup/error.hpp"

namespace downup {

namespace {

constexpr Letter kD = 0;
constexpr Letter kU = 1;

// Omega alphabet letters.
constexpr Letter kOd = 0;
constexpr Letter kOw = 1;
constexpr Letter kOu = 2;

void require_beta_zero(const Params& params, const char* op) {
  if (!is_zero(params.beta))
    throw DomainError(DomainError::Kind::BetaNonzero,
                      std::string(op) + " requires beta = 0, got beta = " + to_string(params.beta));
}

bool is_downup(const AlphabetPtr& a) { return *a == *downup_alphabet(); }
bool is_omega(const AlphabetPtr& a) { return *a == *omega_alphabet(); }

// Splits a word of the shape u^i (du)^j d^k. Throws if the word has another shape.
PBWElem::Index decompose_pbw(const Word& w) {
  std::size_t pos = 0;
  unsigned i = 0, j = 0, k = 0;
  while (pos < w.size() && w[pos] == kU) ++i, ++pos;
  while (pos + 1 < w.size() && w[pos] == kD && w[pos + 1] == kU) ++j, pos += 2;
  while (pos < w.size() && w[pos] == kD) ++k, ++pos;
  if (pos != w.size()) throw std::logic_error("word is not a PBW monomial");
  return {i, j, k};
}

OmegaElem::Index decompose_omega(const Word& w) {
  std::size_t pos = 0;
  unsigned i = 0, j = 0, l = 0;
  while (pos < w.size() && w[pos] == kOu) ++i, ++pos;
  while (pos < w.size() && w[pos] == kOw) ++j, ++pos;
  while (pos < w.size() && w[pos] == kOd) ++l, ++pos;
  if (pos != w.size()) throw std::logic_error("word is not an omega-basis monomial");
  return {i, j, l};
}

OmegaElem omega_from_normal(const NcPoly& reduced) {
  OmegaElem out;
  for (const auto& [w, c] : reduced.terms()) out.add(decompose_omega(w), c);
  return out;
}

}  // namespace

Params parse_params(std::string_view text) {
  std::vector<Scalar> values;
  std::size_t start = 0;
  for (;;) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    std::string trimmed;
    for (char c : piece)
      if (c != ' ') trimmed.push_back(c);
    try {
      values.push_back(parse_scalar(trimmed));
    } catch (const ParseError&) {
      throw ParseError("malformed parameter '" + std::string(piece) + "'", start);
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (values.size() != 3)
    throw ParseError("expected three comma-separated parameters alpha,beta,gamma", 0);
  return {values[0], values[1], values[2]};
}

std::string to_string(const Params& params) {
  return to_string(params.alpha) + "," + to_string(params.beta) + "," + to_string(params.gamma);
}

AlphabetPtr downup_alphabet() {
  static const AlphabetPtr alphabet = make_alphabet({"d", "u"});
  return alphabet;
}

AlphabetPtr omega_alphabet() {
  static const AlphabetPtr alphabet =
      make_alphabet({"d", "w", "u"}, {{"omega", "w"}, {"\xCF\x89", "w"}});
  return alphabet;
}

RuleSet downup_rules(const Params& params) {
  const auto& a = downup_alphabet();
  auto mono = [&](Word w, const Scalar& c) { return NcPoly::monomial(a, std::move(w), c); };
  NcPoly rhs1 = mono({kD, kU, kD}, params.alpha) + mono({kU, kD, kD}, params.beta) +
                mono({kD}, params.gamma);
  NcPoly rhs2 = mono({kU, kD, kU}, params.alpha) +
                mono({kU, kU, kD}, params.beta) + mono({kU}, params.gamma);
  return RuleSet(a, {{Word{kD, kD, kU}, rhs1}, {Word{kD, kU, kU}, rhs2}});
}

RuleSet omega_rules(const Params& params) {
  require_beta_zero(params, "omega rules");
  const auto& a = omega_alphabet();
  NcPoly du = NcPoly::monomial(a, {kOw}) + NcPoly::monomial(a, {kOu, kOd}, params.alpha) +
              NcPoly::constant(a, params.gamma);
  return RuleSet(a, {{Word{kOd, kOu}, du}, {Word{kOd, kOw}, NcPoly(a)}, {Word{kOw, kOu}, NcPoly(a)}});
}

NcPoly omega_element(const Params& params) {
  const auto& a = downup_alphabet();
  return NcPoly::monomial(a, {kD, kU}) - NcPoly::monomial(a, {kU, kD}, params.alpha) -
         NcPoly::constant(a, params.gamma);
}

NcPoly lower_omega(const NcPoly& p, const Params& params) {
  if (is_downup(p.alphabet())) return p;
  if (!is_omega(p.alphabet())) throw AlphabetMismatchError("expected an element over {d,w,u}");
  const auto& target = downup_alphabet();
  const NcPoly omega = omega_element(params);
  return substitute(p, target, [&](Letter l) {
    switch (l) {
      case kOd: return NcPoly::monomial(target, {kD});
      case kOu: return NcPoly::monomial(target, {kU});
      default: return omega;
    }
  });
}

PBWElem pbw_normal_form(const NcPoly& p, const Params& params) {
  NcPoly base = p;
  if (is_omega(p.alphabet())) {
    require_beta_zero(params, "pbw_normal_form over the omega alphabet");
    base = lower_omega(p, params);
  } else if (!is_downup(p.alphabet())) {
    throw AlphabetMismatchError("pbw_normal_form expects an element over {d,u}");
  }
  const NcPoly reduced = reduce(base, downup_rules(params));
  PBWElem out;
  for (const auto& [w, c] : reduced.terms()) out.add(decompose_pbw(w), c);
  return out;
}

NcPoly to_poly(const PBWElem& e) {
  const auto& a = downup_alphabet();
  NcPoly out(a);
  for (const auto& [idx, c] : e.terms()) {
    const Word du{kD, kU};
    Word w = Word::power(kU, idx[0]);
    for (unsigned j = 0; j < idx[1]; ++j) w = w * du;
    out.add_term(w * Word::power(kD, idx[2]), c);
  }
  return out;
}

NcPoly to_poly(const OmegaElem& e) {
  const auto& a = omega_alphabet();
  NcPoly out(a);
  for (const auto& [idx, c] : e.terms())
    out.add_term(Word::power(kOu, idx[0]) * Word::power(kOw, idx[1]) * Word::power(kOd, idx[2]), c);
  return out;
}

OmegaElem pbw_to_omega(const PBWElem& e, const Params& params) {
  const RuleSet rules = omega_rules(params);
  const auto& a = omega_alphabet();
  const NcPoly embedded = substitute(to_poly(e), a, [&](Letter l) {
    return NcPoly::monomial(a, {l == kD ? kOd : kOu});
  });
  return omega_from_normal(reduce(embedded, rules));
}

PBWElem omega_to_pbw(const OmegaElem& e, const Params& params) {
  require_beta_zero(params, "omega_to_pbw");
  return pbw_normal_form(lower_omega(to_poly(e), params), params);
}

OmegaElem omega_coordinates(const NcPoly& p, const Params& params) {
  if (is_omega(p.alphabet())) return omega_from_normal(reduce(p, omega_rules(params)));
  if (!is_downup(p.alphabet()))
    throw AlphabetMismatchError("expected an element over {d,u} or {d,w,u}");
  require_beta_zero(params, "omega coordinates");
  return pbw_to_omega(pbw_normal_form(p, params), params);
}

OmegaElem omega_product(const OmegaElem& a, const OmegaElem& b, const Params& params) {
  return omega_from_normal(reduce(to_poly(a) * to_poly(b), omega_rules(params)));
}

bool ideal_power_membership(const OmegaElem& e, unsigned n) {
  for (const auto& [idx, c] : e.terms())
    if (idx[1] < n) return false;
  return true;
}

bool ideal_power_membership(const NcPoly& p, unsigned n, const Params& params) {
  require_beta_zero(params, "ideal_power_membership");
  if (n == 0) throw std::invalid_argument("ideal power must be positive");
  return ideal_power_membership(omega_coordinates(p, params), n);
}

BimodClass bimod_class(const NcPoly& p, const Params& params) {
  require_beta_zero(params, "bimod_class");
  const OmegaElem coords = omega_coordinates(p, params);
  if (!ideal_power_membership(coords, 1))
    throw DomainError(DomainError::Kind::NotInIdeal, "element is not in the ideal generated by omega");
  BimodClass out;
  for (const auto& [idx, c] : coords.terms())
    if (idx[1] == 1) out.add({idx[0], idx[2]}, c);
  return out;
}

BimodClass bimod_action_formula(unsigned i, unsigned l, Side side, const Params& params) {
  require_beta_zero(params, "bimod_action_formula");
  if (params.alpha == 1)
    throw DomainError(DomainError::Kind::AlphaIsOne, "bimod_action_formula requires alpha != 1");
  BimodClass out;
  if (side == Side::Right) {
    if (l > 0) out.add({i, l - 1}, params.gamma * geometric_sum(params.alpha, l));
  } else {
    if (i > 0) out.add({i - 1, l}, params.gamma * geometric_sum(params.alpha, i));
  }
  return out;
}

std::string to_string(const PBWElem& e) { return to_string(to_poly(e)); }
std::string to_string(const OmegaElem& e) { return to_string(to_poly(e)); }

std::string to_string(const BimodClass& c) {
  if (c.is_zero()) return "0";
  // Wrap each class representative in brackets, largest word first.
  const auto& a = omega_alphabet();
  NcPoly rep(a);
  for (const auto& [idx, k] : c.terms())
    rep.add_term(Word::power(kOu, idx[0]) * Word{kOw} * Word::power(kOd, idx[1]), k);
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, k] : rep.terms()) {
    const bool negative = sgn(k) < 0;
    out << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    const Scalar magnitude = abs(k);
    if (magnitude != 1) out << magnitude.get_str() << '*';
    out << '[' << to_string(w, *a) << ']';
    first = false;
  }
  return out.str();
}

}  // namespace downup
