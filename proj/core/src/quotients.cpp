#include "downup/quotients.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "downup/error.hpp"

namespace downup {

namespace {

constexpr Letter kY = 0;
constexpr Letter kX = 1;

std::string format_coefficient_prefix(const Scalar& magnitude, bool unit_word) {
  if (unit_word) return magnitude.get_str();
  return magnitude == 1 ? std::string() : magnitude.get_str() + "*";
}

}  // namespace

QuantumAlgebra::QuantumAlgebra(Scalar alpha, Scalar constant)
    : alpha_(std::move(alpha)), constant_(std::move(constant)) {
  if (is_zero(alpha_))
    throw DomainError(DomainError::Kind::UnsupportedParams, "quantum algebra requires alpha != 0");
}

AlphabetPtr quantum_alphabet() {
  static const AlphabetPtr alphabet = make_alphabet({"y", "x"});
  return alphabet;
}

RuleSet quantum_rules(const QuantumAlgebra& qa) {
  const auto& a = quantum_alphabet();
  NcPoly rhs = NcPoly::monomial(a, {kX, kY}, qa.alpha()) + NcPoly::constant(a, qa.constant());
  return RuleSet(a, {{Word{kY, kX}, rhs}});
}

QElem q_normal_form(const NcPoly& p, const QuantumAlgebra& qa) {
  if (!(*p.alphabet() == *quantum_alphabet()))
    throw AlphabetMismatchError("q_normal_form expects an element over {x,y}");
  const NcPoly reduced = reduce(p, quantum_rules(qa));
  QElem out;
  for (const auto& [w, c] : reduced.terms()) {
    unsigned i = 0, l = 0;
    std::size_t pos = 0;
    while (pos < w.size() && w[pos] == kX) ++i, ++pos;
    while (pos < w.size() && w[pos] == kY) ++l, ++pos;
    if (pos != w.size()) throw std::logic_error("quantum normal word has unexpected shape");
    out.add({i, l}, c);
  }
  return out;
}

NcPoly to_poly(const QElem& e) {
  const auto& a = quantum_alphabet();
  NcPoly out(a);
  for (const auto& [idx, c] : e.terms())
    out.add_term(Word::power(kX, idx[0]) * Word::power(kY, idx[1]), c);
  return out;
}

QElem q_mul(const QElem& a, const QElem& b, const QuantumAlgebra& qa) {
  return q_normal_form(to_poly(a) * to_poly(b), qa);
}

std::string to_string(const QElem& e) { return to_string(to_poly(e)); }

QuantumAlgebra omega_quotient(const Params& params) {
  if (!is_zero(params.beta) || is_zero(params.alpha) ||
      !(is_zero(params.gamma) || params.gamma == 1))
    throw DomainError(DomainError::Kind::UnsupportedParams,
                      "projection needs beta = 0, alpha != 0 and gamma in {0,1}; rescale d by "
                      "gamma first for other nonzero gamma");
  return QuantumAlgebra(params.alpha, params.gamma);
}

QElem project(const NcPoly& p, const Params& params) {
  const QuantumAlgebra qa = omega_quotient(params);
  const NcPoly base = lower_omega(p, params);
  const auto& target = quantum_alphabet();
  const Letter d = downup_alphabet()->at("d");
  const NcPoly image = substitute(base, target, [&](Letter l) {
    return NcPoly::monomial(target, {l == d ? kY : kX});
  });
  return q_normal_form(image, qa);
}

// --- commutative polynomials -------------------------------------------------

unsigned total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

bool ExponentsDescending::operator()(const Exponents& a, const Exponents& b) const {
  const unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

CommPoly::CommPoly(std::vector<std::string> variables) : variables_(std::move(variables)) {}

CommPoly CommPoly::monomial(std::vector<std::string> variables, Exponents e, const Scalar& c) {
  if (e.size() != variables.size()) throw std::invalid_argument("exponent vector size mismatch");
  CommPoly p(std::move(variables));
  p.add_term(e, c);
  return p;
}

bool CommPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = total_degree(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return total_degree(t.first) == d; });
}

Scalar CommPoly::constant_term() const {
  auto it = terms_.find(Exponents(variables_.size(), 0));
  return it == terms_.end() ? Scalar(0) : it->second;
}

void CommPoly::add_term(const Exponents& e, const Scalar& c) {
  if (downup::is_zero(c)) return;
  if (e.size() != variables_.size()) throw std::invalid_argument("exponent vector size mismatch");
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (downup::is_zero(it->second)) terms_.erase(it);
  }
}

CommPoly& CommPoly::operator+=(const CommPoly& other) {
  if (other.variables_ != variables_) throw AlphabetMismatchError("different variable lists");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

CommPoly operator*(const CommPoly& a, const CommPoly& b) {
  if (a.variables_ != b.variables_) throw AlphabetMismatchError("different variable lists");
  CommPoly out(a.variables_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

std::string to_string(const CommPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = sgn(c) < 0;
    out << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    const bool unit = total_degree(e) == 0;
    out << format_coefficient_prefix(abs(c), unit);
    bool first_var = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!first_var) out << '*';
      out << p.variables()[i];
      if (e[i] > 1) out << '^' << e[i];
      first_var = false;
    }
    first = false;
  }
  return out.str();
}

CommPoly commutative_image(const NcPoly& p) {
  CommPoly out(p.alphabet()->letters());
  for (const auto& [w, c] : p.terms()) {
    Exponents e(p.alphabet()->size(), 0);
    for (Letter l : w) ++e[l];
    out.add_term(e, c);
  }
  return out;
}

std::vector<Exponents> monomials_of_degree(std::size_t nvars, unsigned degree) {
  std::vector<Exponents> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  Exponents current(nvars, 0);
  // Enumerate compositions of `degree` into nvars parts, first variable largest first.
  auto rec = [&](auto&& self, std::size_t index, unsigned remaining) -> void {
    if (index + 1 == nvars) {
      current[index] = remaining;
      out.push_back(current);
      return;
    }
    for (unsigned k = remaining + 1; k-- > 0;) {
      current[index] = k;
      self(self, index + 1, remaining - k);
    }
  };
  rec(rec, 0, degree);
  return out;
}

// --- presentations -----------------------------------------------------------

std::string to_string(const Summand& s) {
  if (s.kind == Summand::Kind::BaseField) return "K";
  std::ostringstream out;
  out << "K[";
  for (std::size_t i = 0; i < s.variables.size(); ++i) out << (i ? "," : "") << s.variables[i];
  out << ']';
  if (s.kind == Summand::Kind::Quotient) {
    out << "/(";
    for (std::size_t i = 0; i < s.relations.size(); ++i)
      out << (i ? ", " : "") << to_string(s.relations[i]);
    out << ')';
  }
  return out.str();
}

std::string to_string(const AbelianPresentation& p) {
  std::string out;
  for (std::size_t i = 0; i < p.summands.size(); ++i) {
    if (i) out += " (+) ";
    out += to_string(p.summands[i]);
  }
  return out.empty() ? "0" : out;
}

AbelianPresentation abelianization(const Params& params) {
  const std::vector<std::string> vars{"d", "u"};
  const Scalar c = 1 - params.alpha - params.beta;
  auto mono = [&](unsigned de, unsigned ue, const Scalar& k) {
    return CommPoly::monomial(vars, {de, ue}, k);
  };
  AbelianPresentation pres;
  if (is_zero(params.gamma)) {
    if (is_zero(c)) {
      pres.summands.push_back({Summand::Kind::Polynomial, vars, {}});
    } else {
      pres.summands.push_back({Summand::Kind::Quotient, vars, {mono(2, 1, 1), mono(1, 2, 1)}});
    }
  } else if (is_zero(c)) {
    pres.summands.push_back(
        {Summand::Kind::Quotient, vars, {mono(1, 0, 1), mono(0, 1, 1)}});
  } else {
    // d(c du - gamma), u(c du - gamma) generate <d,u> * <c du - gamma>, and the
    // two factors are coprime.
    pres.summands.push_back({Summand::Kind::BaseField, {}, {}});
    pres.summands.push_back(
        {Summand::Kind::Quotient, vars, {mono(1, 1, 1) + mono(0, 0, -params.gamma / c)}});
  }
  return pres;
}

AbelianInvariants abelian_invariants(const AbelianPresentation& pres) {
  bool units_fd = true;
  for (const auto& s : pres.summands)
    for (const auto& r : s.relations)
      if (!r.is_monomial()) units_fd = false;
  return {pres.summands.size() == 1, units_fd, pres.summands.size()};
}

// --- commutative rewriting -------------------------------------------------

CommRewriter::CommRewriter(const Summand& summand) : summand_(summand) {
  for (const auto& rel : summand_.relations) {
    if (rel.is_zero()) throw std::invalid_argument("zero relation in presentation");
    if (rel.variables() != summand_.variables)
      throw AlphabetMismatchError("relation over undeclared variables");
    Rule rule{rel.leading(), CommPoly(summand_.variables)};
    const Scalar lc = rel.leading_coefficient();
    for (const auto& [e, c] : rel.terms())
      if (e != rule.lead) rule.tail.add_term(e, -c / lc);
    rules_.push_back(std::move(rule));
  }
}

namespace {

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

}  // namespace

bool CommRewriter::is_normal(const Exponents& e) const {
  return std::none_of(rules_.begin(), rules_.end(),
                      [&](const Rule& r) { return divides(r.lead, e); });
}

CommPoly CommRewriter::rewrite_once(const Exponents& m, const Rule& rule) const {
  Exponents quotient(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) quotient[i] = m[i] - rule.lead[i];
  return rule.tail * CommPoly::monomial(summand_.variables, quotient);
}

CommPoly CommRewriter::reduce(const CommPoly& p) const {
  if (p.variables() != summand_.variables)
    throw AlphabetMismatchError("polynomial over different variables than the summand");
  CommPoly work = p;
  CommPoly result(summand_.variables);
  while (!work.is_zero()) {
    const Exponents m = work.leading();
    const Scalar c = work.leading_coefficient();
    work.add_term(m, -c);
    auto rule = std::find_if(rules_.begin(), rules_.end(),
                             [&](const Rule& r) { return divides(r.lead, m); });
    if (rule == rules_.end()) {
      result.add_term(m, c);
    } else {
      CommPoly step = rewrite_once(m, *rule);
      CommPoly scaled(summand_.variables);
      for (const auto& [e, k] : step.terms()) scaled.add_term(e, c * k);
      work += scaled;
    }
  }
  return result;
}

bool CommRewriter::confluent_up_to(unsigned max_degree) const {
  const std::size_t n = summand_.variables.size();
  for (unsigned deg = 0; deg <= max_degree; ++deg) {
    for (const auto& m : monomials_of_degree(n, deg)) {
      std::vector<CommPoly> forms;
      for (const auto& r : rules_)
        if (divides(r.lead, m)) forms.push_back(reduce(rewrite_once(m, r)));
      for (std::size_t i = 1; i < forms.size(); ++i)
        if (!(forms[i] == forms[0])) return false;
    }
  }
  return true;
}

std::vector<std::size_t> CommRewriter::normal_monomial_counts(unsigned max_degree) const {
  std::vector<std::size_t> counts;
  for (unsigned deg = 0; deg <= max_degree; ++deg) {
    if (summand_.kind == Summand::Kind::BaseField) {
      counts.push_back(deg == 0 ? 1 : 0);
      continue;
    }
    std::size_t count = 0;
    for (const auto& m : monomials_of_degree(summand_.variables.size(), deg))
      if (is_normal(m)) ++count;
    counts.push_back(count);
  }
  return counts;
}

std::vector<std::size_t> graded_dimensions(const AbelianPresentation& pres, unsigned max_degree) {
  std::vector<std::size_t> dims(max_degree + 1, 0);
  for (const auto& s : pres.summands) {
    for (const auto& r : s.relations)
      if (!r.is_homogeneous())
        throw DomainError(DomainError::Kind::UnsupportedParams,
                          "graded dimensions need homogeneous relations");
    const auto counts = CommRewriter(s).normal_monomial_counts(max_degree);
    for (unsigned d = 0; d <= max_degree; ++d) dims[d] += counts[d];
  }
  return dims;
}

bool vanishes_in(const CommPoly& p, const AbelianPresentation& pres) {
  for (const auto& s : pres.summands) {
    switch (s.kind) {
      case Summand::Kind::BaseField:
        if (!is_zero(p.constant_term())) return false;
        break;
      case Summand::Kind::Polynomial:
        if (!p.is_zero()) return false;
        break;
      case Summand::Kind::Quotient:
        if (!CommRewriter(s).reduce(p).is_zero()) return false;
        break;
    }
  }
  return true;
}

}  // namespace downup
