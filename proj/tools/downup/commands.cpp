#include "commands.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "checks.hpp"
#include "downup/classify.hpp"
#include "downup/downup.hpp"
#include "downup/error.hpp"
#include "downup/homology.hpp"
#include "downup/quiver.hpp"
#include "downup/quotients.hpp"

namespace downup::cli {

using nlohmann::json;

namespace {

/// Expressions may use omega whenever the omega machinery is available.
AlphabetPtr input_alphabet(const Params& p) {
  return is_zero(p.beta) ? omega_alphabet() : downup_alphabet();
}

OneDimModule parse_module(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos)
    throw ParseError("module must be 'delta,mu' in '" + text + "'", 0);
  return {parse_scalar(text.substr(0, comma)), parse_scalar(text.substr(comma + 1))};
}

template <class Table>
json table_json(const Table& t) {
  json out = json::array();
  for (const auto& [idx, c] : t.terms()) out.push_back({{"index", idx}, {"coefficient", to_string(c)}});
  return out;
}

json invariants_json(const AbelianInvariants& inv) {
  return {{"connected", inv.connected},
          {"units_finite_dimensional", inv.units_finite_dimensional},
          {"summand_count", inv.summand_count}};
}

std::string invariants_text(const AbelianInvariants& inv) {
  std::ostringstream os;
  os << std::boolalpha << "connected: " << inv.connected
     << ", units_finite_dimensional: " << inv.units_finite_dimensional
     << ", summand_count: " << inv.summand_count;
  return os.str();
}

std::string dims_text(const TorProfile& prof) {
  std::string s;
  for (std::size_t k = 0; k < prof.dims.size(); ++k) s += (k ? "," : "") + std::to_string(prof.dims[k]);
  return s;
}

}  // namespace

Reply nf(const std::string& params, const std::string& expr) {
  const Params p = parse_params(params);
  const PBWElem e = pbw_normal_form(parse(expr, input_alphabet(p)), p);
  const std::string out = to_string(to_poly(e));
  return {{{"params", to_string(p)}, {"expression", expr}},
          {{"normal_form", out}, {"pbw", table_json(e)}},
          "pbw-basis",
          out + "\n"};
}

Reply omega(const std::string& params, const std::string& expr, bool to_pbw) {
  const Params p = parse_params(params);
  if (to_pbw) {
    const PBWElem e = pbw_normal_form(lower_omega(parse(expr, omega_alphabet()), p), p);
    const std::string out = to_string(to_poly(e));
    return {{{"params", to_string(p)}, {"expression", expr}, {"direction", "to-pbw"}},
            {{"normal_form", out}, {"pbw", table_json(e)}},
            "omega-substitution",
            out + "\n"};
  }
  const OmegaElem e = omega_coordinates(parse(expr, omega_alphabet()), p);
  const std::string out = to_string(to_poly(e));
  return {{{"params", to_string(p)}, {"expression", expr}, {"direction", "to-omega"}},
          {{"omega_form", out}, {"omega", table_json(e)}},
          "omega-basis",
          out + "\n"};
}

Reply member(const std::string& params, const std::string& expr, unsigned n) {
  const Params p = parse_params(params);
  const bool in = ideal_power_membership(parse(expr, omega_alphabet()), n, p);
  return {{{"params", to_string(p)}, {"expression", expr}, {"n", n}},
          in,
          "omega-ideal-power-basis",
          std::string(in ? "true" : "false") + "\n"};
}

Reply bimod(const std::string& params, const std::string& expr) {
  const Params p = parse_params(params);
  const BimodClass c = bimod_class(parse(expr, omega_alphabet()), p);
  const std::string out = to_string(c);
  return {{{"params", to_string(p)}, {"expression", expr}},
          {{"class", out}, {"coordinates", table_json(c)}},
          "omega-bimodule-basis",
          out + "\n"};
}

Reply bimod_formula(const std::string& params, unsigned i, unsigned l, const std::string& side) {
  const Params p = parse_params(params);
  const Side s = side == "left" ? Side::Left : Side::Right;
  const BimodClass c = bimod_action_formula(i, l, s, p);
  const std::string out = to_string(c);
  return {{{"params", to_string(p)}, {"i", i}, {"l", l}, {"side", side}},
          {{"class", out}, {"coordinates", table_json(c)}},
          "omega-bimodule-action",
          out + "\n"};
}

Reply project(const std::string& params, const std::string& expr) {
  const Params p = parse_params(params);
  const QElem e = project(parse(expr, omega_alphabet()), p);
  const QuantumAlgebra qa = omega_quotient(p);
  const std::string out = to_string(to_poly(e));
  return {{{"params", to_string(p)}, {"expression", expr}},
          {{"image", out},
           {"quotient", is_zero(qa.constant()) ? "quantum plane" : "quantum Weyl algebra"},
           {"coordinates", table_json(e)}},
          "omega-quotient",
          out + "\n"};
}

Reply qnf(const std::string& alpha, const std::string& constant, const std::string& expr) {
  const QuantumAlgebra qa(parse_scalar(alpha), parse_scalar(constant));
  const QElem e = q_normal_form(parse(expr, quantum_alphabet()), qa);
  const std::string out = to_string(to_poly(e));
  return {{{"alpha", to_string(qa.alpha())}, {"constant", to_string(qa.constant())}, {"expression", expr}},
          {{"normal_form", out}, {"coordinates", table_json(e)}},
          "quantum-normal-form",
          out + "\n"};
}

Reply abel(const std::string& params) {
  const Params p = parse_params(params);
  const auto pres = abelianization(p);
  const auto inv = abelian_invariants(pres);
  json summands = json::array();
  for (const auto& s : pres.summands) summands.push_back(to_string(s));
  return {{{"params", to_string(p)}},
          {{"presentation", to_string(pres)}, {"summands", summands}, {"invariants", invariants_json(inv)}},
          "abelianization",
          to_string(pres) + "\n" + invariants_text(inv) + "\n"};
}

Reply tor(const std::string& params, const std::string& t1, const std::string& t2, bool mechanical) {
  const Params p = parse_params(params);
  const OneDimModule m1 = parse_module(t1), m2 = parse_module(t2);
  const TorProfile prof = mechanical ? tor_profile_mechanical(m1, m2, p) : tor_profile(m1, m2, p);
  return {{{"params", to_string(p)}, {"t1", t1}, {"t2", t2}, {"mechanical", mechanical}},
          {{"dims", prof.dims}},
          mechanical ? "tor-complex-functor" : "tor-complex-closed-form",
          dims_text(prof) + "\n"};
}

Reply torbound(const std::string& params, unsigned samples) {
  const Params p = parse_params(params);
  const unsigned b = tor1_bound(p, samples);
  return {{{"params", to_string(p)}, {"samples", samples}}, b, "tor1-table", std::to_string(b) + "\n"};
}

Reply classify_type(const std::string& params) {
  const Params p = parse_params(params);
  const std::string t(1, tag(type_of(p)));
  return {{{"params", to_string(p)}}, t, "type-partition", t + "\n"};
}

Reply classify_iso(const std::string& left, const std::string& right) {
  const Params p = parse_params(left), q = parse_params(right);
  const auto v = iso_verdict(p, q);
  const std::string line = std::string(v.isomorphic ? "isomorphic" : "not isomorphic") + " (" +
                           to_string(v.rule) + ")";
  return {{{"left", to_string(p)}, {"right", to_string(q)}},
          {{"isomorphic", v.isomorphic}, {"rule", to_string(v.rule)}, {"detail", v.detail}},
          to_string(v.rule),
          line + "\n"};
}

Reply classify_monomial(const std::string& params) {
  const Params p = parse_params(params);
  const bool m = is_monomial(p);
  return {{{"params", to_string(p)}}, m, "monomial-criterion", std::string(m ? "true" : "false") + "\n"};
}

Reply classify_report(const std::string& left, const std::string& right, unsigned samples) {
  const Params p = parse_params(left), q = parse_params(right);
  const auto r = invariant_report(p, q, samples);
  auto column = [](const InvariantColumn& c) {
    return json{{"type", std::string(1, tag(c.type))},
                {"tor1_bound", c.tor1_bound},
                {"abelian", invariants_json(c.abelian)}};
  };
  std::ostringstream os;
  auto line = [&](const InvariantColumn& c, const Params& x) {
    os << to_string(x) << ": type " << tag(c.type) << ", tor1_bound " << c.tor1_bound << ", "
       << invariants_text(c.abelian) << "\n";
  };
  line(r.left, p);
  line(r.right, q);
  if (r.certifies_non_isomorphism()) {
    os << "not isomorphic: differs in";
    for (const auto& m : r.mismatches) os << " " << m;
    os << "\n";
  } else {
    os << "no invariant separates the two algebras\n";
  }
  return {{{"left", to_string(p)}, {"right", to_string(q)}, {"samples", samples}},
          {{"left", column(r.left)},
           {"right", column(r.right)},
           {"mismatches", r.mismatches},
           {"certifies_non_isomorphism", r.certifies_non_isomorphism()}},
          "separating-invariants",
          os.str()};
}

Reply lambda(const std::string& alpha, unsigned m_max) {
  const Scalar a = parse_scalar(alpha);
  const auto seq = lambda_sequence(a, m_max);
  json values = json::array();
  std::string text;
  for (std::size_t m = 0; m < seq.size(); ++m) {
    values.push_back(to_string(seq[m]));
    text += "Lambda_" + std::to_string(m) + " = " + to_string(seq[m]) + "\n";
  }
  return {{{"alpha", to_string(a)}, {"max", m_max}}, values, "lambda-recursion", text};
}

Reply quiver_abel(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read quiver file '" + path + "'", 0);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const MonomialAlgebra alg = parse_quiver(buffer.str());
  const auto pres = monomial_abelianization(alg);
  const auto inv = abelian_invariants(pres);
  json table = json::array();
  std::string text = to_string(pres) + "\n" + invariants_text(inv) + "\n";
  for (const auto& [key, n] : arrow_tor_table(alg)) {
    table.push_back({{"target", key.first}, {"source", key.second}, {"dim_tor1", n}});
    text += "Tor_1(T_" + key.first + ", T_" + key.second + ") = " + std::to_string(n) + "\n";
  }
  return {{{"file", path}},
          {{"presentation", to_string(pres)}, {"invariants", invariants_json(inv)}, {"tor1", table}},
          "monomial-abelianization",
          text};
}

Reply verify(const std::string& only) {
  std::vector<verify::Check> checks;
  if (only != "properties")
    for (auto& c : verify::acceptance_checks()) checks.push_back(std::move(c));
  if (only != "criteria")
    for (auto& c : verify::property_checks()) checks.push_back(std::move(c));

  Reply reply;
  reply.inputs = {{"only", only.empty() ? "all" : only}};
  reply.provenance = "property-suite";
  reply.result = json::array();
  std::ostringstream os;
  std::size_t passed = 0;
  double total = 0;
  for (const auto& check : checks) {
    const auto r = verify::run_check(check);
    passed += r.passed;
    total += r.seconds;
    os << (r.passed ? "PASS " : "FAIL ") << r.name << " [" << std::fixed << std::setprecision(2) << r.seconds
       << " s] " << r.detail << "\n";
    reply.result.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
  }
  os << passed << "/" << checks.size() << " checks passed in " << std::fixed << std::setprecision(1) << total
     << " s\n";
  reply.text = os.str();
  reply.exit_code = passed == checks.size() ? 0 : 1;
  return reply;
}

}  // namespace downup::cli
