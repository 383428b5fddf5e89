#include <functional>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "downup/error.hpp"

namespace {

using downup::cli::Reply;

struct Invocation {
  std::string name;
  CLI::App* sub = nullptr;
  std::function<Reply()> run;
};

int usage_error(const Invocation& inv, const std::string& token, const std::string& message) {
  std::cerr << "error: " << message << "\n";
  if (!token.empty()) std::cerr << "offending token: " << token << "\n";
  if (inv.sub) std::cerr << inv.sub->help("", CLI::AppFormatMode::Sub);
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Computations in down-up algebras A(alpha, beta, gamma)", "downup"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  bool json_out = false;
  app.add_flag("--json", json_out, "Emit {subcommand, inputs, result, provenance} as JSON");

  Invocation inv;
  std::string params = "0,0,0", expr, left, right, alpha, constant = "0", t1, t2, side = "right", file, only;
  unsigned n = 1, samples = 100, m_max = 10, i_index = 0, l_index = 0;
  bool to_pbw = false, mechanical = false, formula = false;

  auto command = [&](CLI::App* sub, std::string name, std::function<Reply()> run) {
    sub->callback([&inv, sub, name = std::move(name), run = std::move(run)] { inv = {name, sub, run}; });
  };
  auto params_opt = [&](CLI::App* sub) {
    return sub->add_option("--params", params, "alpha,beta,gamma as rationals p or p/q")->required();
  };

  auto* nf = app.add_subcommand("nf", "PBW normal form u^i (du)^j d^k");
  params_opt(nf);
  nf->add_option("expr", expr, "expression in d, u (and omega when beta = 0)")->required();
  command(nf, "nf", [&] { return downup::cli::nf(params, expr); });

  auto* om = app.add_subcommand("omega", "coordinates in the basis u^i omega^j d^l (beta = 0)");
  params_opt(om);
  om->add_option("expr", expr)->required();
  om->add_flag("--to-pbw", to_pbw, "substitute omega and return the PBW normal form instead");
  command(om, "omega", [&] { return downup::cli::omega(params, expr, to_pbw); });

  auto* mem = app.add_subcommand("member", "membership in the n-th power of <omega>");
  params_opt(mem);
  mem->add_option("-n", n, "ideal power")->check(CLI::PositiveNumber);
  mem->add_option("expr", expr)->required();
  command(mem, "member", [&] { return downup::cli::member(params, expr, n); });

  auto* bim = app.add_subcommand("bimod", "class in <omega>/<omega>^2");
  params_opt(bim);
  bim->add_option("expr", expr, "element of <omega>");
  bim->add_flag("--formula", formula, "evaluate the closed-form action on [u^i omega d^l] instead");
  bim->add_option("--i", i_index);
  bim->add_option("--l", l_index);
  bim->add_option("--side", side)->check(CLI::IsMember({"left", "right"}));
  command(bim, "bimod", [&] {
    if (formula) return downup::cli::bimod_formula(params, i_index, l_index, side);
    if (expr.empty()) throw CLI::RequiredError("expr");
    return downup::cli::bimod(params, expr);
  });

  auto* proj = app.add_subcommand("project", "image in A/<omega> (quantum plane or Weyl algebra)");
  params_opt(proj);
  proj->add_option("expr", expr)->required();
  command(proj, "project", [&] { return downup::cli::project(params, expr); });

  auto* qn = app.add_subcommand("qnf", "normal form x^i y^l in K<x,y>/(yx - alpha xy - c)");
  qn->add_option("--alpha", alpha)->required();
  qn->add_option("--constant", constant, "0 for the quantum plane, 1 for the quantum Weyl algebra");
  qn->add_option("expr", expr, "expression in x, y")->required();
  command(qn, "qnf", [&] { return downup::cli::qnf(alpha, constant, expr); });

  auto* ab = app.add_subcommand("abel", "abelianization and its invariants");
  params_opt(ab);
  command(ab, "abel", [&] { return downup::cli::abel(params); });

  auto* tr = app.add_subcommand("tor", "dimensions of Tor_k(T1, T2), k = 0..3, for one-dimensional modules");
  params_opt(tr);
  tr->add_option("--t1", t1, "delta,mu")->required();
  tr->add_option("--t2", t2, "delta,mu")->required();
  tr->add_flag("--mechanical", mechanical, "apply the functor to the resolution directly (any beta)");
  command(tr, "tor", [&] { return downup::cli::tor(params, t1, t2, mechanical); });

  auto* tb = app.add_subcommand("torbound", "largest sampled dim Tor_1 (beta = 0)");
  params_opt(tb);
  tb->add_option("--samples", samples);
  command(tb, "torbound", [&] { return downup::cli::torbound(params, samples); });

  auto* cl = app.add_subcommand("classify", "types, isomorphism verdicts and invariants");
  cl->require_subcommand(1, 1);
  auto* ct = cl->add_subcommand("type", "type a, b, c or d");
  params_opt(ct);
  command(ct, "classify type", [&] { return downup::cli::classify_type(params); });
  auto* ci = cl->add_subcommand("iso", "isomorphism verdict with the deciding clause");
  ci->add_option("--left", left)->required();
  ci->add_option("--right", right)->required();
  command(ci, "classify iso", [&] { return downup::cli::classify_iso(left, right); });
  auto* cm = cl->add_subcommand("monomial", "whether A is a monomial algebra");
  params_opt(cm);
  command(cm, "classify monomial", [&] { return downup::cli::classify_monomial(params); });
  auto* cr = cl->add_subcommand("report", "side-by-side separating invariants (beta = 0)");
  cr->add_option("--left", left)->required();
  cr->add_option("--right", right)->required();
  cr->add_option("--samples", samples);
  command(cr, "classify report", [&] { return downup::cli::classify_report(left, right, samples); });

  auto* lm = app.add_subcommand("lambda", "the sequence Lambda_0 .. Lambda_max");
  lm->add_option("--alpha", alpha)->required();
  lm->add_option("--max", m_max);
  command(lm, "lambda", [&] { return downup::cli::lambda(alpha, m_max); });

  auto* qa = app.add_subcommand("quiver-abel", "abelianization and Tor_1 table of a monomial algebra");
  qa->add_option("file", file, "quiver description (JSON or line format)")->required();
  command(qa, "quiver-abel", [&] { return downup::cli::quiver_abel(file); });

  auto* ver = app.add_subcommand("verify", "run the acceptance criteria and the property suite");
  ver->add_option("--only", only)->check(CLI::IsMember({"criteria", "properties"}));
  command(ver, "verify", [&] { return downup::cli::verify(only); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    CLI::App* failing = &app;
    for (auto* sub = &app; !sub->get_subcommands().empty();) failing = sub = sub->get_subcommands().front();
    std::cerr << failing->help("", CLI::AppFormatMode::Sub);
    return 2;
  }

  Reply reply;
  try {
    reply = inv.run();
  } catch (const downup::UnknownLetterError& e) {
    return usage_error(inv, e.letter(), e.what());
  } catch (const downup::ParseError& e) {
    return usage_error(inv, {}, e.what());
  } catch (const CLI::RequiredError& e) {
    return usage_error(inv, {}, e.what());
  } catch (const downup::DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    return usage_error(inv, {}, e.what());
  }

  if (json_out) {
    const nlohmann::json doc{{"subcommand", inv.name},
                             {"inputs", reply.inputs},
                             {"result", reply.result},
                             {"provenance", reply.provenance}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << reply.text;
  }
  return reply.exit_code;
}
