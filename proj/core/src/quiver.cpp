#include "downup/quiver.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "downup/error.hpp"

namespace downup {

namespace {

[[noreturn]] void invalid(const std::string& what) {
  throw DomainError(DomainError::Kind::InvalidQuiver, what);
}

}  // namespace

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    invalid("duplicate vertex id");
  std::sort(arrows_.begin(), arrows_.end(),
            [](const Arrow& a, const Arrow& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    const auto& a = arrows_[i];
    if (i > 0 && arrows_[i - 1].id == a.id) invalid("duplicate arrow id '" + a.id + "'");
    if (!std::binary_search(vertices_.begin(), vertices_.end(), a.source) ||
        !std::binary_search(vertices_.begin(), vertices_.end(), a.target))
      invalid("arrow '" + a.id + "' has an undeclared endpoint");
  }
}

const Arrow& Quiver::arrow(std::string_view id) const {
  auto it = std::lower_bound(arrows_.begin(), arrows_.end(), id,
                             [](const Arrow& a, std::string_view key) { return a.id < key; });
  if (it == arrows_.end() || it->id != id) invalid("unknown arrow '" + std::string(id) + "'");
  return *it;
}

MonomialAlgebra::MonomialAlgebra(Quiver quiver, std::vector<std::vector<std::string>> relations)
    : quiver_(std::move(quiver)), relations_(std::move(relations)) {
  for (const auto& path : relations_) {
    if (path.size() < 2) invalid("relations must be paths of length at least 2");
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
      // path[k+1] is traversed right before path[k].
      if (quiver_.arrow(path[k]).source != quiver_.arrow(path[k + 1]).target)
        invalid("relation is not a composable path at '" + path[k] + "'");
    }
    quiver_.arrow(path.back());
  }
}

AbelianPresentation monomial_abelianization(const MonomialAlgebra& algebra) {
  const auto& q = algebra.quiver();
  AbelianPresentation pres;
  for (const auto& e : q.vertices()) {
    std::vector<std::string> loops;
    for (const auto& a : q.arrows())
      if (a.source == e && a.target == e) loops.push_back(a.id);
    if (loops.empty()) {
      pres.summands.push_back({Summand::Kind::BaseField, {}, {}});
      continue;
    }
    std::vector<std::string> vars;
    for (const auto& id : loops) vars.push_back("X_" + id);
    std::vector<CommPoly> relations;
    for (const auto& path : algebra.relations()) {
      Exponents exps(loops.size(), 0);
      bool all_loops = true;
      for (const auto& id : path) {
        auto it = std::find(loops.begin(), loops.end(), id);
        if (it == loops.end()) {
          all_loops = false;
          break;
        }
        ++exps[static_cast<std::size_t>(it - loops.begin())];
      }
      if (!all_loops) continue;
      CommPoly mono = CommPoly::monomial(vars, exps);
      if (std::find(relations.begin(), relations.end(), mono) == relations.end())
        relations.push_back(std::move(mono));
    }
    pres.summands.push_back({relations.empty() ? Summand::Kind::Polynomial
                                               : Summand::Kind::Quotient,
                             vars, std::move(relations)});
  }
  return pres;
}

std::map<std::pair<std::string, std::string>, unsigned> arrow_tor_table(
    const MonomialAlgebra& algebra) {
  const auto& q = algebra.quiver();
  std::map<std::pair<std::string, std::string>, unsigned> table;
  for (const auto& e : q.vertices())
    for (const auto& e2 : q.vertices()) table[{e, e2}] = 0;
  for (const auto& a : q.arrows()) ++table[{a.target, a.source}];
  return table;
}

MonomialAlgebra zero_downup_quiver() {
  Quiver q({"e"}, {{"d", "e", "e"}, {"u", "e", "e"}});
  return MonomialAlgebra(std::move(q), {{"d", "d", "u"}, {"d", "u", "u"}});
}

namespace {

MonomialAlgebra parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid quiver JSON: ") + e.what(), e.byte);
  }
  try {
    std::vector<std::string> vertices = doc.at("vertices").get<std::vector<std::string>>();
    std::vector<Arrow> arrows;
    for (const auto& a : doc.at("arrows"))
      arrows.push_back({a.at("id").get<std::string>(), a.at("source").get<std::string>(),
                        a.at("target").get<std::string>()});
    std::vector<std::vector<std::string>> relations;
    if (doc.contains("relations"))
      relations = doc.at("relations").get<std::vector<std::vector<std::string>>>();
    return MonomialAlgebra(Quiver(std::move(vertices), std::move(arrows)), std::move(relations));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed quiver description: ") + e.what(), 0);
  }
}

MonomialAlgebra parse_lines(std::string_view text) {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<std::vector<std::string>> relations;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    const std::size_t line_start = offset;
    offset += line.size() + 1;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string keyword;
    if (!(fields >> keyword)) continue;
    std::vector<std::string> rest;
    for (std::string tok; fields >> tok;) rest.push_back(tok);
    if (keyword == "vertex" && rest.size() == 1) {
      vertices.push_back(rest[0]);
    } else if (keyword == "arrow" && rest.size() == 3) {
      arrows.push_back({rest[0], rest[1], rest[2]});
    } else if (keyword == "relation" && !rest.empty()) {
      relations.push_back(rest);
    } else {
      throw ParseError("unrecognized quiver line '" + line + "'", line_start);
    }
  }
  return MonomialAlgebra(Quiver(std::move(vertices), std::move(arrows)), std::move(relations));
}

}  // namespace

MonomialAlgebra parse_quiver(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_json(text);
  return parse_lines(text);
}

}  // namespace downup
