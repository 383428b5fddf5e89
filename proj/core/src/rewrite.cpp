#include "downup/rewrite.hpp"

#include <algorithm>

#include "downup/error.hpp"

namespace downup {

RuleSet::RuleSet(AlphabetPtr alphabet, std::vector<RewriteRule> rules)
    : alphabet_(std::move(alphabet)), rules_(std::move(rules)) {
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const auto& rule = rules_[i];
    if (rule.lhs.empty())
      throw DomainError(DomainError::Kind::InvalidRule, "rule with empty left-hand side");
    if (!(*rule.rhs.alphabet() == *alphabet_))
      throw AlphabetMismatchError("rule right-hand side over a different alphabet");
    for (const auto& [w, c] : rule.rhs.terms())
      if (!(w < rule.lhs))
        throw DomainError(DomainError::Kind::InvalidRule,
                          "rule " + to_string(rule.lhs, *alphabet_) +
                              " is not compatible with the monomial order");
    for (std::size_t j = 0; j < i; ++j)
      if (rules_[j].lhs == rule.lhs)
        throw DomainError(DomainError::Kind::InvalidRule, "duplicate left-hand side " +
                                                              to_string(rule.lhs, *alphabet_));
    max_lhs_ = std::max(max_lhs_, rule.lhs.size());
  }
}

std::vector<RewriteSite> rewrite_sites(const Word& word, const RuleSet& rules) {
  std::vector<RewriteSite> sites;
  const auto& rs = rules.rules();
  for (std::size_t r = 0; r < rs.size(); ++r) {
    std::size_t from = 0;
    while (auto pos = word.find(rs[r].lhs, from)) {
      sites.push_back({r, *pos});
      from = *pos + 1;
    }
  }
  std::sort(sites.begin(), sites.end(), [&](const RewriteSite& a, const RewriteSite& b) {
    if (a.rule != b.rule) return rs[a.rule].lhs > rs[b.rule].lhs;
    return a.position < b.position;
  });
  return sites;
}

bool is_normal(const Word& word, const RuleSet& rules) {
  for (const auto& rule : rules.rules())
    if (word.find(rule.lhs)) return false;
  return true;
}

namespace {

NcPoly apply_site(const Word& word, const Scalar& c, const RewriteSite& site,
                  const RuleSet& rules) {
  const auto& rule = rules.rules()[site.rule];
  const Word prefix = word.subword(0, site.position);
  const std::size_t tail = site.position + rule.lhs.size();
  const Word suffix = word.subword(tail, word.size() - tail);
  NcPoly out(rules.alphabet());
  for (const auto& [w, k] : rule.rhs.terms()) out.add_term(prefix * w * suffix, c * k);
  return out;
}

}  // namespace

NcPoly reduce(const NcPoly& p, const RuleSet& rules, const SiteChooser& choose) {
  if (!(*p.alphabet() == *rules.alphabet()))
    throw AlphabetMismatchError("polynomial and rule set over different alphabets");
  // Words are popped in strictly decreasing order because every rewrite only
  // produces smaller words, so a word placed in `result` is final.
  NcPoly work = p;
  NcPoly result(rules.alphabet());
  while (!work.is_zero()) {
    const Word word = work.leading_word();
    const Scalar c = work.coefficient(word);
    work.add_term(word, -c);
    const auto sites = rewrite_sites(word, rules);
    if (sites.empty()) {
      result.add_term(word, c);
      continue;
    }
    const std::size_t pick = choose ? choose(sites) : 0;
    work += apply_site(word, c, sites.at(pick), rules);
  }
  return result;
}

NcPoly reduce(const NcPoly& p, const RuleSet& rules) { return reduce(p, rules, SiteChooser{}); }

std::vector<CriticalPair> critical_pairs(const RuleSet& rules, std::size_t max_degree) {
  if (max_degree < rules.max_lhs_length())
    throw std::invalid_argument("max_degree below the longest left-hand side");
  const auto& rs = rules.rules();
  const auto& alphabet = rules.alphabet();
  std::vector<CriticalPair> pairs;

  auto record = [&](const Word& overlap, std::size_t i, std::size_t j, const NcPoly& left,
                    const NcPoly& right) {
    pairs.push_back({overlap, i, j, reduce(left, rules) - reduce(right, rules)});
  };

  for (std::size_t i = 0; i < rs.size(); ++i) {
    const Word& a = rs[i].lhs;
    for (std::size_t j = 0; j < rs.size(); ++j) {
      const Word& b = rs[j].lhs;
      // Proper overlaps: a suffix of a equals a prefix of b.
      for (std::size_t k = 1; k < std::min(a.size(), b.size()); ++k) {
        if (a.subword(a.size() - k, k) != b.subword(0, k)) continue;
        const Word b_tail = b.subword(k, b.size() - k);
        const Word a_head = a.subword(0, a.size() - k);
        const Word overlap = a * b_tail;
        if (overlap.size() > max_degree) continue;
        record(overlap, i, j, rs[i].rhs * NcPoly::monomial(alphabet, b_tail),
               NcPoly::monomial(alphabet, a_head) * rs[j].rhs);
      }
      // Inclusions: b occurs strictly inside a.
      if (i != j && b.size() < a.size() && a.size() <= max_degree) {
        std::size_t from = 0;
        while (auto pos = a.find(b, from)) {
          const Word head = a.subword(0, *pos);
          const Word tail = a.subword(*pos + b.size(), a.size() - *pos - b.size());
          record(a, i, j, rs[i].rhs,
                 NcPoly::monomial(alphabet, head) * rs[j].rhs * NcPoly::monomial(alphabet, tail));
          from = *pos + 1;
        }
      }
    }
  }
  return pairs;
}

bool all_resolve(std::span<const CriticalPair> pairs) {
  return std::all_of(pairs.begin(), pairs.end(),
                     [](const CriticalPair& p) { return p.residual.is_zero(); });
}

}  // namespace downup
