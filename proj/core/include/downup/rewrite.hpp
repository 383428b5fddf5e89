#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "downup/expr.hpp"

namespace downup {

/// Oriented relation lhs -> rhs. Every word of rhs must be smaller than lhs
/// in the degree-lexicographic order of the alphabet.
struct RewriteRule {
  Word lhs;
  NcPoly rhs;
};

class RuleSet {
 public:
  /// Throws DomainError(InvalidRule) on an empty lhs, a duplicate lhs, or an
  /// rhs that is not strictly below its lhs.
  RuleSet(AlphabetPtr alphabet, std::vector<RewriteRule> rules);

  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  const std::vector<RewriteRule>& rules() const noexcept { return rules_; }
  std::size_t max_lhs_length() const noexcept { return max_lhs_; }

 private:
  AlphabetPtr alphabet_;
  std::vector<RewriteRule> rules_;
  std::size_t max_lhs_ = 0;
};

/// One place where a rule applies inside a word.
struct RewriteSite {
  std::size_t rule;
  std::size_t position;
};

/// All rule occurrences in `word`, sorted by decreasing lhs and then by
/// position; the first entry is the default leftmost-largest choice.
std::vector<RewriteSite> rewrite_sites(const Word& word, const RuleSet& rules);

bool is_normal(const Word& word, const RuleSet& rules);

/// Picks one of the (nonempty) candidate sites.
using SiteChooser = std::function<std::size_t(std::span<const RewriteSite>)>;

/// Normal form modulo the two-sided ideal generated by {lhs - rhs}. Always
/// rewrites the largest remaining word first, at the leftmost occurrence of
/// the largest matching lhs.
NcPoly reduce(const NcPoly& p, const RuleSet& rules);

/// Same, with the choice of site inside the current word delegated. Used to
/// test that normal forms do not depend on the reduction order.
NcPoly reduce(const NcPoly& p, const RuleSet& rules, const SiteChooser& choose);

/// An overlap or inclusion ambiguity together with the difference of its two
/// fully reduced one-step rewrites.
struct CriticalPair {
  Word overlap;
  std::size_t first_rule;
  std::size_t second_rule;
  NcPoly residual;
};

/// Every ambiguity whose word has length <= max_degree. The rule set is
/// locally confluent up to that degree iff all residuals vanish.
std::vector<CriticalPair> critical_pairs(const RuleSet& rules, std::size_t max_degree);

bool all_resolve(std::span<const CriticalPair> pairs);

}  // namespace downup
