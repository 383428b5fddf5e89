#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "downup/quotients.hpp"

namespace downup {

struct Arrow {
  std::string id;
  std::string source;
  std::string target;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Finite quiver with opaque string ids. Vertices and arrows are kept sorted
/// by id.
class Quiver {
 public:
  /// Throws DomainError(InvalidQuiver) on duplicate ids or undeclared endpoints.
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  const Arrow& arrow(std::string_view id) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

/// KQ/I with I generated by paths of length >= 2. A relation lists arrow ids
/// in written order a_n ... a_1, so a_1 is traversed first.
class MonomialAlgebra {
 public:
  MonomialAlgebra(Quiver quiver, std::vector<std::vector<std::string>> relations);

  const Quiver& quiver() const noexcept { return quiver_; }
  const std::vector<std::vector<std::string>>& relations() const noexcept { return relations_; }

 private:
  Quiver quiver_;
  std::vector<std::vector<std::string>> relations_;
};

/// One summand per vertex e (sorted): K[X_a : a a loop at e] modulo the
/// monomials of relations made only of loops at e; K when e has no loops.
AbelianPresentation monomial_abelianization(const MonomialAlgebra& algebra);

/// Entry (e, e') counts the arrows a with target e and source e', which is
/// dim Tor_1(T_e, T_e') for the simple modules.
std::map<std::pair<std::string, std::string>, unsigned> arrow_tor_table(
    const MonomialAlgebra& algebra);

/// One vertex, loops d and u, relations d d u and d u u: the algebra A(0,0,0).
MonomialAlgebra zero_downup_quiver();

/// Reads either JSON
///   {"vertices": [...], "arrows": [{"id":..,"source":..,"target":..}],
///    "relations": [["d","d","u"], ...]}
/// or the line format "vertex e" / "arrow id source target" / "relation a_n ... a_1"
/// with '#' comments. Throws ParseError or DomainError(InvalidQuiver).
MonomialAlgebra parse_quiver(std::string_view text);

}  // namespace downup
