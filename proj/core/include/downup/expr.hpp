#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "downup/scalar.hpp"

namespace downup {

/// Index of a letter inside its alphabet. Smaller index means higher
/// precedence in the degree-lexicographic order.
using Letter = std::uint8_t;

/// A finite set of single-character letters listed in precedence order
/// (highest first), plus optional multi-character aliases for parsing.
class Alphabet {
 public:
  Alphabet(std::vector<std::string> letters,
           std::map<std::string, std::string> aliases = {});

  std::size_t size() const noexcept { return letters_.size(); }
  const std::string& name(Letter letter) const { return letters_.at(letter); }
  const std::vector<std::string>& letters() const noexcept { return letters_; }
  const std::map<std::string, std::string>& aliases() const noexcept { return aliases_; }

  std::optional<Letter> find(std::string_view name) const;
  /// Like find(), but throws std::out_of_range for unknown names.
  Letter at(std::string_view name) const;

  bool operator==(const Alphabet& other) const { return letters_ == other.letters_; }

 private:
  std::vector<std::string> letters_;
  std::map<std::string, std::string> aliases_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::vector<std::string> letters,
                          std::map<std::string, std::string> aliases = {});

/// A monomial of the free algebra: a sequence of letters. The empty word is
/// the unit.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  static Word power(Letter letter, std::size_t exponent) {
    return Word(std::vector<Letter>(exponent, letter));
  }

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const noexcept { return letters_; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  Word subword(std::size_t pos, std::size_t len) const;
  /// Position of the leftmost occurrence of `pattern`, if any.
  std::optional<std::size_t> find(const Word& pattern, std::size_t from = 0) const;

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;
  /// Degree-lexicographic: longer words are larger; equal lengths compare
  /// letter by letter with smaller index meaning larger.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  std::vector<Letter> letters_;
};

/// Orders a term table from the largest word down.
struct DeglexDescending {
  bool operator()(const Word& a, const Word& b) const { return a > b; }
};

/// Sparse linear combination of words with exact rational coefficients.
/// Never stores a zero coefficient.
class NcPoly {
 public:
  using Terms = std::map<Word, Scalar, DeglexDescending>;

  explicit NcPoly(AlphabetPtr alphabet);

  static NcPoly constant(AlphabetPtr alphabet, const Scalar& c);
  static NcPoly monomial(AlphabetPtr alphabet, Word word, const Scalar& c = 1);
  static NcPoly letter(AlphabetPtr alphabet, std::string_view name);

  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  /// Length of the longest word; 0 for the zero polynomial.
  std::size_t degree() const;
  Scalar coefficient(const Word& word) const;
  /// Largest word; precondition: nonzero.
  const Word& leading_word() const { return terms_.begin()->first; }

  /// Accumulates c*word, erasing the entry if it cancels.
  void add_term(const Word& word, const Scalar& c);

  NcPoly& operator+=(const NcPoly& other);
  NcPoly& operator-=(const NcPoly& other);

  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
  friend NcPoly operator-(const NcPoly& a);
  friend NcPoly operator*(const NcPoly& a, const NcPoly& b);
  friend NcPoly operator*(const Scalar& c, const NcPoly& a);

  friend bool operator==(const NcPoly& a, const NcPoly& b);

 private:
  void require_same_alphabet(const NcPoly& other) const;

  AlphabetPtr alphabet_;
  Terms terms_;
};

NcPoly add(const NcPoly& p, const NcPoly& q);
NcPoly mul(const NcPoly& p, const NcPoly& q);
NcPoly scale(const Scalar& c, const NcPoly& p);
NcPoly pow(const NcPoly& p, unsigned exponent);

/// Parses the ASCII expression grammar: rationals `a` or `a/b`, single-letter
/// identifiers (plus declared aliases), `*` or juxtaposition, `+`, `-`,
/// `^` with a nonnegative integer exponent, parentheses.
NcPoly parse(std::string_view text, AlphabetPtr alphabet);

std::string to_string(const NcPoly& p);
std::string to_string(const Word& w, const Alphabet& alphabet);

/// Extends a letter map to an algebra homomorphism of free algebras.
NcPoly substitute(const NcPoly& p, AlphabetPtr target,
                  const std::function<NcPoly(Letter)>& image);

}  // namespace downup
