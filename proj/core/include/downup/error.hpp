#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace downup {

/// Malformed input text (expressions, parameter lists, quiver files).
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An identifier that is not part of the declared alphabet.
class UnknownLetterError : public std::invalid_argument {
 public:
  UnknownLetterError(const std::string& letter, std::size_t position)
      : std::invalid_argument("unknown letter '" + letter + "' at position " +
                              std::to_string(position)),
        letter_(letter),
        position_(position) {}

  const std::string& letter() const noexcept { return letter_; }
  std::size_t position() const noexcept { return position_; }

 private:
  std::string letter_;
  std::size_t position_;
};

class AlphabetMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called outside the parameter range where it is defined.
class DomainError : public std::domain_error {
 public:
  enum class Kind {
    BetaNonzero,
    AlphaIsOne,
    UnsupportedParams,
    NotInIdeal,
    InvalidModule,
    WrongStage,
    LambdaDomain,
    InvalidRule,
    InvalidQuiver,
  };

  DomainError(Kind kind, const std::string& what)
      : std::domain_error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

}  // namespace downup
