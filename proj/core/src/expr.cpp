#include "downup/expr.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "downup/error.hpp"

namespace downup {

Alphabet::Alphabet(std::vector<std::string> letters,
                   std::map<std::string, std::string> aliases)
    : letters_(std::move(letters)), aliases_(std::move(aliases)) {
  if (letters_.empty() || letters_.size() > 255)
    throw std::invalid_argument("alphabet must have between 1 and 255 letters");
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i].size() != 1 || !std::isalpha(static_cast<unsigned char>(letters_[i][0])))
      throw std::invalid_argument("alphabet letters must be single ASCII letters");
    for (std::size_t j = 0; j < i; ++j)
      if (letters_[i] == letters_[j])
        throw std::invalid_argument("duplicate letter '" + letters_[i] + "'");
  }
  for (const auto& [alias, target] : aliases_)
    if (std::find(letters_.begin(), letters_.end(), target) == letters_.end())
      throw std::invalid_argument("alias '" + alias + "' targets unknown letter");
}

std::optional<Letter> Alphabet::find(std::string_view name) const {
  std::string key(name);
  if (auto it = aliases_.find(key); it != aliases_.end()) key = it->second;
  auto it = std::find(letters_.begin(), letters_.end(), key);
  if (it == letters_.end()) return std::nullopt;
  return static_cast<Letter>(it - letters_.begin());
}

Letter Alphabet::at(std::string_view name) const {
  if (auto l = find(name)) return *l;
  throw std::out_of_range("no letter '" + std::string(name) + "' in alphabet");
}

AlphabetPtr make_alphabet(std::vector<std::string> letters,
                          std::map<std::string, std::string> aliases) {
  return std::make_shared<const Alphabet>(std::move(letters), std::move(aliases));
}

// ---------------------------------------------------------------------------

Word Word::subword(std::size_t pos, std::size_t len) const {
  return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                  letters_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

std::optional<std::size_t> Word::find(const Word& pattern, std::size_t from) const {
  if (pattern.size() > size()) return std::nullopt;
  for (std::size_t i = from; i + pattern.size() <= size(); ++i)
    if (std::equal(pattern.begin(), pattern.end(), letters_.begin() + static_cast<std::ptrdiff_t>(i)))
      return i;
  return std::nullopt;
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Letter> out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return Word(std::move(out));
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return b[i] <=> a[i];
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------

NcPoly::NcPoly(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {
  if (!alphabet_) throw std::invalid_argument("null alphabet");
}

NcPoly NcPoly::constant(AlphabetPtr alphabet, const Scalar& c) {
  return monomial(std::move(alphabet), Word{}, c);
}

NcPoly NcPoly::monomial(AlphabetPtr alphabet, Word word, const Scalar& c) {
  NcPoly p(std::move(alphabet));
  for (Letter l : word)
    if (l >= p.alphabet_->size()) throw std::out_of_range("letter outside alphabet");
  p.add_term(word, c);
  return p;
}

NcPoly NcPoly::letter(AlphabetPtr alphabet, std::string_view name) {
  const Letter l = alphabet->at(name);
  return monomial(std::move(alphabet), Word{l});
}

std::size_t NcPoly::degree() const {
  return terms_.empty() ? 0 : terms_.begin()->first.size();
}

Scalar NcPoly::coefficient(const Word& word) const {
  auto it = terms_.find(word);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void NcPoly::add_term(const Word& word, const Scalar& c) {
  if (downup::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(word, c);
  if (!inserted) {
    it->second += c;
    if (downup::is_zero(it->second)) terms_.erase(it);
  }
}

void NcPoly::require_same_alphabet(const NcPoly& other) const {
  if (alphabet_ != other.alphabet_ && !(*alphabet_ == *other.alphabet_))
    throw AlphabetMismatchError("polynomials over different alphabets");
}

NcPoly& NcPoly::operator+=(const NcPoly& other) {
  require_same_alphabet(other);
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& other) {
  require_same_alphabet(other);
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

NcPoly operator-(const NcPoly& a) {
  NcPoly out(a.alphabet_);
  for (const auto& [w, c] : a.terms_) out.terms_.emplace(w, -c);
  return out;
}

NcPoly operator*(const NcPoly& a, const NcPoly& b) {
  a.require_same_alphabet(b);
  NcPoly out(a.alphabet_);
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) out.add_term(wa * wb, ca * cb);
  return out;
}

NcPoly operator*(const Scalar& c, const NcPoly& a) {
  NcPoly out(a.alphabet_);
  if (downup::is_zero(c)) return out;
  for (const auto& [w, coeff] : a.terms_) out.terms_.emplace(w, c * coeff);
  return out;
}

bool operator==(const NcPoly& a, const NcPoly& b) {
  return *a.alphabet_ == *b.alphabet_ && a.terms_ == b.terms_;
}

NcPoly add(const NcPoly& p, const NcPoly& q) { return p + q; }
NcPoly mul(const NcPoly& p, const NcPoly& q) { return p * q; }
NcPoly scale(const Scalar& c, const NcPoly& p) { return c * p; }

NcPoly pow(const NcPoly& p, unsigned exponent) {
  NcPoly out = NcPoly::constant(p.alphabet(), 1);
  for (unsigned k = 0; k < exponent; ++k) out = out * p;
  return out;
}

NcPoly substitute(const NcPoly& p, AlphabetPtr target,
                  const std::function<NcPoly(Letter)>& image) {
  std::vector<NcPoly> images;
  images.reserve(p.alphabet()->size());
  for (std::size_t l = 0; l < p.alphabet()->size(); ++l)
    images.push_back(image(static_cast<Letter>(l)));
  NcPoly out(target);
  for (const auto& [w, c] : p.terms()) {
    NcPoly term = NcPoly::constant(target, c);
    for (Letter l : w) term = term * images[l];
    out += term;
  }
  return out;
}

// --- parser ----------------------------------------------------------------

namespace {

class Parser {
 public:
  Parser(std::string_view text, AlphabetPtr alphabet)
      : text_(text), alphabet_(std::move(alphabet)) {}

  NcPoly run() {
    skip_ws();
    if (at_end()) throw ParseError("empty expression", pos_);
    NcPoly result = expression();
    skip_ws();
    if (!at_end())
      throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return result;
  }

 private:
  NcPoly expression() {
    NcPoly acc(alphabet_);
    bool negate = false;
    skip_ws();
    if (peek('+') || peek('-')) negate = text_[pos_++] == '-';
    NcPoly t = term();
    acc += negate ? -t : t;
    for (;;) {
      skip_ws();
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  NcPoly term() {
    NcPoly acc = factor();
    for (;;) {
      skip_ws();
      if (peek('*')) {
        ++pos_;
        acc = acc * factor();
      } else if (starts_factor()) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  NcPoly factor() {
    NcPoly base = primary();
    skip_ws();
    if (peek('^')) {
      ++pos_;
      skip_ws();
      const std::size_t start = pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        throw ParseError("expected nonnegative integer exponent", pos_);
      unsigned long exponent = 0;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        exponent = exponent * 10 + static_cast<unsigned long>(text_[pos_] - '0');
        if (exponent > 10000) throw ParseError("exponent too large", start);
        ++pos_;
      }
      base = pow(base, static_cast<unsigned>(exponent));
    }
    return base;
  }

  NcPoly primary() {
    skip_ws();
    if (at_end()) throw ParseError("unexpected end of expression", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      NcPoly inner = expression();
      skip_ws();
      if (!peek(')')) throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return NcPoly::constant(alphabet_, number());
    if (std::isalpha(static_cast<unsigned char>(c)) || static_cast<unsigned char>(c) >= 0x80)
      return identifier();
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  Scalar number() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (peek('/')) {
      ++pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        throw ParseError("expected denominator", pos_);
      while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    try {
      return parse_scalar(text_.substr(start, pos_ - start));
    } catch (const ParseError&) {
      throw ParseError("zero denominator", start);
    }
  }

  NcPoly identifier() {
    // Aliases are matched longest-first so that for example "omega" wins over
    // a plain letter "o".
    std::vector<std::string> aliases;
    for (const auto& [alias, target] : alphabet_->aliases()) aliases.push_back(alias);
    std::sort(aliases.begin(), aliases.end(),
              [](const std::string& a, const std::string& b) { return a.size() > b.size(); });
    for (const auto& alias : aliases) {
      if (text_.substr(pos_, alias.size()) == alias) {
        pos_ += alias.size();
        return NcPoly::letter(alphabet_, alias);
      }
    }
    const std::size_t start = pos_;
    if (static_cast<unsigned char>(text_[pos_]) >= 0x80) {
      std::size_t end = pos_ + 1;
      while (end < text_.size() && (static_cast<unsigned char>(text_[end]) & 0xC0) == 0x80) ++end;
      throw UnknownLetterError(std::string(text_.substr(start, end - start)), start);
    }
    const std::string name(1, text_[pos_]);
    auto letter = alphabet_->find(name);
    if (!letter) throw UnknownLetterError(name, start);
    ++pos_;
    return NcPoly::monomial(alphabet_, Word{*letter});
  }

  bool starts_factor() const {
    if (at_end()) return false;
    const unsigned char c = static_cast<unsigned char>(text_[pos_]);
    return c == '(' || std::isalnum(c) || c >= 0x80;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  bool peek(char c) const { return !at_end() && text_[pos_] == c; }

  std::string_view text_;
  AlphabetPtr alphabet_;
  std::size_t pos_ = 0;
};

}  // namespace

NcPoly parse(std::string_view text, AlphabetPtr alphabet) {
  return Parser(text, std::move(alphabet)).run();
}

// --- printer ---------------------------------------------------------------

std::string to_string(const Word& w, const Alphabet& alphabet) {
  if (w.empty()) return "1";
  std::ostringstream out;
  std::size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    std::size_t run = 1;
    while (i + run < w.size() && w[i + run] == w[i]) ++run;
    if (!first) out << '*';
    out << alphabet.name(w[i]);
    if (run > 1) out << '^' << run;
    first = false;
    i += run;
  }
  return out.str();
}

std::string to_string(const NcPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : p.terms()) {
    const bool negative = sgn(c) < 0;
    const Scalar magnitude = abs(c);
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    if (w.empty()) {
      out << magnitude.get_str();
    } else {
      if (magnitude != 1) out << magnitude.get_str() << '*';
      out << to_string(w, *p.alphabet());
    }
    first = false;
  }
  return out.str();
}

}  // namespace downup
