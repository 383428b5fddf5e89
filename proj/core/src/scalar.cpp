#include "downup/scalar.hpp"

#include <cctype>

#include "downup/error.hpp"

namespace downup {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Scalar rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

Scalar parse_scalar(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                         : body.substr(slash + 1);
  if (!all_digits(num))
    throw ParseError("malformed rational '" + std::string(text) + "'", 0);
  if (!all_digits(den))
    throw ParseError("malformed rational '" + std::string(text) + "'", num.size() + 1);
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", slash + 1);
  Scalar value(negative ? mpz_class(-n) : n, d);
  value.canonicalize();
  return value;
}

std::string to_string(const Scalar& value) { return value.get_str(); }

Scalar power(const Scalar& x, unsigned n) {
  Scalar result = 1;
  for (unsigned k = 0; k < n; ++k) result *= x;
  return result;
}

Scalar geometric_sum(const Scalar& x, unsigned n) {
  Scalar sum = 0;
  Scalar term = 1;
  for (unsigned k = 0; k < n; ++k) {
    sum += term;
    term *= x;
  }
  return sum;
}

}  // namespace downup
