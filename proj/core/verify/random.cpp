#include "random.hpp"

#include <algorithm>

namespace downup::testing {

int Random::integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

Scalar Random::rational(int bound) {
  Scalar q(integer(-bound, bound), integer(1, bound));
  q.canonicalize();
  return q;
}

Scalar Random::nonzero_rational(int bound) {
  Scalar q = 0;
  while (is_zero(q)) q = rational(bound);
  return q;
}

Scalar Random::rational_avoiding(std::initializer_list<int> excluded, int bound) {
  for (;;) {
    Scalar q = nonzero_rational(bound);
    if (std::none_of(excluded.begin(), excluded.end(), [&](int v) { return q == v; })) return q;
  }
}

Params Random::params() { return {rational(), rational(), rational()}; }
Params Random::params_beta_zero() { return {rational(), 0, rational()}; }
Params Random::params_beta_nonzero() { return {rational(), nonzero_rational(), rational()}; }

Word Random::word(std::size_t alphabet_size, std::size_t length) {
  std::vector<Letter> letters(length);
  for (auto& l : letters) l = static_cast<Letter>(integer(0, static_cast<int>(alphabet_size) - 1));
  return Word(std::move(letters));
}

NcPoly Random::poly(const AlphabetPtr& alphabet, std::size_t max_degree, std::size_t max_terms) {
  NcPoly p(alphabet);
  const int terms = integer(1, static_cast<int>(max_terms));
  for (int t = 0; t < terms; ++t)
    p.add_term(word(alphabet->size(), static_cast<std::size_t>(integer(0, static_cast<int>(max_degree)))),
               nonzero_rational(9));
  return p;
}

}  // namespace downup::testing
