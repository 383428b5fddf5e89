#pragma once

#include <cstdint>
#include <random>

#include "downup/downup.hpp"
#include "downup/expr.hpp"
#include "downup/homology.hpp"

namespace downup::testing {

/// Deterministic generator of small test inputs.
class Random {
 public:
  explicit Random(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi);
  /// p/q with |p| <= bound and 1 <= q <= bound.
  Scalar rational(int bound = 20);
  Scalar nonzero_rational(int bound = 20);
  /// A nonzero rational avoiding every value in `excluded`.
  Scalar rational_avoiding(std::initializer_list<int> excluded, int bound = 20);

  Params params();
  Params params_beta_zero();
  Params params_beta_nonzero();

  Word word(std::size_t alphabet_size, std::size_t length);
  /// Up to `max_terms` terms with word lengths <= max_degree.
  NcPoly poly(const AlphabetPtr& alphabet, std::size_t max_degree, std::size_t max_terms = 4);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace downup::testing
