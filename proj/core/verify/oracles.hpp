#pragma once

// Brute-force reference computations. Nothing here calls the rewriting
// engine or the presentation code it is used to check.

#include <cstddef>
#include <map>
#include <vector>

#include "downup/expr.hpp"
#include "downup/quotients.hpp"

namespace downup::oracle {

/// Every word over {0..alphabet_size-1} of length <= max_length.
std::vector<Word> all_words(std::size_t alphabet_size, std::size_t max_length);

/// u^i (du)^j d^k with d = 0, u = 1, of length <= max_length, built directly.
std::vector<Word> pbw_words(std::size_t max_length);

/// Rank of a set of sparse vectors (Gauss-Jordan with division).
template <class Key>
std::size_t span_rank(std::vector<std::map<Key, Scalar>> rows);

/// dim of K[x_1..x_n]_deg / (span of m * g over generators g and monomials m)
/// for homogeneous generators, for each deg = 0..max_degree.
std::vector<std::size_t> quotient_dimensions(const std::vector<CommPoly>& generators,
                                             std::size_t nvars, unsigned max_degree);

/// Reference expansion of (d+u)(d-u) over {d,u}, written out term by term.
NcPoly expand_difference_of_squares();

// --- template definition ---------------------------------------------------

template <class Key>
std::size_t span_rank(std::vector<std::map<Key, Scalar>> rows) {
  std::size_t rank = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto& pivot_row = rows[i];
    // drop explicit zeros
    for (auto it = pivot_row.begin(); it != pivot_row.end();)
      it = sgn(it->second) == 0 ? pivot_row.erase(it) : std::next(it);
    if (pivot_row.empty()) continue;
    ++rank;
    const Key pivot = pivot_row.begin()->first;
    const Scalar pv = pivot_row.begin()->second;
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      auto it = rows[j].find(pivot);
      if (it == rows[j].end()) continue;
      const Scalar factor = it->second / pv;
      for (const auto& [k, v] : pivot_row) {
        rows[j][k] -= factor * v;
        if (sgn(rows[j][k]) == 0) rows[j].erase(k);
      }
    }
  }
  return rank;
}

}  // namespace downup::oracle
