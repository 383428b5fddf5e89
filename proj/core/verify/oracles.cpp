#include "oracles.hpp"

#include <numeric>

namespace downup::oracle {

std::vector<Word> all_words(std::size_t alphabet_size, std::size_t max_length) {
  std::vector<Word> out{Word{}};
  std::vector<Word> layer{Word{}};
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (std::size_t l = 0; l < alphabet_size; ++l) next.push_back(w * Word{static_cast<Letter>(l)});
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

std::vector<Word> pbw_words(std::size_t max_length) {
  std::vector<Word> out;
  for (std::size_t i = 0; i <= max_length; ++i)
    for (std::size_t j = 0; i + 2 * j <= max_length; ++j)
      for (std::size_t k = 0; i + 2 * j + k <= max_length; ++k) {
        std::vector<Letter> letters(i, 1);
        for (std::size_t r = 0; r < j; ++r) {
          letters.push_back(0);
          letters.push_back(1);
        }
        letters.insert(letters.end(), k, 0);
        out.emplace_back(std::move(letters));
      }
  return out;
}

namespace {

std::vector<std::vector<unsigned>> compositions(std::size_t nvars, unsigned degree) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur(nvars, 0);
  auto rec = [&](auto&& self, std::size_t idx, unsigned left) -> void {
    if (idx + 1 == nvars) {
      cur[idx] = left;
      out.push_back(cur);
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      cur[idx] = k;
      self(self, idx + 1, left - k);
    }
  };
  if (nvars == 0) {
    if (degree == 0) out.emplace_back();
  } else {
    rec(rec, 0, degree);
  }
  return out;
}

}  // namespace

std::vector<std::size_t> quotient_dimensions(const std::vector<CommPoly>& generators,
                                             std::size_t nvars, unsigned max_degree) {
  std::vector<std::size_t> dims;
  for (unsigned deg = 0; deg <= max_degree; ++deg) {
    const auto monomials = compositions(nvars, deg);
    std::vector<std::map<std::vector<unsigned>, Scalar>> rows;
    for (const auto& g : generators) {
      if (g.is_zero()) continue;
      const auto& lead = g.terms().begin()->first;
      const unsigned gdeg = std::accumulate(lead.begin(), lead.end(), 0u);
      if (gdeg > deg) continue;
      for (const auto& m : compositions(nvars, deg - gdeg)) {
        std::map<std::vector<unsigned>, Scalar> row;
        for (const auto& [e, c] : g.terms()) {
          std::vector<unsigned> product(nvars);
          for (std::size_t i = 0; i < nvars; ++i) product[i] = e[i] + m[i];
          row[product] += c;
        }
        rows.push_back(std::move(row));
      }
    }
    dims.push_back(monomials.size() - span_rank(std::move(rows)));
  }
  return dims;
}

NcPoly expand_difference_of_squares() {
  // (d+u)(d-u) = dd - du + ud - uu
  const auto a = make_alphabet({"d", "u"});
  NcPoly p(a);
  p.add_term(Word{0, 0}, 1);
  p.add_term(Word{0, 1}, -1);
  p.add_term(Word{1, 0}, 1);
  p.add_term(Word{1, 1}, -1);
  return p;
}

}  // namespace downup::oracle
