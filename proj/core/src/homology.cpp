#include "downup/homology.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "downup/error.hpp"
#include "downup/rewrite.hpp"

namespace downup {

namespace {

constexpr Letter kD = 0;
constexpr Letter kU = 1;

using RB = ResolutionBasis;

struct Piece {
  Word left;
  RB basis;
  Word right;
  Scalar coefficient;
};

std::vector<Piece> d1_image(RB b) {
  const Letter v = b == RB::D ? kD : kU;
  return {{Word{v}, RB::One, Word{}, 1}, {Word{}, RB::One, Word{v}, -1}};
}

std::vector<Piece> d2_image(RB b, const Params& p) {
  const Scalar& a = p.alpha;
  const Scalar& be = p.beta;
  const Scalar& g = p.gamma;
  if (b == RB::DDU) {
    return {
        {Word{}, RB::D, Word{kD, kU}, 1},   {Word{kD}, RB::D, Word{kU}, 1},
        {Word{kD, kD}, RB::U, Word{}, 1},   {Word{}, RB::D, Word{kU, kD}, -a},
        {Word{kD}, RB::U, Word{kD}, -a},    {Word{kD, kU}, RB::D, Word{}, -a},
        {Word{}, RB::U, Word{kD, kD}, -be}, {Word{kU}, RB::D, Word{kD}, -be},
        {Word{kU, kD}, RB::D, Word{}, -be}, {Word{}, RB::D, Word{}, -g},
    };
  }
  return {
      {Word{}, RB::D, Word{kU, kU}, 1},   {Word{kD}, RB::U, Word{kU}, 1},
      {Word{kD, kU}, RB::U, Word{}, 1},   {Word{}, RB::U, Word{kD, kU}, -a},
      {Word{kU}, RB::D, Word{kU}, -a},    {Word{kU, kD}, RB::U, Word{}, -a},
      {Word{}, RB::U, Word{kU, kD}, -be}, {Word{kU}, RB::U, Word{kD}, -be},
      {Word{kU, kU}, RB::D, Word{}, -be}, {Word{}, RB::U, Word{}, -g},
  };
}

std::vector<Piece> d3_image(const Params& p) {
  return {
      {Word{kD}, RB::DUU, Word{}, 1},
      {Word{}, RB::DUU, Word{kD}, p.beta},
      {Word{}, RB::DDU, Word{kU}, -1},
      {Word{kU}, RB::DDU, Word{}, -p.beta},
  };
}

std::vector<Piece> image_of(RB b, const Params& params) {
  switch (stage_of(b)) {
    case 1: return d1_image(b);
    case 2: return d2_image(b, params);
    case 3: return d3_image(params);
    default: throw std::logic_error("stage 0 has no differential");
  }
}

BimoduleElement apply_differential(int stage, const BimoduleElement& x, const Params& params) {
  if (x.stage() != stage)
    throw DomainError(DomainError::Kind::WrongStage,
                      "d" + std::to_string(stage) + " applied to an element of stage " +
                          std::to_string(x.stage()));
  const auto& alphabet = downup_alphabet();
  BimoduleElement out(stage - 1);
  std::map<RB, std::vector<Piece>> images;
  for (const auto& [key, c] : x.terms()) {
    const auto& [left, basis, right] = key;
    auto it = images.find(basis);
    if (it == images.end()) it = images.emplace(basis, image_of(basis, params)).first;
    for (const auto& piece : it->second)
      out.add(NcPoly::monomial(alphabet, left * piece.left), piece.basis,
              NcPoly::monomial(alphabet, piece.right * right), c * piece.coefficient, params);
  }
  return out;
}

Scalar act(const Word& w, const OneDimModule& m) {
  Scalar value = 1;
  for (Letter l : w) value *= (l == kD ? m.delta : m.mu);
  return value;
}

void require_valid(const OneDimModule& m, const Params& params) {
  if (!satisfies_module_equations(m, params))
    throw DomainError(DomainError::Kind::InvalidModule,
                      "(" + to_string(m.delta) + "," + to_string(m.mu) +
                          ") is not a module over A(" + to_string(params) + ")");
}

}  // namespace

bool satisfies_module_equations(const OneDimModule& m, const Params& params) {
  const Scalar defect = (1 - params.alpha - params.beta) * m.delta * m.mu - params.gamma;
  return is_zero(m.delta * defect) && is_zero(m.mu * defect);
}

int stage_of(ResolutionBasis b) {
  switch (b) {
    case RB::One: return 0;
    case RB::D:
    case RB::U: return 1;
    case RB::DDU:
    case RB::DUU: return 2;
    case RB::DDUU: return 3;
  }
  return -1;
}

std::string to_string(ResolutionBasis b) {
  switch (b) {
    case RB::One: return "1";
    case RB::D: return "d";
    case RB::U: return "u";
    case RB::DDU: return "d^2*u";
    case RB::DUU: return "d*u^2";
    case RB::DDUU: return "d^2*u^2";
  }
  return "?";
}

std::vector<ResolutionBasis> stage_basis(int stage) {
  switch (stage) {
    case 0: return {RB::One};
    case 1: return {RB::D, RB::U};
    case 2: return {RB::DDU, RB::DUU};
    case 3: return {RB::DDUU};
    default: throw std::out_of_range("resolution stages are 0..3");
  }
}

BimoduleElement::BimoduleElement(int stage) : stage_(stage) {
  if (stage < 0 || stage > 3) throw std::out_of_range("resolution stages are 0..3");
}

BimoduleElement BimoduleElement::generator(ResolutionBasis b) {
  BimoduleElement x(stage_of(b));
  x.add_normal(Word{}, b, Word{}, 1);
  return x;
}

void BimoduleElement::add_normal(const Word& left, ResolutionBasis b, const Word& right,
                                 const Scalar& c) {
  if (downup::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(Key{left, b, right}, c);
  if (!inserted) {
    it->second += c;
    if (downup::is_zero(it->second)) terms_.erase(it);
  }
}

void BimoduleElement::add(const NcPoly& left, ResolutionBasis b, const NcPoly& right,
                          const Scalar& c, const Params& params) {
  if (stage_of(b) != stage_)
    throw DomainError(DomainError::Kind::WrongStage, "generator from another stage");
  const RuleSet rules = downup_rules(params);
  const NcPoly l = reduce(left, rules);
  const NcPoly r = reduce(right, rules);
  for (const auto& [wl, cl] : l.terms())
    for (const auto& [wr, cr] : r.terms()) add_normal(wl, b, wr, c * cl * cr);
}

std::string to_string(const BimoduleElement& x) {
  if (x.is_zero()) return "0";
  const auto& alphabet = *downup_alphabet();
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, c] : x.terms()) {
    const auto& [left, basis, right] = key;
    const bool negative = sgn(c) < 0;
    out << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    const Scalar magnitude = abs(c);
    if (magnitude != 1) out << magnitude.get_str() << '*';
    out << to_string(left, alphabet) << "(x)" << to_string(basis) << "(x)"
        << to_string(right, alphabet);
    first = false;
  }
  return out.str();
}

BimoduleElement apply_d1(const BimoduleElement& x, const Params& params) {
  return apply_differential(1, x, params);
}
BimoduleElement apply_d2(const BimoduleElement& x, const Params& params) {
  return apply_differential(2, x, params);
}
BimoduleElement apply_d3(const BimoduleElement& x, const Params& params) {
  return apply_differential(3, x, params);
}

TorComplex functor_complex(const OneDimModule& t1, const OneDimModule& t2, const Params& params) {
  require_valid(t1, params);
  require_valid(t2, params);
  TorComplex complex;
  Matrix* targets[] = {&complex.f0, &complex.f1, &complex.f2};
  for (int stage = 1; stage <= 3; ++stage) {
    Matrix& f = *targets[stage - 1];
    const auto sources = stage_basis(stage);
    const auto rows = stage_basis(stage - 1);
    for (std::size_t col = 0; col < sources.size(); ++col) {
      const auto image =
          apply_differential(stage, BimoduleElement::generator(sources[col]), params);
      for (const auto& [key, c] : image.terms()) {
        const auto& [left, basis, right] = key;
        const auto row = std::find(rows.begin(), rows.end(), basis) - rows.begin();
        f(static_cast<std::size_t>(row), col) += c * act(left, t2) * act(right, t1);
      }
    }
  }
  return complex;
}

TorComplex closed_form_complex(const OneDimModule& t1, const OneDimModule& t2,
                               const Params& params) {
  if (!is_zero(params.beta))
    throw DomainError(DomainError::Kind::BetaNonzero, "closed-form Tor matrices require beta = 0");
  require_valid(t1, params);
  require_valid(t2, params);
  const Scalar& a = params.alpha;
  const Scalar& g = params.gamma;
  const Scalar &d1 = t1.delta, &m1 = t1.mu, &d2 = t2.delta, &m2 = t2.mu;
  TorComplex complex;
  complex.f0 = Matrix{{d2 - d1, m2 - m1}};
  complex.f1 = Matrix{{(1 - a) * d1 * m1 + d2 * (m1 - a * m2) - g, m1 * (m1 - a * m2)},
                      {d2 * (d2 - a * d1), (1 - a) * d2 * m2 + m1 * (d2 - a * d1) - g}};
  complex.f2 = Matrix{{-m1 - params.beta * m2}, {d2 + params.beta * d1}};
  return complex;
}

TorProfile homology_dimensions(const TorComplex& complex) {
  const auto r0 = static_cast<int>(rank(complex.f0));
  const auto r1 = static_cast<int>(rank(complex.f1));
  const auto r2 = static_cast<int>(rank(complex.f2));
  const std::array<int, 4> dims{1 - r0, 2 - r0 - r1, 2 - r1 - r2, 1 - r2};
  TorProfile profile;
  for (std::size_t k = 0; k < 4; ++k) {
    if (dims[k] < 0) throw std::logic_error("matrices do not form a complex");
    profile.dims[k] = static_cast<unsigned>(dims[k]);
  }
  return profile;
}

TorProfile tor_profile(const OneDimModule& t1, const OneDimModule& t2, const Params& params) {
  return homology_dimensions(closed_form_complex(t1, t2, params));
}

TorProfile tor_profile_mechanical(const OneDimModule& t1, const OneDimModule& t2,
                                  const Params& params) {
  return homology_dimensions(functor_complex(t1, t2, params));
}

std::vector<OneDimModule> enumerate_one_dim(const Params& params, unsigned samples,
                                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(1, 20);
  auto nonzero = [&]() {
    int n = 0;
    while (n == 0) n = num(rng);
    Scalar q(n, den(rng));
    q.canonicalize();
    return q;
  };

  const Scalar c = 1 - params.alpha - params.beta;
  std::vector<OneDimModule> out{{0, 0}};
  if (!is_zero(params.gamma) && is_zero(c)) return out;

  for (unsigned k = 0; k < samples; ++k) {
    if (is_zero(params.gamma) && !is_zero(c)) {
      if (k == 0) out.push_back({1, 0});
      else if (k == 1) out.push_back({0, 1});
      else if (k % 2 == 0) out.push_back({nonzero(), 0});
      else out.push_back({0, nonzero()});
    } else if (is_zero(params.gamma)) {
      if (k == 0) out.push_back({1, 1});
      else out.push_back({nonzero(), nonzero()});
    } else {
      const Scalar delta = k == 0 ? Scalar(1) : nonzero();
      out.push_back({delta, params.gamma / (c * delta)});
    }
  }
  return out;
}

unsigned tor1_bound(const Params& params, unsigned samples) {
  if (!is_zero(params.beta))
    throw DomainError(DomainError::Kind::BetaNonzero, "tor1_bound requires beta = 0");
  const auto modules = enumerate_one_dim(params, samples);
  unsigned best = 0;
  for (const auto& t1 : modules)
    for (const auto& t2 : modules) best = std::max(best, tor_profile(t1, t2, params).dims[1]);
  return best;
}

}  // namespace downup
