#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "downup/downup.hpp"
#include "downup/expr.hpp"
#include "downup/matrix.hpp"

namespace downup {

/// One-dimensional module: d acts by delta, u by mu.
struct OneDimModule {
  Scalar delta;
  Scalar mu;
  friend bool operator==(const OneDimModule&, const OneDimModule&) = default;
};

/// delta((1-alpha-beta) delta mu - gamma) = 0 and mu((1-alpha-beta) delta mu - gamma) = 0,
/// the conditions for d, u acting by scalars to respect both relations.
bool satisfies_module_equations(const OneDimModule& m, const Params& params);

/// Generators of the free bimodules in the resolution
///   A(x)W(x)A -> A(x)R(x)A -> A(x)V(x)A -> A(x)A
/// with V = <d,u>, R = <d^2u, du^2>, W = <d^2u^2>.
enum class ResolutionBasis : std::uint8_t { One, D, U, DDU, DUU, DDUU };

/// Homological degree of a generator: One = 0, D/U = 1, DDU/DUU = 2, DDUU = 3.
int stage_of(ResolutionBasis b);
std::string to_string(ResolutionBasis b);
/// Generators of one stage, in the fixed order used for matrices.
std::vector<ResolutionBasis> stage_basis(int stage);

/// Finite sum of weighted triples left (x) generator (x) right of a single
/// stage, with left and right kept as PBW normal words.
class BimoduleElement {
 public:
  using Key = std::tuple<Word, ResolutionBasis, Word>;
  using Terms = std::map<Key, Scalar>;

  explicit BimoduleElement(int stage);
  /// 1 (x) b (x) 1.
  static BimoduleElement generator(ResolutionBasis b);

  int stage() const noexcept { return stage_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Adds c * left (x) b (x) right after normalizing both sides in A(params).
  void add(const NcPoly& left, ResolutionBasis b, const NcPoly& right, const Scalar& c,
           const Params& params);

  friend bool operator==(const BimoduleElement&, const BimoduleElement&) = default;

 private:
  void add_normal(const Word& left, ResolutionBasis b, const Word& right, const Scalar& c);

  int stage_;
  Terms terms_;
};

std::string to_string(const BimoduleElement& x);

/// d1(1(x)v(x)1) = v(x)1 - 1(x)v, extended A-bilinearly.
BimoduleElement apply_d1(const BimoduleElement& x, const Params& params);
/// The second differential on 1(x)d^2u(x)1 and 1(x)du^2(x)1, with beta terms.
BimoduleElement apply_d2(const BimoduleElement& x, const Params& params);
/// d3(1(x)d^2u^2(x)1) = d(x)du^2(x)1 + beta(x)du^2(x)d - 1(x)d^2u(x)u - beta u(x)d^2u(x)1.
BimoduleElement apply_d3(const BimoduleElement& x, const Params& params);

/// Matrices f0 (1x2), f1 (2x2), f2 (2x1) of the complex
///   0 -> K -f2-> K^2 -f1-> K^2 -f0-> K -> 0
/// in the bases (1), (d, u), (d^2u, du^2), (d^2u^2). Rows index the target.
struct TorComplex {
  Matrix f0{1, 2};
  Matrix f1{2, 2};
  Matrix f2{2, 1};
  friend bool operator==(const TorComplex&, const TorComplex&) = default;
};

/// Applies T1 (x)_A - (x)_A T2 to the resolution: a left factor a acts
/// through T2 and a right factor b through T1. Valid for every beta.
TorComplex functor_complex(const OneDimModule& t1, const OneDimModule& t2, const Params& params);

/// Closed-form matrices for beta = 0:
///   f0 = (delta2 - delta1, mu2 - mu1)
///   f1 = [(1-a) d1 m1 + d2 (m1 - a m2) - g,  m1 (m1 - a m2);
///         d2 (d2 - a d1),                   (1-a) d2 m2 + m1 (d2 - a d1) - g]
///   f2 = (-mu1 - beta mu2, delta2 + beta delta1)^T
TorComplex closed_form_complex(const OneDimModule& t1, const OneDimModule& t2,
                               const Params& params);

struct TorProfile {
  std::array<unsigned, 4> dims{};
  friend bool operator==(const TorProfile&, const TorProfile&) = default;
};

TorProfile homology_dimensions(const TorComplex& complex);

/// dim Tor_k(T1, T2) for k = 0..3 from the closed-form complex. Requires
/// beta = 0 and valid modules; throws DomainError otherwise.
TorProfile tor_profile(const OneDimModule& t1, const OneDimModule& t2, const Params& params);
/// Same from the mechanical functor path; accepts any beta.
TorProfile tor_profile_mechanical(const OneDimModule& t1, const OneDimModule& t2,
                                  const Params& params);

/// The trivial module followed by `samples` deterministic samples from the
/// solution set of the module equations (numerators and denominators of the
/// free coordinates bounded by 20). Returns only (0,0) when that is the only
/// solution.
std::vector<OneDimModule> enumerate_one_dim(const Params& params, unsigned samples,
                                            std::uint64_t seed = 0x5eed);

/// Largest dim Tor_1 over all pairs from enumerate_one_dim. Requires beta = 0.
unsigned tor1_bound(const Params& params, unsigned samples);

}  // namespace downup
