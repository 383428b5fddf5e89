#include <benchmark/benchmark.h>

#include "downup/classify.hpp"
#include "downup/downup.hpp"
#include "downup/homology.hpp"
#include "downup/quotients.hpp"

namespace {

using namespace downup;

// d^n u^n has to be pushed all the way to u^i (du)^j d^k
void BM_ReduceDnUn(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Params p{2, -1, 3};
  const RuleSet rules = downup_rules(p);
  const NcPoly x = NcPoly::monomial(downup_alphabet(), Word::power(0, n) * Word::power(1, n));
  std::size_t terms = 0;
  for (auto _ : state) {
    const NcPoly r = reduce(x, rules);
    terms = r.size();
    benchmark::DoNotOptimize(r);
  }
  state.counters["terms"] = static_cast<double>(terms);
}
BENCHMARK(BM_ReduceDnUn)->DenseRange(2, 6);

void BM_PbwToOmega(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const Params p{Scalar(3, 2), 0, 1};
  PBWElem e;
  for (unsigned i = 0; i <= n; ++i) e.add({i, n - i, n - i}, i + 1);
  for (auto _ : state) benchmark::DoNotOptimize(pbw_to_omega(e, p));
}
BENCHMARK(BM_PbwToOmega)->DenseRange(1, 4);

void BM_QuantumNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const QuantumAlgebra qa = QuantumAlgebra::weyl(3);
  const NcPoly x = NcPoly::monomial(quantum_alphabet(), Word::power(0, n) * Word::power(1, n));
  for (auto _ : state) benchmark::DoNotOptimize(q_normal_form(x, qa));
}
BENCHMARK(BM_QuantumNormalForm)->DenseRange(2, 8, 2);

void BM_TorProfile(benchmark::State& state) {
  const Params p{2, 0, 1};
  const OneDimModule t1{1, -1}, t2{3, Scalar(-1, 3)};
  for (auto _ : state) benchmark::DoNotOptimize(tor_profile(t1, t2, p));
}
BENCHMARK(BM_TorProfile);

void BM_TorProfileMechanical(benchmark::State& state) {
  const Params p{2, 0, 1};
  const OneDimModule t1{1, -1}, t2{3, Scalar(-1, 3)};
  for (auto _ : state) benchmark::DoNotOptimize(tor_profile_mechanical(t1, t2, p));
}
BENCHMARK(BM_TorProfileMechanical);

void BM_Tor1Bound(benchmark::State& state) {
  const Params p{Scalar(-2, 5), 0, 0};
  for (auto _ : state) benchmark::DoNotOptimize(tor1_bound(p, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_Tor1Bound)->Arg(10)->Arg(30)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
