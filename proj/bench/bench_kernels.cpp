// Serial reference vs OpenMP kernels on the same inputs.

#include <benchmark/benchmark.h>

#include <random>

#include "realcyc/kernels.hpp"
#include "realcyc/normeq.hpp"
#include "realcyc/representation.hpp"
#include "support/generators.hpp"

using namespace realcyc;

namespace {

// 0: dihedral(60), 1: S5 standard conjugated over Q(z_8), 2: octahedral over Q(z_12)
const GroupClosure& closure_for(int which) {
  static const GroupClosure closures[] = {
      group_closure(dihedral(60)),
      [] {
        std::mt19937_64 rng(1);
        return group_closure(realcyc::testing::conjugate(realcyc::testing::symmetric5_standard(8),
                                                         realcyc::testing::random_monomial_twist(rng, 8, 4, 1)));
      }(),
      [] {
        std::mt19937_64 rng(2);
        return group_closure(realcyc::testing::conjugate(realcyc::testing::octahedral_rotations(12),
                                                         realcyc::testing::random_invertible(rng, 12, 3, 1)));
      }(),
  };
  return closures[which];
}

template <bool Parallel>
void BM_hermitian_sum(benchmark::State& state) {
  const auto& c = closure_for(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto sigma = Parallel ? kernels::parallel::hermitian_sum(c.elements) : kernels::serial::hermitian_sum(c.elements);
    benchmark::DoNotOptimize(sigma);
  }
  state.counters["elements"] = static_cast<double>(c.order());
}

template <bool Parallel>
void BM_bilinear_average(benchmark::State& state) {
  const auto& c = closure_for(static_cast<int>(state.range(0)));
  const auto seed = CycMatrix::identity(c.elements[0].conductor(), c.elements[0].rows());
  for (auto _ : state) {
    auto m = Parallel ? kernels::parallel::bilinear_average(c.elements, seed)
                      : kernels::serial::bilinear_average(c.elements, seed);
    benchmark::DoNotOptimize(m);
  }
}

template <bool Parallel>
void BM_trace_of_squares(benchmark::State& state) {
  const auto& c = closure_for(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto s = Parallel ? kernels::parallel::trace_of_squares_sum(c.elements)
                      : kernels::serial::trace_of_squares_sum(c.elements);
    benchmark::DoNotOptimize(s);
  }
}

// mu = x conj(x) for a fixed x in Q(z_7); the search has to walk most of the box.
template <bool Parallel>
void BM_norm_search(benchmark::State& state) {
  const Cyclotomic x = Cyclotomic(7, 2L) - Cyclotomic::zeta(7, 3) * Rational(2) + Cyclotomic::zeta(7, 5);
  const Cyclotomic mu = x * x.conj();
  NormSearchOptions options;
  options.bound = state.range(0);
  options.parallel = Parallel;
  for (auto _ : state) {
    auto found = normeq_detail::bounded_search(mu, options);
    benchmark::DoNotOptimize(found);
  }
}

}  // namespace

BENCHMARK(BM_hermitian_sum<false>)->Name("hermitian_sum/serial")->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_hermitian_sum<true>)->Name("hermitian_sum/parallel")->DenseRange(0, 2)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_bilinear_average<false>)->Name("bilinear_average/serial")->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_bilinear_average<true>)->Name("bilinear_average/parallel")->DenseRange(0, 2)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_trace_of_squares<false>)->Name("trace_of_squares/serial")->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_trace_of_squares<true>)->Name("trace_of_squares/parallel")->DenseRange(0, 2)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_norm_search<false>)->Name("norm_search/serial")->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_norm_search<true>)->Name("norm_search/parallel")->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
