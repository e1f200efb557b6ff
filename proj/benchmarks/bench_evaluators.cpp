#include <benchmark/benchmark.h>

#include "jacq/generating_matrices.hpp"
#include "jacq/genfunc.hpp"
#include "jacq/jacobsthal_quaternions.hpp"
#include "jacq/sequences.hpp"

namespace {

using jacq::SeqKind;

void BM_TermRecurrence(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(jacq::seq_term(SeqKind::J3, n));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_TermRecurrence)->RangeMultiplier(4)->Range(64, 65536)->Complexity();

void BM_TermMatrixPower(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(jacq::fast_J3(n));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_TermMatrixPower)->RangeMultiplier(4)->Range(64, 65536)->Complexity();

void BM_TermBinet(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(jacq::binet_J3(n));
  }
}
BENCHMARK(BM_TermBinet)->RangeMultiplier(4)->Range(64, 65536);

void BM_TermClosedForm(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(jacq::closed_form_residue(SeqKind::J3, n));
  }
}
BENCHMARK(BM_TermClosedForm)->RangeMultiplier(4)->Range(64, 65536);

void BM_QuaternionProduct(benchmark::State& state) {
  const auto a = jacq::jq_term(state.range(0));
  const auto b = jacq::jlq_term(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
}
BENCHMARK(BM_QuaternionProduct)->Arg(30)->Arg(300);

void BM_SeriesStream(benchmark::State& state) {
  const long count = state.range(0);
  for (auto _ : state) {
    jacq::SeriesStream stream(jacq::jq_series_numerator());
    for (long i = 0; i < count; ++i) {
      benchmark::DoNotOptimize(stream.next());
    }
  }
  state.SetComplexityN(count);
}
BENCHMARK(BM_SeriesStream)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_VerifyScalarSuite(benchmark::State& state) {
  for (auto _ : state) {
    for (const auto& tag : jacq::scalar_identity_tags()) {
      const long lo = tag == "step2r" ? 1 : 0;
      for (long n = lo; n <= state.range(0); ++n) {
        benchmark::DoNotOptimize(jacq::check_scalar_identity(tag, n).pass);
      }
    }
  }
}
BENCHMARK(BM_VerifyScalarSuite)->Arg(50);

}  // namespace

BENCHMARK_MAIN();
