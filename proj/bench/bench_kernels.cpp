#include <random>

#include <benchmark/benchmark.h>

#include "eqres/decompose.hpp"
#include "eqres/oracle.hpp"
#include "eqres/system_file.hpp"

using namespace eqres;

namespace {

Matrix<Integer> random_integer_matrix(std::size_t n) {
  std::mt19937_64 rng(n);
  std::uniform_int_distribution<int> v(-20, 20);
  Matrix<Integer> m(n, n, Integer(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = v(rng);
  return m;
}

void bareiss(benchmark::State& state, Kernel kernel) {
  const auto m = random_integer_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bareiss_determinant(m, kernel));
}

void BM_BareissSerial(benchmark::State& state) { bareiss(state, Kernel::Serial); }
void BM_BareissOpenMP(benchmark::State& state) { bareiss(state, Kernel::OpenMP); }
BENCHMARK(BM_BareissSerial)->Arg(40)->Arg(80)->Arg(160)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BareissOpenMP)->Arg(40)->Arg(80)->Arg(160)->Unit(benchmark::kMillisecond);

struct Worked {
  SystemFile file = load_system_file(std::string(EQRES_FIXTURE_DIR) + "/buse5.json");
  EquivariantSystem sys = check_equivariance(file.system, file.context);
  DecompositionResult result = decompose_resultant(sys);
  Assignment at = draw_point(file.parameters, 1, 0, 10).values;
};

Worked& worked() {
  static Worked w;
  return w;
}

// 210 x 210 Macaulay matrix of the five quadrics.
void direct(benchmark::State& state, Kernel kernel) {
  auto& w = worked();
  std::vector<Polynomial> polys;
  for (const auto& f : w.sys.polys()) polys.push_back(evaluate(f, w.at));
  ResultantOptions opts;
  opts.kernel = kernel;
  opts.split_disjoint = false;
  for (auto _ : state) benchmark::DoNotOptimize(numeric_resultant(HomogeneousSystem(polys), opts));
}

void BM_DirectSerial(benchmark::State& state) { direct(state, Kernel::Serial); }
void BM_DirectOpenMP(benchmark::State& state) { direct(state, Kernel::OpenMP); }
BENCHMARK(BM_DirectSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DirectOpenMP)->Unit(benchmark::kMillisecond);

void BM_Decomposed(benchmark::State& state) {
  auto& w = worked();
  for (auto _ : state) benchmark::DoNotOptimize(product_at(w.result, w.at));
}
BENCHMARK(BM_Decomposed)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
