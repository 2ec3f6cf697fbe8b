#include <benchmark/benchmark.h>

#include "ydc/centers.hpp"
#include "ydc/kernels.hpp"

using namespace ydc;

namespace {

const YDAlgebra& ambient() {
  static const YDAlgebra r = [] {
    Scalar q = q_root(CycField::get(3), 3);
    auto H = nilpotent_line_hopf(rmatrix_cyclic(3, q), 3, q);
    return rb_algebra(*module_algebra_polynomial(H, Scalar(1), q * q, 8), {"y"});
  }();
  return r;
}

// Columns of the YD braiding on R (x) R.
Vec braid_column(std::size_t t) {
  const auto& r = ambient();
  std::size_t d = r.alg.dim();
  Vec co = r.mod.coaction.column(t / d), out;
  for (const auto& [i, c] : co) {
    Vec a = r.mod.action.apply(tensor_vec(Vec::basis(i / d), Vec::basis(t % d), d));
    out.axpy(c, tensor_vec(a, Vec::basis(i % d), d));
  }
  return out;
}

bool associative_at(std::size_t t) {
  const auto& A = ambient().alg;
  std::size_t d = A.dim(), i = t / (d * d), j = (t / d) % d, k = t % d;
  if (A.overflows(i, j) || A.overflows(j, k)) return true;
  Product l = A.mul(A.product(i, j), Vec::basis(k));
  Product r = A.mul(Vec::basis(i), A.product(j, k));
  return l.overflow || r.overflow || l.value == r.value;
}

void BM_columns_serial(benchmark::State& st) {
  std::size_t n = ambient().alg.dim() * ambient().alg.dim();
  for (auto _ : st) benchmark::DoNotOptimize(kernels::serial::columns(n, braid_column));
}

void BM_columns_parallel(benchmark::State& st) {
  kernels::set_threads(static_cast<int>(st.range(0)));
  std::size_t n = ambient().alg.dim() * ambient().alg.dim();
  for (auto _ : st) benchmark::DoNotOptimize(kernels::columns(n, braid_column));
}

void BM_sweep_serial(benchmark::State& st) {
  std::size_t d = ambient().alg.dim();
  for (auto _ : st) benchmark::DoNotOptimize(kernels::serial::first_failure(d * d * d, associative_at));
}

void BM_sweep_parallel(benchmark::State& st) {
  kernels::set_threads(static_cast<int>(st.range(0)));
  std::size_t d = ambient().alg.dim();
  for (auto _ : st) benchmark::DoNotOptimize(kernels::first_failure(d * d * d, associative_at));
}

}  // namespace

BENCHMARK(BM_columns_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_columns_parallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sweep_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sweep_parallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
