#include <benchmark/benchmark.h>

#include "schubert/kernels.hpp"
#include "schubert/nilcox.hpp"
#include "schubert/polyring.hpp"

using namespace schubert;

namespace {

// (sum of y_i + z_i)^d in 2v variables
Poly dense(int v, int d) {
  Poly s;
  for (int i = 1; i <= v; ++i) s += Poly::var(Sym::y, i) + Poly::var(Sym::z, i);
  return s.pow(d);
}

void BM_mul_serial(benchmark::State& st) {
  Poly a = dense(4, int(st.range(0))), b = dense(4, int(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::mul_serial(a, b));
  st.counters["terms"] = double(a.size());
}

void BM_mul_parallel(benchmark::State& st) {
  Poly a = dense(4, int(st.range(0))), b = dense(4, int(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::mul_parallel(a, b));
  st.counters["threads"] = kernels::max_threads();
}

void BM_sum(benchmark::State& st, bool parallel) {
  std::vector<Poly> ps;
  for (int i = 1; i <= 64; ++i) ps.push_back(dense(3, 4) * Poly::var(Sym::x, i));
  for (auto _ : st) benchmark::DoNotOptimize(parallel ? kernels::sum_parallel(ps) : kernels::sum_serial(ps));
}

// C(x_1) ... C(x_m) in the dense nilCoxeter algebra of W_n
NCElement stream(const GroupTable& t, int m) {
  NCElement e = NCElement::one(t);
  for (int i = 1; i <= m; ++i) e = nc_multiply(e, factor_C(t, Poly::var(Sym::x, i)));
  return e;
}

void BM_nc_multiply(benchmark::State& st, bool parallel) {
  const GroupTable& t = GroupTable::get(Group::BC, int(st.range(0)));
  NCElement a = stream(t, 2), b = factor_C(t, Poly::var(Sym::y, 1));
  for (auto _ : st) benchmark::DoNotOptimize(parallel ? nc_multiply(a, b) : nc_multiply_serial(a, b));
  st.counters["group"] = t.size();
}

}  // namespace

BENCHMARK(BM_mul_serial)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_mul_parallel)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_sum, serial, false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_sum, parallel, true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_nc_multiply, serial, false)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_nc_multiply, parallel, true)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
