// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "mbb/backends.hpp"
#include "mbb/kernels.hpp"

namespace {

const mbb::GroupRef& s7() {
  static const mbb::GroupRef g = mbb::make_named("sym:7");
  return g;
}

const mbb::Elem& transposition() {
  static const mbb::Elem i = s7()->parse_member("(1 2)");
  return i;
}

void bm_orders_serial(benchmark::State& st) {
  const auto& el = s7()->elements();
  for (auto _ : st) benchmark::DoNotOptimize(mbb::kernels::reference::element_orders(el));
}

void bm_orders_parallel(benchmark::State& st) {
  const auto& el = s7()->elements();
  mbb::kernels::set_workers(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(mbb::kernels::element_orders(el));
}

void bm_zeta_serial(benchmark::State& st) {
  const auto& el = s7()->elements();
  for (auto _ : st) benchmark::DoNotOptimize(mbb::kernels::reference::zeta_scan(el, transposition()));
}

void bm_zeta_parallel(benchmark::State& st) {
  const auto& el = s7()->elements();
  mbb::kernels::set_workers(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(mbb::kernels::zeta_scan(el, transposition()));
}

void bm_commuting_serial(benchmark::State& st) {
  const auto& el = s7()->elements();
  const std::vector<mbb::Elem> with{transposition()};
  for (auto _ : st) benchmark::DoNotOptimize(mbb::kernels::reference::commuting_mask(el, with));
}

void bm_commuting_parallel(benchmark::State& st) {
  const auto& el = s7()->elements();
  const std::vector<mbb::Elem> with{transposition()};
  mbb::kernels::set_workers(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(mbb::kernels::commuting_mask(el, with));
}

}  // namespace

BENCHMARK(bm_orders_serial);
BENCHMARK(bm_orders_parallel)->Arg(1)->Arg(2)->Arg(4);
BENCHMARK(bm_zeta_serial);
BENCHMARK(bm_zeta_parallel)->Arg(1)->Arg(2)->Arg(4);
BENCHMARK(bm_commuting_serial);
BENCHMARK(bm_commuting_parallel)->Arg(1)->Arg(2)->Arg(4);

BENCHMARK_MAIN();
