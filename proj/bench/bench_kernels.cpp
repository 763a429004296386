// Serial reference loops vs the OpenMP kernels, on the shapes the main model sees.
#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "atda/kernels.hpp"

using namespace atda;
using namespace atda::kernels;

namespace {

std::vector<Real> noise(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<Real> u(-1, 1);
  std::vector<Real> v(n);
  for (auto& x : v) x = u(rng);
  return v;
}

void gemm_args(benchmark::internal::Benchmark* b) {
  for (int n : {64, 128, 256}) b->Args({n});
}

void BM_GemmReference(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  auto a = noise(n * n, 1), bb = noise(n * n, 2);
  std::vector<Real> c(n * n);
  for (auto _ : st) {
    reference::gemm_nn(n, n, n, a.data(), bb.data(), c.data());
    benchmark::DoNotOptimize(c.data());
  }
  st.SetItemsProcessed(st.iterations() * static_cast<int64_t>(2 * n * n * n));
}

void BM_GemmParallel(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  auto a = noise(n * n, 1), bb = noise(n * n, 2);
  std::vector<Real> c(n * n);
  for (auto _ : st) {
    gemm_nn(n, n, n, a.data(), bb.data(), c.data());
    benchmark::DoNotOptimize(c.data());
  }
  st.SetItemsProcessed(st.iterations() * static_cast<int64_t>(2 * n * n * n));
}

// first conv of the main model on a 64-image batch
ConvGeometry main_conv() { return ConvGeometry::make(64, 1, 28, 28, 16, 4, 2, Padding::Same); }

void BM_ConvReference(benchmark::State& st) {
  const auto g = main_conv();
  auto x = noise(g.batch * g.in_c * g.in_h * g.in_w, 3), w = noise(g.out_c * g.col_rows(), 4);
  std::vector<Real> b(g.out_c), y(g.batch * g.out_c * g.out_h * g.out_w);
  for (auto _ : st) {
    reference::conv2d_forward(g, x.data(), w.data(), b.data(), y.data());
    benchmark::DoNotOptimize(y.data());
  }
}

void BM_ConvParallel(benchmark::State& st) {
  const auto g = main_conv();
  auto x = noise(g.batch * g.in_c * g.in_h * g.in_w, 3), w = noise(g.out_c * g.col_rows(), 4);
  std::vector<Real> b(g.out_c), y(g.batch * g.out_c * g.out_h * g.out_w), cols;
  for (auto _ : st) {
    conv2d_forward(g, x.data(), w.data(), b.data(), cols, y.data());
    benchmark::DoNotOptimize(y.data());
  }
}

void BM_ConvBackwardReference(benchmark::State& st) {
  const auto g = main_conv();
  auto x = noise(g.batch * g.in_c * g.in_h * g.in_w, 3), w = noise(g.out_c * g.col_rows(), 4);
  auto dy = noise(g.batch * g.out_c * g.out_h * g.out_w, 5);
  std::vector<Real> dx(x.size()), dw(w.size()), db(g.out_c);
  for (auto _ : st) {
    reference::conv2d_backward(g, x.data(), w.data(), dy.data(), dx.data(), dw.data(), db.data());
    benchmark::DoNotOptimize(dw.data());
  }
}

void BM_ConvBackwardParallel(benchmark::State& st) {
  const auto g = main_conv();
  auto x = noise(g.batch * g.in_c * g.in_h * g.in_w, 3), w = noise(g.out_c * g.col_rows(), 4);
  auto dy = noise(g.batch * g.out_c * g.out_h * g.out_w, 5);
  std::vector<Real> b(g.out_c), y(dy.size()), cols, dx(x.size()), dw(w.size()), db(g.out_c);
  conv2d_forward(g, x.data(), w.data(), b.data(), cols, y.data());
  for (auto _ : st) {
    std::fill(dx.begin(), dx.end(), Real(0));
    conv2d_backward(g, cols, w.data(), dy.data(), dx.data(), dw.data(), db.data());
    benchmark::DoNotOptimize(dw.data());
  }
}

}  // namespace

BENCHMARK(BM_GemmReference)->Apply(gemm_args);
BENCHMARK(BM_GemmParallel)->Apply(gemm_args);
BENCHMARK(BM_ConvReference);
BENCHMARK(BM_ConvParallel);
BENCHMARK(BM_ConvBackwardReference);
BENCHMARK(BM_ConvBackwardParallel);

BENCHMARK_MAIN();
