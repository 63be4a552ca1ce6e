// timing comparison between the production kernels (delayed reduction +
// OpenMP) and the serial reference implementations, over the field sizes the
// catalogs actually use; also cross-checks that both paths agree bitwise
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "qdd/kernels.hpp"
#include "qdd/rng.hpp"

using namespace qdd;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<i64> random_buffer(const FieldCtx& F, int entries, Rng& rng) {
  std::vector<i64> buf(static_cast<size_t>(entries) * F.m());
  for (i64& limb : buf) limb = static_cast<i64>(rng.below(F.p()));
  return buf;
}

template <typename Fn>
double time_best_of(int reps, Fn&& fn) {
  double best = 1e30;
  for (int k = 0; k < reps; ++k) {
    const auto t0 = Clock::now();
    fn();
    const double dt = seconds_since(t0);
    if (dt < best) best = dt;
  }
  return best;
}

void bench_matmul(const FieldCtx& F, const std::string& name, int dim, Rng& rng) {
  const std::vector<i64> A = random_buffer(F, dim * dim, rng);
  const std::vector<i64> B = random_buffer(F, dim * dim, rng);
  std::vector<i64> Cp(static_cast<size_t>(dim) * dim * F.m());
  std::vector<i64> Cr(Cp.size());

  const double prod = time_best_of(3, [&] {
    kernels::matmul(F, A.data(), B.data(), Cp.data(), dim, dim, dim);
  });
  const double refc = time_best_of(3, [&] {
    ref::matmul(F, A.data(), B.data(), Cr.data(), dim, dim, dim);
  });
  const bool agree = Cp == Cr;
  std::printf("matmul     %-8s dim %4d   production %8.3f ms   reference %8.3f ms   x%.2f   %s\n",
              name.c_str(), dim, prod * 1e3, refc * 1e3, refc / prod,
              agree ? "agree" : "MISMATCH");
  if (!agree) std::exit(1);
}

void bench_row_reduce(const FieldCtx& F, const std::string& name, int rows, int cols,
                      Rng& rng) {
  const std::vector<i64> base = random_buffer(F, rows * cols, rng);
  std::vector<i64> Dp, Dr;
  std::vector<int> piv_p, piv_r;

  const double prod = time_best_of(3, [&] {
    Dp = base;
    piv_p = kernels::row_reduce(F, Dp.data(), rows, cols, true);
  });
  const double refc = time_best_of(3, [&] {
    Dr = base;
    piv_r = ref::row_reduce(F, Dr.data(), rows, cols, true);
  });
  const bool agree = Dp == Dr && piv_p == piv_r;
  std::printf("row_reduce %-8s %4dx%-4d   production %8.3f ms   reference %8.3f ms   x%.2f   %s\n",
              name.c_str(), rows, cols, prod * 1e3, refc * 1e3, refc / prod,
              agree ? "agree" : "MISMATCH");
  if (!agree) std::exit(1);
}

}  // namespace

int main() {
  Rng rng(2024);
  const FieldCtx F3 = FieldCtx::prime_field(3);
  const FieldCtx F9 = FieldCtx::extension_field(3, 2);  // F_9, quadratic extension
  const FieldCtx F81 = FieldCtx::make(3, 5);   // F_81, holds 5th roots
  const FieldCtx F7 = FieldCtx::prime_field(7);

  std::printf("kernel timings, best of 3 (speedup = reference / production)\n\n");
  for (int dim : {64, 128, 256}) {
    bench_matmul(F3, "F_3", dim, rng);
    bench_matmul(F9, "F_9", dim, rng);
    bench_matmul(F81, "F_81", dim, rng);
    bench_matmul(F7, "F_7", dim, rng);
  }
  std::printf("\n");
  for (int dim : {128, 256, 512}) {
    bench_row_reduce(F3, "F_3", dim, dim, rng);
    bench_row_reduce(F9, "F_9", dim, dim, rng);
  }
  bench_row_reduce(F81, "F_81", 256, 512, rng);
  bench_row_reduce(F7, "F_7", 256, 512, rng);
  return 0;
}
