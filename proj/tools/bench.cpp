// Benchmark: serial reference vs OpenMP-parallel content grid evaluation.
// Verifies that both paths produce identical results before timing them.
#include <omp.h>

#include <chrono>
#include <cstdio>

#include "pqa/quasilength.hpp"

using namespace pqa;

namespace {

template <typename F>
double time_once(F&& f) {
  auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main() {
  // Z_(2)[x,y]/(pxy) cousin with finite quotients: Z_(2)[x]/(px) on a grid,
  // plus the regular ring at larger exponents for heavier per-point work.
  RingDescriptor regular =
      make_polynomial_quotient(PMonomialIdeal(AmbientRing(1, 2), {}));
  std::vector<PMonomial> seq = {PMonomial{{1, 0}}, PMonomial{{0, 1}}};
  std::vector<Vec> grid;
  for (long long a = 1; a <= 5; ++a)
    for (long long b = 1; b <= 5; ++b) grid.push_back({a, b});

  Budget budget;
  ContentEstimate serial, parallel;
  double ts = time_once([&] { serial = content_estimate(regular, seq, grid, budget, false); });
  double tp = time_once([&] { parallel = content_estimate(regular, seq, grid, budget, true); });

  bool same = serial.verdict == parallel.verdict && serial.grid.size() == parallel.grid.size();
  for (size_t i = 0; same && i < serial.grid.size(); ++i)
    same = serial.grid[i].lower == parallel.grid[i].lower &&
           serial.grid[i].upper == parallel.grid[i].upper &&
           serial.grid[i].exact == parallel.grid[i].exact;

  std::printf("content grid %zu points, verdict %s\n", grid.size(), serial.verdict.c_str());
  std::printf("serial reference : %8.3f s\n", ts);
  std::printf("openmp (%2d thr)  : %8.3f s\n", omp_get_max_threads(), tp);
  std::printf("speedup          : %8.2fx\n", tp > 0 ? ts / tp : 0.0);
  std::printf("results identical: %s\n", same ? "yes" : "NO");
  return same ? 0 : 1;
}
