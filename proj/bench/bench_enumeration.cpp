// Compares the serial reference enumerations against the OpenMP kernels and
// verifies that both produce identical output.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hopfkit/lattice.hpp"

using namespace hopfkit;
using Clock = std::chrono::steady_clock;

namespace {

template <typename F>
double time_ms(F&& f) {
  auto t0 = Clock::now();
  f();
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void bench_flat(const char* label, const RibbonGraph& graph, const FiniteGroup& g) {
  std::vector<Labels> serial, parallel;
  double ts = time_ms([&] { serial = flat_configurations(graph, g); });
  double tp = time_ms([&] { parallel = flat_configurations_parallel(graph, g); });
  std::printf("%-34s |G|=%2d E=%d  flats=%8zu  serial %8.1f ms  parallel %8.1f ms  speedup %.2fx  %s\n",
              label, g.order(), graph.num_edges(), serial.size(), ts, tp, ts / tp,
              serial == parallel ? "identical" : "MISMATCH");
}

void bench_reps(const char* label, const FiniteGroup& g, int genus) {
  std::vector<SurfaceTuple> serial, parallel;
  double ts = time_ms([&] { serial = enumerate_surface_reps(g, genus); });
  double tp = time_ms([&] { parallel = enumerate_surface_reps_parallel(g, genus); });
  std::printf("%-34s |G|=%2d g=%d  homs=%8zu  serial %8.1f ms  parallel %8.1f ms  speedup %.2fx  %s\n",
              label, g.order(), genus, serial.size(), ts, tp, ts / tp,
              serial == parallel ? "identical" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#endif
  auto s3 = FiniteGroup::symmetric(3);
  auto a4 = FiniteGroup::alternating(4);
  auto d4 = FiniteGroup::dihedral(4);

  bench_reps("surface representations", s3, 3);
  bench_reps("surface representations", d4, 3);
  bench_reps("surface representations", a4, 2);

  bench_flat("flat labelings, standard genus 3", RibbonGraph::standard_graph(3), s3);
  bench_flat("flat labelings, standard genus 2", RibbonGraph::standard_graph(2), a4);
  // a subdivided torus graph with more edges than the standard one
  auto torus = RibbonGraph::standard_graph(1).split_vertex(0, 1, 2).split_vertex(0, 0, 2);
  bench_flat("flat labelings, subdivided torus", torus, d4);
  return 0;
}
