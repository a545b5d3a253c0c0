// Serial reference kernels against their OpenMP versions.
// Usage: bench_kernels [repeats]

#include "orthograph/graph.hpp"
#include "orthograph/kernels.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <omp.h>

using namespace orthograph;

namespace {

double best_ms(int repeats, const std::function<void()> &f) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    const auto t = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - t)
                              .count());
  }
  return best;
}

} // namespace

int main(int argc, char **argv) {
  const int repeats = argc > 1 ? std::max(1, std::atoi(argv[1])) : 3;
  const int threads = configure_threads();
  std::printf("threads: %d, best of %d runs\n", threads, repeats);
  std::printf("%-22s %7s %-14s %10s %10s %8s %6s\n", "spec", "|V|", "kernel",
              "serial_ms", "omp_ms", "speedup", "same");

  for (const FormSpec &s : {FormSpec(3, 2, 1), FormSpec(3, 2, 2),
                            FormSpec(2, 3, 1), FormSpec(1, 4, 2)}) {
    const PointSet pts = enumerate_vertices(s);
    const OrthoGraph g = build_graph(s);
    const auto labels = g.residue_labels();

    BitMatrix a, b;
    const double fs = best_ms(repeats, [&] { a = fill_adjacency_serial(pts); });
    const double fp = best_ms(repeats, [&] { b = fill_adjacency(pts); });
    std::printf("%-22s %7zu %-14s %10.2f %10.2f %8.2f %6s\n",
                s.label().c_str(), pts.size(), "fill_adjacency", fs, fp,
                fs / fp, a == b ? "yes" : "NO");

    PairCensus c, d;
    const double cs =
        best_ms(repeats, [&] { c = pair_census_serial(a, labels); });
    const double cp = best_ms(repeats, [&] { d = pair_census(a, labels); });
    std::printf("%-22s %7zu %-14s %10.2f %10.2f %8.2f %6s\n",
                s.label().c_str(), pts.size(), "pair_census", cs, cp, cs / cp,
                c == d ? "yes" : "NO");
  }
}
