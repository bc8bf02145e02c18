// Times the OpenMP batch kernels against their serial references and checks
// that both return identical results.
//
//   bench_kernels [measures=300] [seed=7]

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>

#include "w2line/kernels.hpp"
#include "w2line/random_measures.hpp"
#include "w2line/transport1d.hpp"

using namespace w2line;

namespace {

template <typename F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(const char* name, double serial, double parallel, bool same) {
  std::cout << std::left << std::setw(22) << name << std::right << std::fixed
            << std::setprecision(4) << " serial " << std::setw(9) << serial
            << " s   parallel " << std::setw(9) << parallel << " s   speedup "
            << std::setprecision(2) << serial / parallel << (same ? "" : "   MISMATCH")
            << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 300;
  const std::uint64_t seed = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 7;
  Rng rng(seed);

  std::vector<Measure1D> measures;
  for (std::size_t i = 0; i < n; ++i) measures.push_back(random_mixed_measure(rng, 8));
  std::vector<Measure1D> atomic;
  for (std::size_t i = 0; i < n; ++i) atomic.push_back(random_atomic_measure(rng, 8));
  std::vector<kernels::Triangle1D> triangles;
  for (std::size_t i = 0; i < n; ++i) {
    triangles.push_back({random_mixed_measure(rng, 6), random_mixed_measure(rng, 6),
                         random_mixed_measure(rng, 6)});
  }
  const double ts[] = {0.25, 0.37, 0.5, 0.9};

  std::cout << "threads: " << kernels::thread_count() << ", instances: " << n << '\n';
  bool all_same = true;

  {
    std::vector<double> a, b;
    const double s = seconds([&] { a = kernels::ref::pairwise_w2(measures); });
    const double p = seconds([&] { b = kernels::pairwise_w2(measures); });
    all_same &= a == b;
    report("pairwise_w2", s, p, a == b);
  }
  {
    std::vector<Measure1D> a, b;
    const double s = seconds([&] { a = kernels::ref::flow_batch(atomic, 1.3); });
    const double p = seconds([&] { b = kernels::flow_batch(atomic, 1.3); });
    bool same = a.size() == b.size();
    for (std::size_t i = 0; same && i < a.size(); ++i) same = approx_equal(a[i], b[i], 0.0);
    all_same &= same;
    report("flow_batch", s, p, same);
  }
  {
    std::vector<double> a, b;
    const double s = seconds([&] { a = kernels::ref::comparison_defects(triangles, ts); });
    const double p = seconds([&] { b = kernels::comparison_defects(triangles, ts); });
    all_same &= a == b;
    report("comparison_defects", s, p, a == b);
  }
  return all_same ? 0 : 1;
}
