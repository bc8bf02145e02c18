#pragma once

// Batch kernels over independent instances. Each kernel has an OpenMP version
// and a serial reference in namespace ref; both must produce identical
// results, since every instance is computed by the same pure function.

#include <span>
#include <vector>

#include "w2line/measure.hpp"

namespace w2line::kernels {

struct Triangle1D {
  Measure1D x;
  Measure1D y;
  Measure1D z;
};

// Row-major n x n matrix of Wasserstein distances.
std::vector<double> pairwise_w2(std::span<const Measure1D> measures);

// Phi^t of every measure.
std::vector<Measure1D> flow_batch(std::span<const Measure1D> measures, double t);

// comparison_defect for every (triangle, t); index triangle * ts.size() + k.
std::vector<double> comparison_defects(std::span<const Triangle1D> triangles,
                                       std::span<const double> ts);

// Number of threads the parallel kernels will use.
int thread_count();

namespace ref {

std::vector<double> pairwise_w2(std::span<const Measure1D> measures);
std::vector<Measure1D> flow_batch(std::span<const Measure1D> measures, double t);
std::vector<double> comparison_defects(std::span<const Triangle1D> triangles,
                                       std::span<const double> ts);

}  // namespace ref

}  // namespace w2line::kernels
