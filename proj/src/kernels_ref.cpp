#include "w2line/curvature.hpp"
#include "w2line/isometry1d.hpp"
#include "w2line/kernels.hpp"
#include "w2line/transport1d.hpp"

namespace w2line::kernels::ref {

std::vector<double> pairwise_w2(std::span<const Measure1D> measures) {
  const std::size_t n = measures.size();
  std::vector<double> out(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      out[i * n + j] = out[j * n + i] = wasserstein2(measures[i], measures[j]);
    }
  }
  return out;
}

std::vector<Measure1D> flow_batch(std::span<const Measure1D> measures, double t) {
  std::vector<Measure1D> out;
  out.reserve(measures.size());
  for (const auto& mu : measures) out.push_back(exotic_flow(mu, t));
  return out;
}

std::vector<double> comparison_defects(std::span<const Triangle1D> triangles,
                                       std::span<const double> ts) {
  std::vector<double> out;
  out.reserve(triangles.size() * ts.size());
  for (const auto& tri : triangles) {
    for (double t : ts) out.push_back(comparison_defect(tri.x, tri.y, tri.z, t));
  }
  return out;
}

}  // namespace w2line::kernels::ref
