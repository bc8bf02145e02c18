#include "w2line/curvature.hpp"

#include <cmath>

#include "w2line/transport1d.hpp"

namespace w2line {

namespace {

void require_unit_time(double t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw std::domain_error("comparison_defect: t must lie in [0,1]");
  }
}

double comparison_value(double d2_yx, double d2_yz, double d2_xz, double t) {
  return (1.0 - t) * d2_yx + t * d2_yz - t * (1.0 - t) * d2_xz;
}

double ot_cost(const MeasureRn& a, const MeasureRn& b) { return discrete_ot(a, b).cost; }

}  // namespace

double comparison_defect(const Measure1D& x, const Measure1D& y, const Measure1D& z,
                         double t) {
  require_unit_time(t);
  const Measure1D on_side = geodesic_eval(geodesic(x, z), t);
  return wasserstein2_squared(y, on_side) -
         comparison_value(wasserstein2_squared(y, x), wasserstein2_squared(y, z),
                          wasserstein2_squared(x, z), t);
}

double comparison_defect(const MeasureRn& x, const MeasureRn& y, const MeasureRn& z,
                         double t, const Coupling& plan_xz) {
  require_unit_time(t);
  if (!approx_equal(plan_xz.source(), x) || !approx_equal(plan_xz.target(), z)) {
    throw std::invalid_argument("comparison_defect: plan does not couple x to z");
  }
  const MeasureRn on_side = interpolate(plan_xz, t);
  return ot_cost(y, on_side) -
         comparison_value(ot_cost(y, x), ot_cost(y, z), ot_cost(x, z), t);
}

BranchingWitness branching_witness() {
  const std::vector<std::vector<double>> horizontal = {{-1.0, 0.0}, {1.0, 0.0}};
  const std::vector<std::vector<double>> vertical = {{0.0, -1.0}, {0.0, 1.0}};
  const std::vector<double> halves = {0.5, 0.5};
  MeasureRn x(2, horizontal, halves);
  MeasureRn z(2, vertical, halves);
  // Both canonical orders are (-1,0),(1,0) and (0,-1),(0,1).
  Coupling plan_a(x, z, {{0, 0, 0.5}, {1, 1, 0.5}});
  Coupling plan_b(x, z, {{0, 1, 0.5}, {1, 0, 0.5}});
  MeasureRn mid_a = interpolate(plan_a, 0.5);
  MeasureRn mid_b = interpolate(plan_b, 0.5);
  const double gap = std::sqrt(ot_cost(mid_a, mid_b));
  return {std::move(x),     std::move(z),     std::move(plan_a), std::move(plan_b),
          std::move(mid_a), std::move(mid_b), gap};
}

}  // namespace w2line
