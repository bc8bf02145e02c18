#pragma once

#include "w2line/measure.hpp"
#include "w2line/transport_rn.hpp"

namespace w2line {

// d^2(y, gamma(t)) - [(1 - t) d^2(y, x) + t d^2(y, z) - t (1 - t) d^2(x, z)]
// with gamma the geodesic from x to z. Zero for every triangle in a space of
// vanishing curvature, non-positive in a CAT(0) space.
//
// Throws std::domain_error for t outside [0, 1].
double comparison_defect(const Measure1D& x, const Measure1D& y, const Measure1D& z,
                         double t);

// Same quantity in R^n. Geodesics there depend on the plan, so the geodesic
// from x to z is the displacement interpolation of `plan_xz`, which must
// couple x to z.
double comparison_defect(const MeasureRn& x, const MeasureRn& y, const MeasureRn& z,
                         double t, const Coupling& plan_xz);

// Two distinct optimal plans between measures on orthogonal axes of R^2,
// showing that geodesics there are not unique.
struct BranchingWitness {
  MeasureRn x;
  MeasureRn z;
  Coupling plan_a;
  Coupling plan_b;
  MeasureRn mid_a;
  MeasureRn mid_b;
  double midpoint_gap;  // d(mid_a, mid_b)
};

BranchingWitness branching_witness();

}  // namespace w2line
