#pragma once

#include <limits>
#include <string>
#include <vector>

#include "w2line/measure.hpp"

namespace w2line {

// Closed interval of times; lo may be -inf and hi may be +inf.
struct Interval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();

  bool contains(double t) const { return t >= lo && t <= hi; }
};

// "[-1, inf)" style rendering; infinite ends are open.
std::string to_string(const Interval& interval);

// Two quantile functions restricted to a common refinement of their
// breakpoints. first[k] and second[k] both live on
// (breakpoints[k], breakpoints[k+1]].
struct AlignedQuantiles {
  std::vector<double> breakpoints;
  std::vector<QuantilePiece> first;
  std::vector<QuantilePiece> second;
};

// Breakpoints closer than kCanonicalTol are snapped together so that masses
// which agree up to rounding do not create spurious slivers.
AlignedQuantiles align(const QuantilePieces& a, const QuantilePieces& b);

// Exact squared quadratic Wasserstein distance: the integral of the squared
// quantile difference, evaluated piece by piece in closed form.
double wasserstein2_squared(const Measure1D& mu0, const Measure1D& mu1);
double wasserstein2(const Measure1D& mu0, const Measure1D& mu1);

// Times t for which (1 - t) F0^{-1} + t F1^{-1} stays non-decreasing.
Interval extension_interval(const Measure1D& mu0, const Measure1D& mu1);
Interval extension_interval(const AlignedQuantiles& aligned);

// Displacement geodesic through mu0 (t = 0) and mu1 (t = 1), kept as the two
// aligned endpoint quantiles so that evaluation is exact at any admissible t.
struct Geodesic1D {
  AlignedQuantiles quantiles;
  Interval extension;
  double speed = 0.0;
};

Geodesic1D geodesic(const Measure1D& mu0, const Measure1D& mu1);

// Throws std::domain_error when t lies outside the extension interval.
Measure1D geodesic_eval(const Geodesic1D& gamma, double t);

}  // namespace w2line
