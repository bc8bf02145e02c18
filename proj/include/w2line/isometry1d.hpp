#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "w2line/measure.hpp"

namespace w2line {

// Coordinates of a two-atom measure: barycenter x, deviation sigma and shape p.
// The left atom sits at x - sigma e^p with weight e^-p / (e^-p + e^p), the
// right atom at x + sigma e^-p with the complementary weight.
struct Delta2Params {
  double x = 0.0;
  double sigma = 0.0;
  double p = 0.0;
};

// Throws std::invalid_argument unless mu has exactly two atoms and no
// continuous part.
Delta2Params delta2_params(const Measure1D& mu);
// sigma == 0 yields the Dirac mass at x.
Measure1D measure_from_params(const Delta2Params& params);

// Closed-form distance between two-atom measures:
//   d^2 = (x - y)^2 + sigma^2 + rho^2 - 2 sigma rho exp(-|p - q|).
double delta2_distance(const Delta2Params& a, const Delta2Params& b);

// Pushforward by x -> 2 barycenter(mu) - x.
Measure1D reflect_about_barycenter(const Measure1D& mu);

// Which geodesic through mu the flow recursion uses to split off one atom.
enum class SegmentChoice {
  // Endpoints obtained by pushing the second-to-last atom onto either
  // neighbour.
  kMergeIntoNeighbours,
  // Endpoints obtained by moving the last two atoms against each other so that
  // the barycenter stays fixed along the whole segment.
  kBarycentric,
};

inline constexpr std::size_t kMaxFlowAtoms = 14;

// The exotic isometric flow Phi^t on finitely atomic measures. On two-atom
// measures it shifts the shape parameter, (x, sigma, p) -> (x, sigma, p + t).
// A measure with n + 1 >= 3 atoms lies on a geodesic segment between two
// n-atom measures; the flow of mu is the point at the same relative position
// on the geodesic between the images of those endpoints. Works in 2^(n-2)
// leaf evaluations, memoized per call.
//
// Throws std::invalid_argument for measures with a continuous part and
// SizeLimitError above kMaxFlowAtoms atoms.
Measure1D exotic_flow(const Measure1D& mu, double t,
                      SegmentChoice choice = SegmentChoice::kMergeIntoNeighbours);

struct QuantizedFlow {
  Measure1D image;
  // Output error bound: 2 d(mu, quantized(mu)).
  double error_bound;
};

// n equal-mass atoms at the quantile midpoints F^{-1}((i - 1/2) / n).
Measure1D quantize(const Measure1D& mu, std::size_t n);
// Flow of a general measure through its n-atom quantization.
QuantizedFlow exotic_flow_quantized(const Measure1D& mu, double t, std::size_t n);

// Normal form #(psi) o Phi(phi) of an isometry of the Wasserstein space of the
// line, with psi(x) = eps x + v acting on the base and phi(p) = eta p + t
// acting on shapes.
struct IsometryElement {
  int eps = 1;
  double v = 0.0;
  int eta = 1;
  double t = 0.0;

  static IsometryElement identity() { return {}; }
  bool operator==(const IsometryElement&) const = default;
};

// Throws std::invalid_argument unless eps, eta are +1 or -1.
void validate(const IsometryElement& g);

// g1 o g2 in normal form: (eps1 eps2, eps1 v2 + v1, eta1 eta2, eta1 t2 + eps2 t1).
IsometryElement compose(const IsometryElement& g1, const IsometryElement& g2);
IsometryElement inverse(const IsometryElement& g);

// Image of mu: reflection about the barycenter when eta = -1, then the flow
// for time t, then the pushforward by x -> eps x + v.
Measure1D apply_isometry(const IsometryElement& g, const Measure1D& mu);

// Action on two-atom coordinates: (x, sigma, p) -> (eps x + v, sigma,
// eps (eta p + t)).
Delta2Params apply_isometry(const IsometryElement& g, const Delta2Params& params);

struct WindowSample {
  double t;
  double window_mass;           // mass of Phi^t mu within the window
  double distance_to_center;    // d(Phi^t mu, delta_barycenter)
};

// Mass Phi^t(mu) puts in [c - width, c + width], c = barycenter(mu), for each t.
std::vector<WindowSample> weak_convergence_profile(const Measure1D& mu,
                                                   std::span<const double> ts,
                                                   double width);

// Candidate closed form for the flow on uniform three-atom measures
// (1/3)(d_x1 + d_x2 + d_x3), x1 <= x2 <= x3. It is the identity at t = 1 and
// degenerates at t = 0, so it cannot be Phi^t for the flow parameter; it is
// kept only as a cross-check target whose disagreement is reported.
Measure1D uniform3_closed_form(double x1, double x2, double x3, double t);

}  // namespace w2line
