#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "w2line/measure.hpp"

namespace w2line {

// Finitely atomic probability measure on R^n. Points are stored row-major,
// sorted lexicographically, with coinciding points merged. Weights must be
// positive and sum to one within kCanonicalTol.
class MeasureRn {
 public:
  MeasureRn(std::size_t dim, std::span<const std::vector<double>> points,
            std::span<const double> weights);
  MeasureRn(std::size_t dim, std::vector<double> coords, std::vector<double> weights);

  static MeasureRn dirac(std::span<const double> point);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return weights_.size(); }
  std::span<const double> point(std::size_t i) const {
    return {coords_.data() + i * dim_, dim_};
  }
  double weight(std::size_t i) const { return weights_[i]; }
  std::span<const double> weights() const { return weights_; }
  std::span<const double> coords() const { return coords_; }

 private:
  std::size_t dim_;
  std::vector<double> coords_;
  std::vector<double> weights_;
};

double squared_distance(std::span<const double> a, std::span<const double> b);

std::vector<double> barycenter(const MeasureRn& mu);
double deviation(const MeasureRn& mu);
bool approx_equal(const MeasureRn& a, const MeasureRn& b, double tol = kCompareTol);

MeasureRn translate(const MeasureRn& mu, std::span<const double> v);
// Pushforward by the dilation of ratio lambda about center.
MeasureRn dilate(const MeasureRn& mu, std::span<const double> center, double lambda);
// Shape-preserving isometry mu -> phi_#(mu - g) + g, g the barycenter and phi
// the linear map with row-major matrix `linear` (expected orthogonal).
MeasureRn rotate_about_barycenter(const MeasureRn& mu, std::span<const double> linear);

struct CouplingEntry {
  std::size_t source;
  std::size_t target;
  double mass;
};

// Transport plan between two MeasureRn given by its positive entries.
class Coupling {
 public:
  // Throws std::invalid_argument on bad indices, non-positive masses or
  // marginals off by more than 1e-10.
  Coupling(MeasureRn source, MeasureRn target, std::vector<CouplingEntry> entries);

  const MeasureRn& source() const { return source_; }
  const MeasureRn& target() const { return target_; }
  std::span<const CouplingEntry> entries() const { return entries_; }

  double cost() const;
  std::span<const double> source_point(const CouplingEntry& e) const {
    return source_.point(e.source);
  }
  std::span<const double> target_point(const CouplingEntry& e) const {
    return target_.point(e.target);
  }

 private:
  MeasureRn source_;
  MeasureRn target_;
  std::vector<CouplingEntry> entries_;
};

inline constexpr double kMarginalTol = 1e-10;

struct OtOptions {
  std::size_t max_points = 64;  // per side
};

struct OtResult {
  Coupling plan;
  double cost;
};

// Exact quadratic-cost optimal transport by the transportation simplex
// (vertex following with Bland's rule). The plan is a basic solution with at
// most |mu| + |nu| - 1 entries.
//
// Throws std::invalid_argument on dimension mismatch and SizeLimitError when a
// side exceeds options.max_points.
OtResult discrete_ot(const MeasureRn& mu, const MeasureRn& nu, OtOptions options = {});

// Displacement interpolation along a plan: mass of (x, y) placed at
// (1 - t) x + t y.
MeasureRn interpolate(const Coupling& plan, double t);

struct MonotonicityWitness {
  std::size_t first;   // entry indices into plan.entries()
  std::size_t second;
  double product;      // (y0 - x0) . (y1 - x1)
};

// Returns the first pair of support points (x0, x1), (y0, y1) with
// (y0 - x0) . (y1 - x1) < -1e-9, or nothing when the plan passes.
std::optional<MonotonicityWitness> cyclical_monotonicity_check(const Coupling& plan);

// Returns u if every entry moves its mass by the same vector u (within 1e-9).
std::optional<std::vector<double>> is_translation_coupling(const Coupling& plan);

struct GeodesicWitness {
  double r;
  double s;
  std::size_t first;
  std::size_t second;
  double value;  // |u|^2 + (r + s) u.v + r s |v|^2 < 0
};

// For support pairs with u = y0 - x0 and v = (y1 - x1) - u, the quadratic
// |u|^2 + (r + s) u.v + r s |v|^2 must stay non-negative on any time interval
// [r, s] the geodesic extends to. Returns an analytic violating (r, s) for the
// first pair with v != 0; nothing when every pair has v = 0.
std::optional<GeodesicWitness> geodesic_inequality_witness(const Coupling& plan);

// Cost of the product coupling: |g - h|^2 + sigma^2 + rho^2.
double independent_coupling_cost(const MeasureRn& mu, const MeasureRn& nu);

// |1 - lambda| d(mu, delta_center): distance between mu and its dilate, which
// is optimally coupled to mu by the dilation itself. Throws std::domain_error
// for lambda < 0.
double dilation_distance(const MeasureRn& mu, std::span<const double> center,
                         double lambda);

}  // namespace w2line
