#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace w2line {

// Tolerance used to merge coinciding atoms and breakpoints.
inline constexpr double kCanonicalTol = 1e-12;
// Tolerance used by structural comparisons in tests and checks.
inline constexpr double kCompareTol = 1e-9;

// Raised when an input exceeds a configured size cap (atom count, LP size).
class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// |a - b| <= tol * max(1, |a|, |b|)
bool nearly_equal(double a, double b, double tol = kCanonicalTol);

struct Atom {
  double x;
  double w;
};

// Uniform density on [a, b] carrying `mass`.
struct UniformPiece {
  double a;
  double b;
  double mass;
};

// One affine piece of an inverse distribution function, given by its values at
// the left and right ends of its mass interval. start == end is an atom.
struct QuantilePiece {
  double start;
  double end;

  bool is_constant() const { return start == end; }
  // Value at relative position u in [0, 1] of the mass interval.
  double at(double u) const { return start + (end - start) * u; }
};

// Left-continuous non-decreasing piecewise affine function on (0, 1).
//
// breakpoints() has size() + 1 entries, 0 = m_0 < m_1 < ... < m_K = 1; piece k
// covers (m_k, m_{k+1}].
class QuantilePieces {
 public:
  QuantilePieces(std::vector<double> breakpoints,
                 std::vector<QuantilePiece> pieces);

  std::span<const double> breakpoints() const { return breakpoints_; }
  std::span<const QuantilePiece> pieces() const { return pieces_; }
  std::size_t size() const { return pieces_.size(); }
  double mass(std::size_t k) const {
    return breakpoints_[k + 1] - breakpoints_[k];
  }

  // F^{-1}(m) for m in (0, 1); at a breakpoint the left piece wins.
  double operator()(double m) const;

 private:
  std::vector<double> breakpoints_;
  std::vector<QuantilePiece> pieces_;
};

// Probability measure on the line made of finitely many atoms plus a
// piecewise-uniform absolutely continuous part.
//
// Instances are always canonical: atoms strictly increasing with merged
// duplicates, uniform pieces disjoint and sorted, adjacent pieces of equal
// density joined, total mass exactly renormalized to one. Two measures that
// describe the same law therefore have the same representation.
class Measure1D {
 public:
  // Throws std::invalid_argument on non-positive weights, non-finite values,
  // empty input or a total mass further than kCanonicalTol from one.
  static Measure1D from_atoms(std::span<const Atom> atoms);
  static Measure1D from_parts(std::span<const Atom> atoms,
                              std::span<const UniformPiece> uniform);
  // Rebuilds the measure whose inverse distribution function is `q`. Atoms
  // closer than kCanonicalTol (relative) are merged and pieces with vanishing
  // slope become atoms.
  static Measure1D from_quantile(const QuantilePieces& q);

  static Measure1D dirac(double x);
  static Measure1D uniform(double a, double b);

  std::span<const Atom> atoms() const { return atoms_; }
  std::span<const UniformPiece> uniform_pieces() const { return uniform_; }
  const QuantilePieces& quantile_pieces() const { return quantile_; }

  bool is_atomic() const { return uniform_.empty(); }
  bool is_dirac() const { return uniform_.empty() && atoms_.size() == 1; }
  std::size_t atom_count() const { return atoms_.size(); }

 private:
  Measure1D(std::vector<Atom> atoms, std::vector<UniformPiece> uniform,
            QuantilePieces quantile);

  std::vector<Atom> atoms_;
  std::vector<UniformPiece> uniform_;
  QuantilePieces quantile_;
};

// Left-continuous inverse distribution function. Throws std::domain_error for
// m outside (0, 1).
double quantile(const Measure1D& mu, double m);

double barycenter(const Measure1D& mu);
// Distance to the Dirac mass at the barycenter, i.e. the standard deviation.
double deviation(const Measure1D& mu);
double second_moment_about(const Measure1D& mu, double center);

// Image of mu under x -> a x + b.
Measure1D pushforward_affine(const Measure1D& mu, double a, double b);

// Mass charged on the closed window [lo, hi].
double mass_in_window(const Measure1D& mu, double lo, double hi);

// Component-wise comparison of canonical forms with relative tolerance tol.
bool approx_equal(const Measure1D& a, const Measure1D& b,
                  double tol = kCompareTol);

std::string to_string(const Measure1D& mu);

}  // namespace w2line
