#include "w2line/measure.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

namespace w2line {

bool nearly_equal(double a, double b, double tol) {
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= tol * scale;
}

QuantilePieces::QuantilePieces(std::vector<double> breakpoints,
                               std::vector<QuantilePiece> pieces)
    : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {
  if (pieces_.empty() || breakpoints_.size() != pieces_.size() + 1) {
    throw std::invalid_argument("quantile pieces: breakpoint count mismatch");
  }
  if (breakpoints_.front() != 0.0 || breakpoints_.back() != 1.0) {
    throw std::invalid_argument("quantile pieces: breakpoints must span [0,1]");
  }
  for (std::size_t k = 0; k + 1 < breakpoints_.size(); ++k) {
    if (!(breakpoints_[k] < breakpoints_[k + 1])) {
      throw std::invalid_argument(
          "quantile pieces: breakpoints must be strictly increasing");
    }
  }
  for (const auto& p : pieces_) {
    if (!std::isfinite(p.start) || !std::isfinite(p.end)) {
      throw std::invalid_argument("quantile pieces: non-finite value");
    }
  }
}

double QuantilePieces::operator()(double m) const {
  auto it = std::lower_bound(breakpoints_.begin() + 1, breakpoints_.end(), m);
  if (it == breakpoints_.end()) --it;
  const auto k = static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
  const double u = (m - breakpoints_[k]) / (breakpoints_[k + 1] - breakpoints_[k]);
  return pieces_[k].at(std::clamp(u, 0.0, 1.0));
}

namespace {

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw std::invalid_argument(std::string("measure: non-finite ") + what);
  }
}

// Sorted representatives of the given coordinates, coinciding values merged.
std::vector<double> merged_grid(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  std::vector<double> grid;
  for (double x : xs) {
    if (grid.empty() || !nearly_equal(grid.back(), x)) grid.push_back(x);
  }
  return grid;
}

double snap(const std::vector<double>& grid, double x) {
  auto it = std::lower_bound(grid.begin(), grid.end(), x);
  if (it != grid.end() && nearly_equal(*it, x)) return *it;
  if (it != grid.begin() && nearly_equal(*std::prev(it), x)) return *std::prev(it);
  return x;
}

}  // namespace

Measure1D::Measure1D(std::vector<Atom> atoms, std::vector<UniformPiece> uniform,
                     QuantilePieces quantile)
    : atoms_(std::move(atoms)),
      uniform_(std::move(uniform)),
      quantile_(std::move(quantile)) {}

Measure1D Measure1D::from_atoms(std::span<const Atom> atoms) {
  return from_parts(atoms, {});
}

Measure1D Measure1D::from_parts(std::span<const Atom> atoms,
                                std::span<const UniformPiece> uniform) {
  if (atoms.empty() && uniform.empty()) {
    throw std::invalid_argument("measure: no atoms and no uniform pieces");
  }
  double total = 0.0;
  for (const auto& a : atoms) {
    require_finite(a.x, "atom position");
    require_finite(a.w, "atom weight");
    if (!(a.w > 0.0)) throw std::invalid_argument("measure: non-positive weight");
    total += a.w;
  }
  for (const auto& u : uniform) {
    require_finite(u.a, "interval bound");
    require_finite(u.b, "interval bound");
    require_finite(u.mass, "uniform mass");
    if (!(u.mass > 0.0)) throw std::invalid_argument("measure: non-positive mass");
    if (!(u.a < u.b)) throw std::invalid_argument("measure: empty uniform interval");
    total += u.mass;
  }
  if (std::abs(total - 1.0) > kCanonicalTol) {
    throw std::invalid_argument("measure: total mass differs from 1");
  }

  std::vector<double> coords;
  for (const auto& a : atoms) coords.push_back(a.x);
  for (const auto& u : uniform) {
    coords.push_back(u.a);
    coords.push_back(u.b);
  }
  const std::vector<double> grid = merged_grid(std::move(coords));
  const std::size_t g = grid.size();

  std::vector<double> atom_weight(g, 0.0);
  auto grid_index = [&](double x) {
    return static_cast<std::size_t>(
        std::lower_bound(grid.begin(), grid.end(), snap(grid, x)) - grid.begin());
  };
  for (const auto& a : atoms) atom_weight[grid_index(a.x)] += a.w / total;

  // density on (grid[k], grid[k+1])
  std::vector<double> density(g, 0.0);
  for (const auto& u : uniform) {
    const std::size_t lo = grid_index(u.a);
    const std::size_t hi = grid_index(u.b);
    if (lo == hi) {
      atom_weight[lo] += u.mass / total;
      continue;
    }
    const double d = u.mass / total / (grid[hi] - grid[lo]);
    for (std::size_t k = lo; k < hi; ++k) density[k] += d;
  }

  std::vector<Atom> canon_atoms;
  std::vector<UniformPiece> canon_uniform;
  std::vector<QuantilePiece> pieces;
  std::vector<double> masses;
  double last_density = 0.0;  // density of the last quantile piece, if linear

  for (std::size_t k = 0; k < g; ++k) {
    if (atom_weight[k] > 0.0) {
      canon_atoms.push_back({grid[k], atom_weight[k]});
      pieces.push_back({grid[k], grid[k]});
      masses.push_back(atom_weight[k]);
      last_density = 0.0;
    }
    if (k + 1 == g || density[k] <= 0.0) {
      last_density = 0.0;
      continue;
    }
    const double m = density[k] * (grid[k + 1] - grid[k]);
    if (last_density > 0.0 && nearly_equal(last_density, density[k])) {
      pieces.back().end = grid[k + 1];
      masses.back() += m;
    } else {
      pieces.push_back({grid[k], grid[k + 1]});
      masses.push_back(m);
    }
    last_density = density[k];
    if (!canon_uniform.empty() && canon_uniform.back().b == grid[k] &&
        nearly_equal(canon_uniform.back().mass /
                         (canon_uniform.back().b - canon_uniform.back().a),
                     density[k])) {
      canon_uniform.back().b = grid[k + 1];
      canon_uniform.back().mass += m;
    } else {
      canon_uniform.push_back({grid[k], grid[k + 1], m});
    }
  }

  std::vector<double> breakpoints(masses.size() + 1, 0.0);
  std::partial_sum(masses.begin(), masses.end(), breakpoints.begin() + 1);
  breakpoints.back() = 1.0;
  // Rounding can push an interior breakpoint onto the end; drop such slivers.
  for (std::size_t k = breakpoints.size() - 1; k-- > 1;) {
    if (!(breakpoints[k] < breakpoints[k + 1])) {
      breakpoints.erase(breakpoints.begin() + static_cast<std::ptrdiff_t>(k));
      pieces.erase(pieces.begin() + static_cast<std::ptrdiff_t>(k));
    }
  }
  return Measure1D(std::move(canon_atoms), std::move(canon_uniform),
                   QuantilePieces(std::move(breakpoints), std::move(pieces)));
}

Measure1D Measure1D::from_quantile(const QuantilePieces& q) {
  std::vector<Atom> atoms;
  std::vector<UniformPiece> uniform;
  const auto pieces = q.pieces();
  double prev_end = -INFINITY;
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    const auto& p = pieces[k];
    const double m = q.mass(k);
    if (p.start < prev_end && !nearly_equal(p.start, prev_end)) {
      throw std::invalid_argument("quantile: decreasing jump");
    }
    if (nearly_equal(p.start, p.end)) {
      atoms.push_back({0.5 * (p.start + p.end), m});
    } else if (p.end > p.start) {
      uniform.push_back({p.start, p.end, m});
    } else {
      throw std::invalid_argument("quantile: decreasing piece");
    }
    prev_end = p.end;
  }
  return from_parts(atoms, uniform);
}

Measure1D Measure1D::dirac(double x) {
  const Atom a{x, 1.0};
  return from_atoms({&a, 1});
}

Measure1D Measure1D::uniform(double a, double b) {
  const UniformPiece u{a, b, 1.0};
  return from_parts({}, {&u, 1});
}

double quantile(const Measure1D& mu, double m) {
  if (!(m > 0.0 && m < 1.0)) {
    throw std::domain_error("quantile: mass level must lie in (0,1)");
  }
  return mu.quantile_pieces()(m);
}

double barycenter(const Measure1D& mu) {
  const auto& q = mu.quantile_pieces();
  double sum = 0.0;
  for (std::size_t k = 0; k < q.size(); ++k) {
    sum += q.mass(k) * 0.5 * (q.pieces()[k].start + q.pieces()[k].end);
  }
  return sum;
}

double second_moment_about(const Measure1D& mu, double center) {
  const auto& q = mu.quantile_pieces();
  double sum = 0.0;
  for (std::size_t k = 0; k < q.size(); ++k) {
    const double d0 = q.pieces()[k].start - center;
    const double d1 = q.pieces()[k].end - center;
    sum += q.mass(k) * (d0 * d0 + d0 * d1 + d1 * d1) / 3.0;
  }
  return sum;
}

double deviation(const Measure1D& mu) {
  return std::sqrt(std::max(0.0, second_moment_about(mu, barycenter(mu))));
}

Measure1D pushforward_affine(const Measure1D& mu, double a, double b) {
  if (a == 0.0) return Measure1D::dirac(b);
  std::vector<Atom> atoms;
  std::vector<UniformPiece> uniform;
  for (const auto& at : mu.atoms()) atoms.push_back({a * at.x + b, at.w});
  for (const auto& u : mu.uniform_pieces()) {
    const double lo = a * u.a + b;
    const double hi = a * u.b + b;
    uniform.push_back({std::min(lo, hi), std::max(lo, hi), u.mass});
  }
  return Measure1D::from_parts(atoms, uniform);
}

double mass_in_window(const Measure1D& mu, double lo, double hi) {
  double mass = 0.0;
  for (const auto& a : mu.atoms()) {
    if (a.x >= lo && a.x <= hi) mass += a.w;
  }
  for (const auto& u : mu.uniform_pieces()) {
    const double overlap = std::min(hi, u.b) - std::max(lo, u.a);
    if (overlap > 0.0) mass += u.mass * overlap / (u.b - u.a);
  }
  return mass;
}

bool approx_equal(const Measure1D& a, const Measure1D& b, double tol) {
  if (a.atoms().size() != b.atoms().size() ||
      a.uniform_pieces().size() != b.uniform_pieces().size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.atoms().size(); ++i) {
    const auto& p = a.atoms()[i];
    const auto& r = b.atoms()[i];
    if (!nearly_equal(p.x, r.x, tol) || std::abs(p.w - r.w) > tol) return false;
  }
  for (std::size_t i = 0; i < a.uniform_pieces().size(); ++i) {
    const auto& p = a.uniform_pieces()[i];
    const auto& r = b.uniform_pieces()[i];
    if (!nearly_equal(p.a, r.a, tol) || !nearly_equal(p.b, r.b, tol) ||
        std::abs(p.mass - r.mass) > tol) {
      return false;
    }
  }
  return true;
}

std::string to_string(const Measure1D& mu) {
  std::ostringstream os;
  os.precision(12);
  const char* sep = "";
  for (const auto& a : mu.atoms()) {
    os << sep << a.w << "*d(" << a.x << ")";
    sep = " + ";
  }
  for (const auto& u : mu.uniform_pieces()) {
    os << sep << u.mass << "*U[" << u.a << "," << u.b << "]";
    sep = " + ";
  }
  return os.str();
}

}  // namespace w2line
