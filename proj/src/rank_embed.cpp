#include "w2line/rank_embed.hpp"

#include <algorithm>
#include <cmath>

namespace w2line {

namespace {

Measure1D embed(std::span<const double> x, double scale) {
  if (x.empty()) throw std::invalid_argument("embed: empty tuple");
  if (!std::is_sorted(x.begin(), x.end())) {
    throw std::invalid_argument("embed: tuple must be non-decreasing");
  }
  const double w = 1.0 / static_cast<double>(x.size());
  std::vector<Atom> atoms;
  atoms.reserve(x.size());
  for (double xi : x) atoms.push_back({scale * xi, w});
  return Measure1D::from_atoms(atoms);
}

}  // namespace

Measure1D embed_sorted_tuple(std::span<const double> x) {
  return embed(x, std::sqrt(static_cast<double>(x.size())));
}

Measure1D embed_sorted_tuple_unscaled(std::span<const double> x) { return embed(x, 1.0); }

std::array<std::vector<double>, 3> flat_triangle_vertices(std::size_t k, double side) {
  if (k < 2) throw std::invalid_argument("flat_triangle: need k >= 2");
  if (!(side >= 0.0) || !std::isfinite(side)) {
    throw std::invalid_argument("flat_triangle: side must be finite and non-negative");
  }
  // Base point with gaps wider than the triangle, so every vertex stays sorted.
  const double gap = 2.0 * side + 1.0;
  std::vector<double> base(k);
  for (std::size_t i = 0; i < k; ++i) base[i] = gap * static_cast<double>(i);
  std::array<std::vector<double>, 3> v = {base, base, base};
  v[1][0] += side;
  v[2][0] += 0.5 * side;
  v[2][1] += 0.5 * std::sqrt(3.0) * side;
  return v;
}

std::array<Measure1D, 3> flat_triangle(std::size_t k, double side) {
  const auto v = flat_triangle_vertices(k, side);
  return {embed_sorted_tuple(v[0]), embed_sorted_tuple(v[1]), embed_sorted_tuple(v[2])};
}

}  // namespace w2line
