#pragma once

#include <array>
#include <span>
#include <vector>

#include "w2line/measure.hpp"

namespace w2line {

// (x_1 <= ... <= x_k) -> (1/k) sum delta_{sqrt(k) x_i}. The sqrt(k) factor
// makes the map an isometry from the sorted cone of R^k with its Euclidean
// metric onto its image. Throws std::invalid_argument on unsorted or empty input.
Measure1D embed_sorted_tuple(std::span<const double> x);

// (1/k) sum delta_{x_i}; distances come out as |x - y| / sqrt(k).
Measure1D embed_sorted_tuple_unscaled(std::span<const double> x);

// Vertices of an equilateral triangle of the given side placed inside the
// sorted cone of R^k. Throws std::invalid_argument for k < 2 or side < 0.
std::array<std::vector<double>, 3> flat_triangle_vertices(std::size_t k, double side);

// Images of flat_triangle_vertices: three measures pairwise at distance `side`.
std::array<Measure1D, 3> flat_triangle(std::size_t k, double side);

}  // namespace w2line
