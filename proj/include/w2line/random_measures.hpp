#pragma once

#include <cstddef>
#include <random>

#include "w2line/measure.hpp"
#include "w2line/transport_rn.hpp"

namespace w2line {

using Rng = std::mt19937_64;

// 1..max_atoms atoms, positions uniform in [-5, 5], weights drawn in
// [0.1, 1] and normalized.
Measure1D random_atomic_measure(Rng& rng, std::size_t max_atoms);
// Exactly n atoms of weight 1/n (positions may coincide only with
// probability zero).
Measure1D random_equal_weight_measure(Rng& rng, std::size_t n);
// Random atoms plus up to two uniform pieces.
Measure1D random_mixed_measure(Rng& rng, std::size_t max_atoms);
// Exactly two atoms.
Measure1D random_two_atom_measure(Rng& rng);

MeasureRn random_measure_rn(Rng& rng, std::size_t dim, std::size_t max_points);

}  // namespace w2line
