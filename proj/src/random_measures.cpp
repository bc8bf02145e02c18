#include "w2line/random_measures.hpp"

#include <numeric>
#include <vector>

namespace w2line {

namespace {

std::vector<double> random_weights(Rng& rng, std::size_t n) {
  std::uniform_real_distribution<double> w(0.1, 1.0);
  std::vector<double> out(n);
  for (double& x : out) x = w(rng);
  const double total = std::accumulate(out.begin(), out.end(), 0.0);
  for (double& x : out) x /= total;
  return out;
}

std::size_t random_count(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace

Measure1D random_atomic_measure(Rng& rng, std::size_t max_atoms) {
  std::uniform_real_distribution<double> pos(-5.0, 5.0);
  const std::size_t n = random_count(rng, 1, max_atoms);
  const auto w = random_weights(rng, n);
  std::vector<Atom> atoms(n);
  for (std::size_t i = 0; i < n; ++i) atoms[i] = {pos(rng), w[i]};
  return Measure1D::from_atoms(atoms);
}

Measure1D random_equal_weight_measure(Rng& rng, std::size_t n) {
  std::uniform_real_distribution<double> pos(-5.0, 5.0);
  std::vector<Atom> atoms(n);
  for (auto& a : atoms) a = {pos(rng), 1.0 / static_cast<double>(n)};
  return Measure1D::from_atoms(atoms);
}

Measure1D random_mixed_measure(Rng& rng, std::size_t max_atoms) {
  std::uniform_real_distribution<double> pos(-5.0, 5.0);
  std::uniform_real_distribution<double> len(0.1, 3.0);
  const std::size_t atoms_n = random_count(rng, 0, max_atoms);
  const std::size_t pieces_n = random_count(rng, atoms_n == 0 ? 1 : 0, 2);
  const auto w = random_weights(rng, atoms_n + pieces_n);
  std::vector<Atom> atoms(atoms_n);
  std::vector<UniformPiece> pieces(pieces_n);
  for (std::size_t i = 0; i < atoms_n; ++i) atoms[i] = {pos(rng), w[i]};
  for (std::size_t i = 0; i < pieces_n; ++i) {
    const double a = pos(rng);
    pieces[i] = {a, a + len(rng), w[atoms_n + i]};
  }
  return Measure1D::from_parts(atoms, pieces);
}

Measure1D random_two_atom_measure(Rng& rng) {
  std::uniform_real_distribution<double> pos(-5.0, 5.0);
  const auto w = random_weights(rng, 2);
  const double a = pos(rng);
  double b = pos(rng);
  while (b == a) b = pos(rng);
  const Atom atoms[] = {{a, w[0]}, {b, w[1]}};
  return Measure1D::from_atoms(atoms);
}

MeasureRn random_measure_rn(Rng& rng, std::size_t dim, std::size_t max_points) {
  std::uniform_real_distribution<double> pos(-3.0, 3.0);
  const std::size_t n = random_count(rng, 1, max_points);
  std::vector<double> coords(n * dim);
  for (double& c : coords) c = pos(rng);
  return MeasureRn(dim, std::move(coords), random_weights(rng, n));
}

}  // namespace w2line
