#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "w2line/random_measures.hpp"
#include "w2line/rank_embed.hpp"
#include "w2line/transport1d.hpp"

using namespace w2line;

TEST_CASE("embedding is an isometry of the sorted cone") {
  Rng rng(51);
  std::uniform_int_distribution<std::size_t> dim(1, 10);
  std::uniform_real_distribution<double> coord(-10.0, 10.0);
  for (int i = 0; i < 200; ++i) {
    const std::size_t k = dim(rng);
    std::vector<double> x(k), y(k);
    for (auto& v : x) v = coord(rng);
    for (auto& v : y) v = coord(rng);
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    double e = 0.0;
    for (std::size_t j = 0; j < k; ++j) e += (x[j] - y[j]) * (x[j] - y[j]);
    CHECK(std::abs(wasserstein2(embed_sorted_tuple(x), embed_sorted_tuple(y)) - std::sqrt(e)) <=
          1e-9);
    CHECK(wasserstein2(embed_sorted_tuple_unscaled(x), embed_sorted_tuple_unscaled(y)) ==
          doctest::Approx(std::sqrt(e / k)));
  }
}

TEST_CASE("embedding validates input") {
  CHECK_THROWS_AS(embed_sorted_tuple(std::vector<double>{1.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(embed_sorted_tuple(std::vector<double>{}), std::invalid_argument);
  const auto mu = embed_sorted_tuple(std::vector<double>{0.0, 1.0, 3.0});
  CHECK(mu.atom_count() == 3);
  CHECK(mu.atoms()[2].x == doctest::Approx(3.0 * std::sqrt(3.0)));
}

TEST_CASE("flat triangle vertices lie in the sorted cone") {
  CHECK_THROWS_AS(flat_triangle_vertices(1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(flat_triangle_vertices(3, -1.0), std::invalid_argument);
  for (double side : {1.0, 1e3, 1e6}) {
    const auto v = flat_triangle_vertices(4, side);
    for (const auto& p : v) CHECK(std::is_sorted(p.begin(), p.end()));
    const auto tri = flat_triangle(4, side);
    CHECK(std::abs(wasserstein2(tri[0], tri[2]) - side) <= 1e-9 * side);
  }
}
