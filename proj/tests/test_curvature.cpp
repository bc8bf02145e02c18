#include <cmath>

#include "doctest.h"
#include "w2line/curvature.hpp"
#include "w2line/random_measures.hpp"
#include "w2line/rank_embed.hpp"
#include "w2line/transport1d.hpp"

using namespace w2line;

TEST_CASE("triangles on the line are flat") {
  Rng rng(41);
  for (int i = 0; i < 200; ++i) {
    const auto x = random_mixed_measure(rng, 6);
    const auto y = random_mixed_measure(rng, 6);
    const auto z = random_mixed_measure(rng, 6);
    for (double t : {0.0, 0.25, 0.37, 0.5, 0.9, 1.0}) {
      CHECK(std::abs(comparison_defect(x, y, z, t)) <= 1e-8);
    }
  }
  CHECK_THROWS_AS(comparison_defect(Measure1D::dirac(0), Measure1D::dirac(1),
                                    Measure1D::dirac(2), 1.5),
                  std::domain_error);
}

TEST_CASE("defect of a Euclidean triangle embedded in R^n is zero") {
  Rng rng(42);
  for (int i = 0; i < 20; ++i) {
    const auto x = random_measure_rn(rng, 1, 5);
    const auto y = random_measure_rn(rng, 1, 5);
    const auto z = random_measure_rn(rng, 1, 5);
    const auto plan = discrete_ot(x, z).plan;
    CHECK(std::abs(comparison_defect(x, y, z, 0.4, plan)) <= 1e-8);
  }
}

TEST_CASE("branching witness") {
  const auto w = branching_witness();
  CHECK(w.plan_a.cost() == doctest::Approx(w.plan_b.cost()).epsilon(1e-12));
  CHECK(w.plan_a.cost() == doctest::Approx(discrete_ot(w.x, w.z).cost));
  CHECK(w.midpoint_gap == doctest::Approx(1.0));
  CHECK(std::sqrt(discrete_ot(w.mid_a, w.mid_b).cost) == doctest::Approx(w.midpoint_gap));
  CHECK(comparison_defect(w.x, w.mid_b, w.z, 0.5, w.plan_a) == doctest::Approx(1.0));
}

TEST_CASE("flat triangle measures are equilateral") {
  for (std::size_t k : {2, 3, 7}) {
    const auto tri = flat_triangle(k, 5.0);
    CHECK(wasserstein2(tri[0], tri[1]) == doctest::Approx(5.0));
    CHECK(wasserstein2(tri[1], tri[2]) == doctest::Approx(5.0));
    CHECK(wasserstein2(tri[0], tri[2]) == doctest::Approx(5.0));
    CHECK(std::abs(comparison_defect(tri[0], tri[1], tri[2], 0.5)) < 1e-9);
  }
}
