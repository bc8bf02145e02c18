#include "doctest.h"
#include "w2line/kernels.hpp"
#include "w2line/random_measures.hpp"

using namespace w2line;

TEST_CASE("parallel kernels reproduce the serial reference") {
  Rng rng(61);
  std::vector<Measure1D> mixed, atomic;
  std::vector<kernels::Triangle1D> tris;
  for (int i = 0; i < 40; ++i) {
    mixed.push_back(random_mixed_measure(rng, 6));
    atomic.push_back(random_atomic_measure(rng, 6));
    tris.push_back({random_mixed_measure(rng, 4), random_mixed_measure(rng, 4),
                    random_mixed_measure(rng, 4)});
  }
  CHECK(kernels::pairwise_w2(mixed) == kernels::ref::pairwise_w2(mixed));
  const double ts[] = {0.25, 0.5};
  CHECK(kernels::comparison_defects(tris, ts) == kernels::ref::comparison_defects(tris, ts));
  const auto a = kernels::flow_batch(atomic, -0.4);
  const auto b = kernels::ref::flow_batch(atomic, -0.4);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(approx_equal(a[i], b[i], 0.0));
  CHECK(kernels::thread_count() >= 1);
}

TEST_CASE("pairwise matrix is symmetric with zero diagonal") {
  Rng rng(62);
  std::vector<Measure1D> ms;
  for (int i = 0; i < 10; ++i) ms.push_back(random_mixed_measure(rng, 4));
  const auto d = kernels::pairwise_w2(ms);
  for (std::size_t i = 0; i < 10; ++i) {
    CHECK(d[i * 10 + i] == 0.0);
    for (std::size_t j = 0; j < 10; ++j) CHECK(d[i * 10 + j] == d[j * 10 + i]);
  }
}

TEST_CASE("errors inside a parallel kernel propagate") {
  std::vector<Measure1D> ms = {Measure1D::dirac(0.0), Measure1D::uniform(0.0, 1.0)};
  CHECK_THROWS_AS(kernels::flow_batch(ms, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(kernels::ref::flow_batch(ms, 1.0), std::invalid_argument);
}
