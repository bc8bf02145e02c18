#include <algorithm>
#include <cmath>
#include <limits>

#include "doctest.h"
#include "oracles.hpp"
#include "w2line/random_measures.hpp"
#include "w2line/transport1d.hpp"

using namespace w2line;

namespace {

std::vector<double> positions(const Measure1D& mu, std::size_t n) {
  std::vector<double> x;
  for (const auto& a : mu.atoms()) {
    const auto copies = static_cast<std::size_t>(std::lround(a.w * n));
    x.insert(x.end(), copies, a.x);
  }
  return x;
}

}  // namespace

TEST_CASE("distance matches brute-force assignment") {
  Rng rng(5);
  std::uniform_int_distribution<std::size_t> size(1, 7);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = size(rng);
    const auto a = random_equal_weight_measure(rng, n);
    const auto b = random_equal_weight_measure(rng, n);
    const auto xa = positions(a, n);
    const auto xb = positions(b, n);
    CHECK(wasserstein2_squared(a, b) ==
          doctest::Approx(oracle::assignment_cost_1d(xa, xb)).epsilon(1e-12));
  }
}

TEST_CASE("distance matches numerical quantile integral on mixed measures") {
  Rng rng(6);
  for (int i = 0; i < 20; ++i) {
    const auto a = random_mixed_measure(rng, 4);
    const auto b = random_mixed_measure(rng, 4);
    const double approx = oracle::quantile_integral([&](double m) { return quantile(a, m); },
                                                    [&](double m) { return quantile(b, m); });
    CHECK(wasserstein2_squared(a, b) == doctest::Approx(approx).epsilon(1e-3));
  }
}

TEST_CASE("uniform to dirac") {
  CHECK(wasserstein2_squared(Measure1D::uniform(0.0, 1.0), Measure1D::dirac(0.0)) ==
        doctest::Approx(1.0 / 3.0));
  CHECK(wasserstein2(Measure1D::uniform(0.0, 1.0), Measure1D::uniform(2.0, 3.0)) ==
        doctest::Approx(2.0));
}

TEST_CASE("aligned breakpoints snap near-duplicates") {
  QuantilePieces a({0.0, 0.5, 1.0}, {{0.0, 0.0}, {1.0, 1.0}});
  QuantilePieces b({0.0, 0.5 + 1e-15, 1.0}, {{2.0, 2.0}, {3.0, 3.0}});
  const auto al = align(a, b);
  CHECK(al.breakpoints.size() == 3);
}

TEST_CASE("extension interval of dirac pairs") {
  const Atom two[] = {{-1.0, 0.5}, {1.0, 0.5}};
  const auto nu = Measure1D::from_atoms(two);
  const auto d0 = Measure1D::dirac(0.0);
  const auto e = extension_interval(d0, nu);
  CHECK(e.lo == 0.0);
  CHECK(e.hi == std::numeric_limits<double>::infinity());
  CHECK(to_string(e) == "[0, inf)");
  const auto back = extension_interval(nu, d0);
  CHECK(back.lo == -std::numeric_limits<double>::infinity());
  CHECK(back.hi == 1.0);
  CHECK(to_string(extension_interval(d0, Measure1D::dirac(3.0))) == "(-inf, inf)");
}

TEST_CASE("two-atom example extends to -1 and lands on a dirac") {
  const Atom a[] = {{-1.0, 0.5}, {1.0, 0.5}};
  const Atom b[] = {{-2.0, 0.5}, {2.0, 0.5}};
  const auto g = geodesic(Measure1D::from_atoms(a), Measure1D::from_atoms(b));
  CHECK(to_string(g.extension) == "[-1, inf)");
  const auto start = geodesic_eval(g, -1.0);
  CHECK(start.is_dirac());
  CHECK(start.atoms()[0].x == doctest::Approx(0.0));
  CHECK_THROWS_AS(geodesic_eval(g, -1.1), std::domain_error);
}

TEST_CASE("translations extend both ways") {
  const auto u = Measure1D::uniform(0.0, 1.0);
  const auto e = extension_interval(u, pushforward_affine(u, 1.0, 5.0));
  CHECK(std::isinf(e.lo));
  CHECK(std::isinf(e.hi));
}

TEST_CASE("geodesic midpoint from dirac to two atoms") {
  const Atom two[] = {{-1.0, 0.5}, {1.0, 0.5}};
  const auto g = geodesic(Measure1D::dirac(0.0), Measure1D::from_atoms(two));
  const Atom half[] = {{-0.5, 0.5}, {0.5, 0.5}};
  CHECK(approx_equal(geodesic_eval(g, 0.5), Measure1D::from_atoms(half)));
  CHECK(g.speed == doctest::Approx(1.0));
}

TEST_CASE("geodesic has constant speed on its extension") {
  Rng rng(8);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const auto g = geodesic(random_mixed_measure(rng, 5), random_mixed_measure(rng, 5));
    const double lo = std::max(g.extension.lo, -3.0);
    const double hi = std::min(g.extension.hi, 4.0);
    const double s = lo + (hi - lo) * unit(rng);
    const double t = lo + (hi - lo) * unit(rng);
    CHECK(wasserstein2(geodesic_eval(g, s), geodesic_eval(g, t)) ==
          doctest::Approx(std::abs(s - t) * g.speed).epsilon(1e-9).scale(1.0));
  }
}

TEST_CASE("extension endpoints are sharp") {
  Rng rng(9);
  for (int i = 0; i < 100; ++i) {
    const auto a = random_mixed_measure(rng, 5);
    const auto b = random_mixed_measure(rng, 5);
    const auto al = align(a.quantile_pieces(), b.quantile_pieces());
    const auto e = extension_interval(al);
    // Just outside a finite end some quantile piece must decrease.
    auto decreasing_at = [&](double t, double slack) {
      double prev = -std::numeric_limits<double>::infinity();
      for (std::size_t k = 0; k < al.first.size(); ++k) {
        const double s = (1 - t) * al.first[k].start + t * al.second[k].start;
        const double f = (1 - t) * al.first[k].end + t * al.second[k].end;
        if (s < prev - slack || f < s - slack) return true;
        prev = f;
      }
      return false;
    };
    if (std::isfinite(e.hi)) {
      CHECK_FALSE(decreasing_at(e.hi, 1e-9));
      CHECK(decreasing_at(e.hi + 1e-3 * std::max(1.0, std::abs(e.hi)), 0.0));
    }
    if (std::isfinite(e.lo)) {
      CHECK_FALSE(decreasing_at(e.lo, 1e-9));
      CHECK(decreasing_at(e.lo - 1e-3 * std::max(1.0, std::abs(e.lo)), 0.0));
    }
  }
}
