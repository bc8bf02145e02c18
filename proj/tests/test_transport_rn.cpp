#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "w2line/random_measures.hpp"
#include "w2line/transport1d.hpp"
#include "w2line/transport_rn.hpp"

using namespace w2line;

namespace {

MeasureRn equal_weight_cloud(Rng& rng, std::size_t n, std::size_t dim) {
  std::uniform_real_distribution<double> coord(-3.0, 3.0);
  std::vector<double> coords(n * dim);
  for (auto& c : coords) c = coord(rng);
  return MeasureRn(dim, coords, std::vector<double>(n, 1.0 / n));
}

void normalize(std::vector<double>& w) {
  double total = 0.0;
  for (double v : w) total += v;
  for (double& v : w) v /= total;
}

}  // namespace

TEST_CASE("points are sorted, merged and normalized") {
  const std::vector<std::vector<double>> pts = {{1, 0}, {0, 0}, {1, 0}};
  const double w[] = {0.25, 0.5, 0.25};
  const MeasureRn mu(2, pts, w);
  REQUIRE(mu.size() == 2);
  CHECK(mu.point(0)[0] == 0.0);
  CHECK(mu.weight(1) == doctest::Approx(0.5));
  const std::vector<std::vector<double>> bad = {{0, 0, 0}};
  const double one[] = {1.0};
  CHECK_THROWS_AS(MeasureRn(2, bad, one), std::invalid_argument);
}

TEST_CASE("exact solver matches brute-force assignment") {
  Rng rng(31);
  std::uniform_int_distribution<std::size_t> size(1, 7);
  for (int i = 0; i < 80; ++i) {
    const std::size_t n = size(rng);
    const std::size_t dim = 1 + i % 3;
    const auto a = equal_weight_cloud(rng, n, dim);
    const auto b = equal_weight_cloud(rng, n, dim);
    CHECK(discrete_ot(a, b).cost ==
          doctest::Approx(oracle::assignment_cost(a.coords(), b.coords(), dim)).epsilon(1e-10));
  }
}

TEST_CASE("plans are basic solutions with valid marginals") {
  Rng rng(32);
  for (int i = 0; i < 40; ++i) {
    const auto a = random_measure_rn(rng, 2, 12);
    const auto b = random_measure_rn(rng, 2, 12);
    const auto r = discrete_ot(a, b);
    CHECK(r.plan.entries().size() <= a.size() + b.size() - 1);
    CHECK(r.cost == doctest::Approx(r.plan.cost()));
    CHECK_FALSE(cyclical_monotonicity_check(r.plan).has_value());
    CHECK(r.cost <= independent_coupling_cost(a, b) + 1e-9);
  }
}

TEST_CASE("size cap raises SizeLimitError") {
  Rng rng(33);
  const auto a = equal_weight_cloud(rng, 10, 2);
  CHECK_THROWS_AS(discrete_ot(a, a, {5}), SizeLimitError);
  const auto c = equal_weight_cloud(rng, 3, 3);
  CHECK_THROWS_AS(discrete_ot(a, c), std::invalid_argument);
}

TEST_CASE("coupling rejects wrong marginals") {
  const double p[] = {0.0, 1.0};
  const double w[] = {0.5, 0.5};
  const MeasureRn a(1, std::vector<double>(p, p + 2), std::vector<double>(w, w + 2));
  CHECK_THROWS_AS(Coupling(a, a, {{0, 0, 0.5}, {1, 1, 0.4}}), std::invalid_argument);
  CHECK_THROWS_AS(Coupling(a, a, {{0, 2, 0.5}, {1, 1, 0.5}}), std::invalid_argument);
  CHECK_NOTHROW(Coupling(a, a, {{0, 1, 0.5}, {1, 0, 0.5}}));
}

TEST_CASE("crossed matching fails cyclical monotonicity") {
  const double p[] = {0.0, 1.0};
  const double w[] = {0.5, 0.5};
  const MeasureRn a(1, std::vector<double>(p, p + 2), std::vector<double>(w, w + 2));
  const Coupling crossed(a, a, {{0, 1, 0.5}, {1, 0, 0.5}});
  const auto witness = cyclical_monotonicity_check(crossed);
  REQUIRE(witness.has_value());
  CHECK(witness->product == doctest::Approx(-1.0));
}

TEST_CASE("translations are transported rigidly") {
  Rng rng(34);
  for (int i = 0; i < 30; ++i) {
    const auto mu = random_measure_rn(rng, 3, 8);
    const double v[] = {0.3 * i - 2.0, 1.5, -0.7};
    const auto r = discrete_ot(mu, translate(mu, v));
    const double norm2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
    CHECK(r.cost == doctest::Approx(norm2).epsilon(1e-9));
    const auto u = is_translation_coupling(r.plan);
    REQUIRE(u.has_value());
    CHECK((*u)[0] == doctest::Approx(v[0]));
    CHECK_FALSE(geodesic_inequality_witness(r.plan).has_value());
  }
}

TEST_CASE("orthogonal supports cost as much as the product coupling") {
  Rng rng(35);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  for (int i = 0; i < 30; ++i) {
    std::vector<double> xs, ys, wx, wy;
    for (int k = 0; k < 4; ++k) {
      xs.insert(xs.end(), {coord(rng), 0.0});
      ys.insert(ys.end(), {0.0, coord(rng)});
      wx.push_back(1.0 + std::abs(coord(rng)));
      wy.push_back(1.0 + k);
    }
    normalize(wx);
    normalize(wy);
    const MeasureRn a(2, xs, wx);
    const MeasureRn b(2, ys, wy);
    CHECK(discrete_ot(a, b).cost == doctest::Approx(independent_coupling_cost(a, b)).epsilon(1e-9));
  }
}

TEST_CASE("dilation by two about the barycenter moves a unit-deviation measure by one") {
  const double p[] = {-1.0, 1.0};
  const double w[] = {0.5, 0.5};
  const MeasureRn mu(1, std::vector<double>(p, p + 2), std::vector<double>(w, w + 2));
  const double c[] = {0.0};
  CHECK(dilation_distance(mu, c, 2.0) == doctest::Approx(1.0));
  CHECK(std::sqrt(discrete_ot(mu, dilate(mu, c, 2.0)).cost) == doctest::Approx(1.0));
  Rng rng(36);
  for (int i = 0; i < 20; ++i) {
    const auto m = random_measure_rn(rng, 2, 6);
    const double center[] = {0.5, -1.0};
    const double lambda = 0.1 + 0.2 * i;
    CHECK(dilation_distance(m, center, lambda) ==
          doctest::Approx(std::sqrt(discrete_ot(m, dilate(m, center, lambda)).cost))
              .epsilon(1e-9));
  }
  // A point reflection is cheaper than the dilation coupling suggests.
  CHECK_THROWS_AS(dilation_distance(mu, c, -1.0), std::domain_error);
  CHECK(discrete_ot(mu, dilate(mu, c, -1.0)).cost == doctest::Approx(0.0));
}

TEST_CASE("rotation about the barycenter preserves distances") {
  Rng rng(37);
  const double th = 0.9;
  const double rot[] = {std::cos(th), -std::sin(th), std::sin(th), std::cos(th)};
  for (int i = 0; i < 20; ++i) {
    const auto a = random_measure_rn(rng, 2, 6);
    const auto b = random_measure_rn(rng, 2, 6);
    const double d = discrete_ot(a, b).cost;
    const double e = discrete_ot(rotate_about_barycenter(a, rot), rotate_about_barycenter(b, rot)).cost;
    CHECK(e == doctest::Approx(d).epsilon(1e-9));
    CHECK(deviation(rotate_about_barycenter(a, rot)) == doctest::Approx(deviation(a)));
  }
}

TEST_CASE("geodesic inequality witness for a dilation") {
  const double p[] = {0.0, 1.0};
  const double w[] = {0.5, 0.5};
  const MeasureRn a(1, std::vector<double>(p, p + 2), std::vector<double>(w, w + 2));
  const double c[] = {0.0};
  const auto r = discrete_ot(a, dilate(a, c, 2.0));
  const auto wit = geodesic_inequality_witness(r.plan);
  REQUIRE(wit.has_value());
  CHECK(wit->value < 0.0);
  CHECK(wit->r <= wit->s);
}

TEST_CASE("every non-translation plan has a finite witness") {
  Rng rng(38);
  for (int i = 0; i < 50; ++i) {
    const auto a = random_measure_rn(rng, 2, 6);
    const auto b = random_measure_rn(rng, 2, 6);
    const auto r = discrete_ot(a, b);
    if (is_translation_coupling(r.plan)) continue;
    const auto wit = geodesic_inequality_witness(r.plan);
    REQUIRE(wit.has_value());
    CHECK(std::isfinite(wit->r));
    CHECK(std::isfinite(wit->s));
    CHECK(wit->value < 0.0);
    // Recompute the quadratic from the support pairs.
    const auto& e0 = r.plan.entries()[wit->first];
    const auto& e1 = r.plan.entries()[wit->second];
    // Pairs (x0, x1) and (y0, y1) of the plan's support.
    const auto x0 = r.plan.source_point(e0);
    const auto x1 = r.plan.target_point(e0);
    const auto y0 = r.plan.source_point(e1);
    const auto y1 = r.plan.target_point(e1);
    double uu = 0, uv = 0, vv = 0;
    for (std::size_t k = 0; k < 2; ++k) {
      const double u = y0[k] - x0[k];
      const double v = (y1[k] - x1[k]) - u;
      uu += u * u;
      uv += u * v;
      vv += v * v;
    }
    CHECK(uu + (wit->r + wit->s) * uv + wit->r * wit->s * vv ==
          doctest::Approx(wit->value).epsilon(1e-9));
  }
}

TEST_CASE("interpolation along a plan has the expected endpoints") {
  Rng rng(39);
  const auto a = random_measure_rn(rng, 2, 5);
  const auto b = random_measure_rn(rng, 2, 5);
  const auto r = discrete_ot(a, b);
  CHECK(approx_equal(interpolate(r.plan, 0.0), a));
  CHECK(approx_equal(interpolate(r.plan, 1.0), b));
  const double d = std::sqrt(r.cost);
  CHECK(std::sqrt(discrete_ot(a, interpolate(r.plan, 0.3)).cost) == doctest::Approx(0.3 * d));
}
