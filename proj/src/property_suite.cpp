#include "w2line/property_suite.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "w2line/curvature.hpp"
#include "w2line/isometry1d.hpp"
#include "w2line/kernels.hpp"
#include "w2line/random_measures.hpp"
#include "w2line/rank_embed.hpp"
#include "w2line/transport1d.hpp"
#include "w2line/transport_rn.hpp"

namespace w2line {

namespace {

class Batch {
 public:
  Batch(std::string name, double tolerance) : name_(std::move(name)), tol_(tolerance) {}

  void observe(double error, const std::string& where = {}) {
    if (!(error <= worst_)) {  // NaN counts as worst
      worst_ = error;
      where_ = where;
    }
  }
  void fail(const std::string& why) {
    failed_ = true;
    where_ = why;
  }

  PropertyResult result() const {
    const bool ok = !failed_ && worst_ <= tol_;
    return {name_, ok, worst_, tol_, ok ? std::string() : where_};
  }

 private:
  std::string name_;
  double tol_;
  double worst_ = 0.0;
  bool failed_ = false;
  std::string where_;
};

double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

Measure1D embed_rn_line(const MeasureRn& mu) {
  std::vector<Atom> atoms;
  for (std::size_t i = 0; i < mu.size(); ++i) atoms.push_back({mu.point(i)[0], mu.weight(i)});
  return Measure1D::from_atoms(atoms);
}

}  // namespace

std::vector<PropertyResult> run_property_suite(std::uint64_t seed) {
  std::vector<PropertyResult> out;
  Rng rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> flow_time(-3.0, 3.0);

  {
    Batch b("w2.symmetry_triangle", 1e-9);
    for (int i = 0; i < 200; ++i) {
      const auto x = random_mixed_measure(rng, 6);
      const auto y = random_mixed_measure(rng, 6);
      const auto z = random_mixed_measure(rng, 6);
      const double xy = wasserstein2(x, y);
      b.observe(std::abs(xy - wasserstein2(y, x)), "symmetry");
      b.observe(xy - wasserstein2(x, z) - wasserstein2(z, y), "triangle");
    }
    out.push_back(b.result());
  }
  {
    Batch b("measures.deviation_is_distance_to_barycenter", 1e-9);
    Batch q("measures.quantile_round_trip", 0.0);
    for (int i = 0; i < 200; ++i) {
      const auto mu = random_mixed_measure(rng, 6);
      b.observe(rel(wasserstein2(mu, Measure1D::dirac(barycenter(mu))), deviation(mu)));
      if (!approx_equal(Measure1D::from_quantile(mu.quantile_pieces()), mu, 1e-12)) {
        q.fail("round trip changed " + to_string(mu));
      }
    }
    out.push_back(b.result());
    out.push_back(q.result());
  }
  {
    Batch b("geodesic.constant_speed", 1e-9);
    for (int i = 0; i < 100; ++i) {
      const auto g = geodesic(random_mixed_measure(rng, 5), random_mixed_measure(rng, 5));
      const double lo = std::max(g.extension.lo, -2.0);
      const double hi = std::min(g.extension.hi, 3.0);
      const double s = lo + (hi - lo) * unit(rng);
      const double t = lo + (hi - lo) * unit(rng);
      const double d = wasserstein2(geodesic_eval(g, s), geodesic_eval(g, t));
      b.observe(std::abs(d - std::abs(s - t) * g.speed) / std::max(1.0, g.speed));
    }
    out.push_back(b.result());
  }
  {
    Batch b("curvature.flat_triangles", 1e-8);
    std::vector<kernels::Triangle1D> tris;
    for (int i = 0; i < 250; ++i) {
      tris.push_back({random_mixed_measure(rng, 6), random_mixed_measure(rng, 6),
                      random_mixed_measure(rng, 6)});
    }
    const double ts[] = {0.25, 0.37, 0.5, 0.9};
    for (double d : kernels::comparison_defects(tris, ts)) b.observe(std::abs(d));
    out.push_back(b.result());
  }
  {
    Batch iso("flow.isometry", 1e-7);
    Batch law("flow.flow_law", 1e-7);
    Batch inv("flow.barycenter_deviation", 1e-9);
    Batch count("flow.atom_count", 0.0);
    std::vector<Measure1D> batch;
    for (int i = 0; i < 60; ++i) batch.push_back(random_atomic_measure(rng, 6));
    const double t = flow_time(rng);
    const double s = flow_time(rng);
    const auto once = kernels::flow_batch(batch, t);
    const auto twice = kernels::flow_batch(once, s);
    const auto direct = kernels::flow_batch(batch, s + t);
    const auto before = kernels::pairwise_w2(batch);
    const auto after = kernels::pairwise_w2(once);
    for (std::size_t k = 0; k < before.size(); ++k) iso.observe(std::abs(before[k] - after[k]));
    for (std::size_t i = 0; i < batch.size(); ++i) {
      law.observe(wasserstein2(twice[i], direct[i]));
      inv.observe(std::abs(barycenter(once[i]) - barycenter(batch[i])));
      inv.observe(std::abs(deviation(once[i]) - deviation(batch[i])));
      if (once[i].atom_count() > batch[i].atom_count()) {
        count.fail("flow grew atom count of " + to_string(batch[i]));
      }
    }
    out.push_back(iso.result());
    out.push_back(law.result());
    out.push_back(inv.result());
    out.push_back(count.result());
  }
  {
    Batch b("delta2.closed_form_distance", 1e-9);
    for (int i = 0; i < 100; ++i) {
      const auto a = random_two_atom_measure(rng);
      const auto c = random_two_atom_measure(rng);
      b.observe(std::abs(delta2_distance(delta2_params(a), delta2_params(c)) -
                         wasserstein2(a, c)));
    }
    out.push_back(b.result());
  }
  {
    Batch b("group.action_compatibility", 1e-7);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int i = 0; i < 30; ++i) {
      auto element = [&] {
        return IsometryElement{coin(rng) ? 1 : -1, flow_time(rng), coin(rng) ? 1 : -1,
                               flow_time(rng)};
      };
      const auto g1 = element();
      const auto g2 = element();
      const auto mu = random_atomic_measure(rng, 5);
      b.observe(wasserstein2(apply_isometry(g1, apply_isometry(g2, mu)),
                             apply_isometry(compose(g1, g2), mu)));
    }
    out.push_back(b.result());
  }
  {
    Batch mono("ot.cyclical_monotonicity", 0.0);
    Batch line("ot.agrees_with_quantile_formula", 1e-8);
    Batch upper("ot.independent_cost_upper_bound", 1e-9);
    for (int i = 0; i < 60; ++i) {
      const auto mu = random_measure_rn(rng, 2, 10);
      const auto nu = random_measure_rn(rng, 2, 10);
      const auto r = discrete_ot(mu, nu);
      if (auto w = cyclical_monotonicity_check(r.plan)) {
        mono.fail("monotonicity violated, product " + std::to_string(w->product));
      }
      upper.observe(r.cost - independent_coupling_cost(mu, nu));
      const auto a = random_measure_rn(rng, 1, 10);
      const auto c = random_measure_rn(rng, 1, 10);
      line.observe(std::abs(discrete_ot(a, c).cost -
                            wasserstein2_squared(embed_rn_line(a), embed_rn_line(c))));
    }
    out.push_back(mono.result());
    out.push_back(line.result());
    out.push_back(upper.result());
  }
  {
    Batch b("rank.embedding_isometry", 1e-9);
    std::uniform_int_distribution<std::size_t> dim(1, 10);
    std::uniform_real_distribution<double> coord(-10.0, 10.0);
    for (int i = 0; i < 100; ++i) {
      const std::size_t k = dim(rng);
      std::vector<double> x(k);
      std::vector<double> y(k);
      for (auto& v : x) v = coord(rng);
      for (auto& v : y) v = coord(rng);
      std::sort(x.begin(), x.end());
      std::sort(y.begin(), y.end());
      double e = 0.0;
      for (std::size_t j = 0; j < k; ++j) e += (x[j] - y[j]) * (x[j] - y[j]);
      b.observe(std::abs(wasserstein2(embed_sorted_tuple(x), embed_sorted_tuple(y)) -
                         std::sqrt(e)));
    }
    out.push_back(b.result());
  }
  return out;
}

}  // namespace w2line
