#include "w2line/transport_rn.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <string>

namespace w2line {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

bool same_point(std::span<const double> a, std::span<const double> b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!nearly_equal(a[k], b[k])) return false;
  }
  return true;
}

}  // namespace

double squared_distance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double d = a[k] - b[k];
    s += d * d;
  }
  return s;
}

MeasureRn::MeasureRn(std::size_t dim, std::span<const std::vector<double>> points,
                     std::span<const double> weights)
    : MeasureRn(dim,
                [&] {
                  std::vector<double> coords;
                  for (const auto& p : points) {
                    if (p.size() != dim) {
                      throw std::invalid_argument("measure: point dimension mismatch");
                    }
                    coords.insert(coords.end(), p.begin(), p.end());
                  }
                  return coords;
                }(),
                std::vector<double>(weights.begin(), weights.end())) {}

MeasureRn::MeasureRn(std::size_t dim, std::vector<double> coords,
                     std::vector<double> weights)
    : dim_(dim) {
  if (dim == 0) throw std::invalid_argument("measure: dimension must be positive");
  if (weights.empty() || coords.size() != dim * weights.size()) {
    throw std::invalid_argument("measure: points and weights disagree");
  }
  double total = 0.0;
  for (double w : weights) {
    if (!std::isfinite(w) || !(w > 0.0)) {
      throw std::invalid_argument("measure: non-positive weight");
    }
    total += w;
  }
  for (double c : coords) {
    if (!std::isfinite(c)) throw std::invalid_argument("measure: non-finite coordinate");
  }
  if (std::abs(total - 1.0) > kCanonicalTol) {
    throw std::invalid_argument("measure: total mass differs from 1");
  }

  const std::size_t n = weights.size();
  auto pt = [&](std::size_t i) {
    return std::span<const double>(coords.data() + i * dim, dim);
  };
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto pa = pt(a);
    const auto pb = pt(b);
    return std::lexicographical_compare(pa.begin(), pa.end(), pb.begin(), pb.end());
  });
  for (std::size_t i : order) {
    const auto p = pt(i);
    if (!weights_.empty() && same_point(point(weights_.size() - 1), p)) {
      weights_.back() += weights[i] / total;
      continue;
    }
    coords_.insert(coords_.end(), p.begin(), p.end());
    weights_.push_back(weights[i] / total);
  }
}

MeasureRn MeasureRn::dirac(std::span<const double> point) {
  return MeasureRn(point.size(), std::vector<double>(point.begin(), point.end()), {1.0});
}

std::vector<double> barycenter(const MeasureRn& mu) {
  std::vector<double> g(mu.dim(), 0.0);
  for (std::size_t i = 0; i < mu.size(); ++i) {
    for (std::size_t k = 0; k < mu.dim(); ++k) g[k] += mu.weight(i) * mu.point(i)[k];
  }
  return g;
}

double deviation(const MeasureRn& mu) {
  const auto g = barycenter(mu);
  double s = 0.0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    s += mu.weight(i) * squared_distance(mu.point(i), g);
  }
  return std::sqrt(s);
}

bool approx_equal(const MeasureRn& a, const MeasureRn& b, double tol) {
  if (a.dim() != b.dim() || a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a.weight(i) - b.weight(i)) > tol) return false;
    for (std::size_t k = 0; k < a.dim(); ++k) {
      if (!nearly_equal(a.point(i)[k], b.point(i)[k], tol)) return false;
    }
  }
  return true;
}

MeasureRn translate(const MeasureRn& mu, std::span<const double> v) {
  if (v.size() != mu.dim()) throw std::invalid_argument("translate: dimension mismatch");
  std::vector<double> coords(mu.coords().begin(), mu.coords().end());
  for (std::size_t i = 0; i < mu.size(); ++i) {
    for (std::size_t k = 0; k < mu.dim(); ++k) coords[i * mu.dim() + k] += v[k];
  }
  return MeasureRn(mu.dim(), std::move(coords),
                   std::vector<double>(mu.weights().begin(), mu.weights().end()));
}

MeasureRn dilate(const MeasureRn& mu, std::span<const double> center, double lambda) {
  if (center.size() != mu.dim()) throw std::invalid_argument("dilate: dimension mismatch");
  std::vector<double> coords(mu.coords().begin(), mu.coords().end());
  for (std::size_t i = 0; i < mu.size(); ++i) {
    for (std::size_t k = 0; k < mu.dim(); ++k) {
      double& c = coords[i * mu.dim() + k];
      c = center[k] + lambda * (c - center[k]);
    }
  }
  return MeasureRn(mu.dim(), std::move(coords),
                   std::vector<double>(mu.weights().begin(), mu.weights().end()));
}

MeasureRn rotate_about_barycenter(const MeasureRn& mu, std::span<const double> linear) {
  const std::size_t d = mu.dim();
  if (linear.size() != d * d) {
    throw std::invalid_argument("rotate_about_barycenter: matrix size mismatch");
  }
  const auto g = barycenter(mu);
  std::vector<double> coords(mu.coords().size());
  for (std::size_t i = 0; i < mu.size(); ++i) {
    const auto p = mu.point(i);
    for (std::size_t r = 0; r < d; ++r) {
      double acc = g[r];
      for (std::size_t c = 0; c < d; ++c) acc += linear[r * d + c] * (p[c] - g[c]);
      coords[i * d + r] = acc;
    }
  }
  return MeasureRn(d, std::move(coords),
                   std::vector<double>(mu.weights().begin(), mu.weights().end()));
}

Coupling::Coupling(MeasureRn source, MeasureRn target, std::vector<CouplingEntry> entries)
    : source_(std::move(source)), target_(std::move(target)), entries_(std::move(entries)) {
  if (source_.dim() != target_.dim()) {
    throw std::invalid_argument("coupling: dimension mismatch");
  }
  std::vector<double> rows(source_.size(), 0.0);
  std::vector<double> cols(target_.size(), 0.0);
  for (const auto& e : entries_) {
    if (e.source >= source_.size() || e.target >= target_.size()) {
      throw std::invalid_argument("coupling: entry index out of range");
    }
    if (!std::isfinite(e.mass) || !(e.mass > 0.0)) {
      throw std::invalid_argument("coupling: non-positive entry mass");
    }
    rows[e.source] += e.mass;
    cols[e.target] += e.mass;
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (std::abs(rows[i] - source_.weight(i)) > kMarginalTol) {
      throw std::invalid_argument("coupling: source marginal mismatch");
    }
  }
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (std::abs(cols[j] - target_.weight(j)) > kMarginalTol) {
      throw std::invalid_argument("coupling: target marginal mismatch");
    }
  }
}

double Coupling::cost() const {
  double c = 0.0;
  for (const auto& e : entries_) {
    c += e.mass * squared_distance(source_point(e), target_point(e));
  }
  return c;
}

OtResult discrete_ot(const MeasureRn& mu, const MeasureRn& nu, OtOptions options) {
  if (mu.dim() != nu.dim()) throw std::invalid_argument("discrete_ot: dimension mismatch");
  if (mu.size() > options.max_points || nu.size() > options.max_points) {
    throw SizeLimitError("discrete_ot: more than " + std::to_string(options.max_points) +
                         " points on one side");
  }
  const std::size_t m = mu.size();
  const std::size_t n = nu.size();
  const std::size_t cells = m * n;

  std::vector<double> cost(cells);
  double max_cost = 1.0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      cost[i * n + j] = squared_distance(mu.point(i), nu.point(j));
      max_cost = std::max(max_cost, cost[i * n + j]);
    }
  }
  const double eps = 1e-13 * max_cost;
  // Flows below this are rounding residue of cancelled masses.
  constexpr double kFlowEps = 1e-14;

  // North-west corner start; ties advance the row so the basis always has
  // m + n - 1 cells (some possibly at zero flow).
  std::vector<double> flow(cells, 0.0);
  std::vector<char> basic(cells, 0);
  {
    std::size_t i = 0;
    std::size_t j = 0;
    double rs = mu.weight(0);
    double rd = nu.weight(0);
    while (true) {
      const double q = std::min(rs, rd);
      flow[i * n + j] = q;
      basic[i * n + j] = 1;
      if (i + 1 == m && j + 1 == n) break;
      if (j + 1 == n || (i + 1 < m && rs <= rd)) {
        rd = rd - q <= kFlowEps ? 0.0 : rd - q;
        rs = mu.weight(++i);
      } else {
        rs = rs - q <= kFlowEps ? 0.0 : rs - q;
        rd = nu.weight(++j);
      }
    }
  }

  // Nodes 0..m-1 are rows, m..m+n-1 columns.
  const std::size_t nodes = m + n;
  std::vector<double> pot(nodes);
  std::vector<char> seen(nodes);
  std::vector<std::vector<std::size_t>> adj(nodes);
  std::vector<std::size_t> parent_cell(nodes);
  std::vector<std::size_t> cycle;

  const std::size_t max_iter = 200 * cells + 1000;
  std::size_t iter = 0;
  for (; iter < max_iter; ++iter) {
    for (auto& a : adj) a.clear();
    for (std::size_t c = 0; c < cells; ++c) {
      if (!basic[c]) continue;
      adj[c / n].push_back(c);
      adj[m + c % n].push_back(c);
    }
    // Potentials u_i + v_j = c_ij on basic cells.
    std::fill(seen.begin(), seen.end(), 0);
    std::queue<std::size_t> queue;
    pot[0] = 0.0;
    seen[0] = 1;
    queue.push(0);
    while (!queue.empty()) {
      const std::size_t node = queue.front();
      queue.pop();
      for (std::size_t c : adj[node]) {
        const std::size_t other = node < m ? m + c % n : c / n;
        if (seen[other]) continue;
        seen[other] = 1;
        pot[other] = cost[c] - pot[node];
        queue.push(other);
      }
    }

    std::size_t enter = cells;
    for (std::size_t c = 0; c < cells; ++c) {
      if (basic[c]) continue;
      if (cost[c] - pot[c / n] - pot[m + c % n] < -eps) {
        enter = c;
        break;
      }
    }
    if (enter == cells) break;

    // Tree path from the entering row to the entering column.
    const std::size_t from = enter / n;
    const std::size_t to = m + enter % n;
    std::fill(seen.begin(), seen.end(), 0);
    seen[from] = 1;
    queue.push(from);
    while (!queue.empty()) {
      const std::size_t node = queue.front();
      queue.pop();
      if (node == to) break;
      for (std::size_t c : adj[node]) {
        const std::size_t other = node < m ? m + c % n : c / n;
        if (seen[other]) continue;
        seen[other] = 1;
        parent_cell[other] = c;
        queue.push(other);
      }
    }
    queue = {};
    cycle.clear();
    for (std::size_t node = to; node != from;) {
      const std::size_t c = parent_cell[node];
      cycle.push_back(c);
      node = node < m ? m + c % n : c / n;
    }
    // cycle[0], cycle[2], ... lose flow; ties leave by smallest cell index.
    double theta = INFINITY;
    std::size_t leave = cells;
    for (std::size_t k = 0; k < cycle.size(); k += 2) {
      const std::size_t c = cycle[k];
      if (flow[c] < theta || (flow[c] == theta && c < leave)) {
        theta = flow[c];
        leave = c;
      }
    }
    flow[enter] = theta;
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      double& f = flow[cycle[k]];
      f = k % 2 == 0 ? (f - theta <= kFlowEps ? 0.0 : f - theta) : f + theta;
    }
    flow[leave] = 0.0;
    basic[leave] = 0;
    basic[enter] = 1;
  }
  if (iter == max_iter) throw std::runtime_error("discrete_ot: pivot limit reached");

  std::vector<CouplingEntry> entries;
  for (std::size_t c = 0; c < cells; ++c) {
    if (basic[c] && flow[c] > kFlowEps) entries.push_back({c / n, c % n, flow[c]});
  }
  Coupling plan(mu, nu, std::move(entries));
  const double total = plan.cost();
  return {std::move(plan), total};
}

MeasureRn interpolate(const Coupling& plan, double t) {
  const std::size_t d = plan.source().dim();
  std::vector<double> coords;
  std::vector<double> masses;
  double total = 0.0;
  for (const auto& e : plan.entries()) {
    const auto x = plan.source_point(e);
    const auto y = plan.target_point(e);
    for (std::size_t k = 0; k < d; ++k) coords.push_back((1.0 - t) * x[k] + t * y[k]);
    masses.push_back(e.mass);
    total += e.mass;
  }
  for (double& w : masses) w /= total;
  return MeasureRn(d, std::move(coords), std::move(masses));
}

namespace {

std::vector<double> displacement(const Coupling& plan, const CouplingEntry& e) {
  const auto x = plan.source_point(e);
  const auto y = plan.target_point(e);
  std::vector<double> out(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) out[k] = y[k] - x[k];
  return out;
}

}  // namespace

std::optional<MonotonicityWitness> cyclical_monotonicity_check(const Coupling& plan) {
  const auto entries = plan.entries();
  const std::size_t d = plan.source().dim();
  std::vector<double> ds(d);
  std::vector<double> dt(d);
  for (std::size_t a = 0; a < entries.size(); ++a) {
    for (std::size_t b = a + 1; b < entries.size(); ++b) {
      const auto x0 = plan.source_point(entries[a]);
      const auto x1 = plan.target_point(entries[a]);
      const auto y0 = plan.source_point(entries[b]);
      const auto y1 = plan.target_point(entries[b]);
      for (std::size_t k = 0; k < d; ++k) {
        ds[k] = y0[k] - x0[k];
        dt[k] = y1[k] - x1[k];
      }
      const double product = dot(ds, dt);
      if (product < -1e-9) return MonotonicityWitness{a, b, product};
    }
  }
  return std::nullopt;
}

std::optional<std::vector<double>> is_translation_coupling(const Coupling& plan) {
  const auto entries = plan.entries();
  const auto u = displacement(plan, entries.front());
  for (const auto& e : entries) {
    const auto w = displacement(plan, e);
    for (std::size_t k = 0; k < u.size(); ++k) {
      if (!nearly_equal(w[k], u[k], 1e-9)) return std::nullopt;
    }
  }
  return u;
}

std::optional<GeodesicWitness> geodesic_inequality_witness(const Coupling& plan) {
  const auto entries = plan.entries();
  const std::size_t d = plan.source().dim();
  std::vector<double> u(d);
  std::vector<double> v(d);
  for (std::size_t a = 0; a < entries.size(); ++a) {
    for (std::size_t b = a + 1; b < entries.size(); ++b) {
      const auto x0 = plan.source_point(entries[a]);
      const auto x1 = plan.target_point(entries[a]);
      const auto y0 = plan.source_point(entries[b]);
      const auto y1 = plan.target_point(entries[b]);
      for (std::size_t k = 0; k < d; ++k) {
        u[k] = y0[k] - x0[k];
        v[k] = (y1[k] - x1[k]) - u[k];
      }
      const double vv = dot(v, v);
      const double uu = dot(u, u);
      if (std::sqrt(vv) <= 1e-9 * std::max(1.0, std::sqrt(uu))) continue;
      // (u + r v).(u + s v) = |w|^2 + (r - r*)(s - r*)|v|^2 with w the
      // component of u orthogonal to v; straddle r* by c with c^2 |v|^2 > |w|^2.
      const double uv = dot(u, v);
      const double center = -uv / vv;
      const double ww = std::max(0.0, uu - uv * uv / vv);
      const double c = std::sqrt(ww / vv + 1.0);
      const double r = center - c;
      const double s = center + c;
      const double value = uu + (r + s) * uv + r * s * vv;
      return GeodesicWitness{r, s, a, b, value};
    }
  }
  return std::nullopt;
}

double independent_coupling_cost(const MeasureRn& mu, const MeasureRn& nu) {
  if (mu.dim() != nu.dim()) {
    throw std::invalid_argument("independent_coupling_cost: dimension mismatch");
  }
  const double sigma = deviation(mu);
  const double rho = deviation(nu);
  return squared_distance(barycenter(mu), barycenter(nu)) + sigma * sigma + rho * rho;
}

double dilation_distance(const MeasureRn& mu, std::span<const double> center,
                         double lambda) {
  if (center.size() != mu.dim()) {
    throw std::invalid_argument("dilation_distance: dimension mismatch");
  }
  // For lambda < 0 the map is no longer the gradient of a convex function.
  if (!(lambda >= 0.0)) throw std::domain_error("dilation_distance: negative ratio");
  double s = 0.0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    s += mu.weight(i) * squared_distance(mu.point(i), center);
  }
  return std::abs(1.0 - lambda) * std::sqrt(s);
}

}  // namespace w2line
