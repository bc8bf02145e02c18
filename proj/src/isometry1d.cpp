#include "w2line/isometry1d.hpp"

#include <cmath>
#include <map>
#include <utility>

#include "w2line/transport1d.hpp"

namespace w2line {

Delta2Params delta2_params(const Measure1D& mu) {
  if (!mu.is_atomic() || mu.atom_count() != 2) {
    throw std::invalid_argument("delta2_params: measure must have exactly two atoms");
  }
  const Atom left = mu.atoms()[0];
  const Atom right = mu.atoms()[1];
  const double a = left.w;
  const double b = right.w;
  return {a * left.x + b * right.x, (right.x - left.x) * std::sqrt(a * b),
          0.5 * std::log(b / a)};
}

Measure1D measure_from_params(const Delta2Params& params) {
  if (!(params.sigma >= 0.0)) {
    throw std::invalid_argument("measure_from_params: negative deviation");
  }
  if (params.sigma == 0.0) return Measure1D::dirac(params.x);
  const double left_w = 1.0 / (1.0 + std::exp(2.0 * params.p));
  const double right_w = 1.0 / (1.0 + std::exp(-2.0 * params.p));
  if (!(left_w > 0.0 && right_w > 0.0)) {
    throw std::domain_error("measure_from_params: shape parameter out of range");
  }
  const Atom atoms[] = {{params.x - params.sigma * std::exp(params.p), left_w},
                        {params.x + params.sigma * std::exp(-params.p), right_w}};
  return Measure1D::from_atoms(atoms);
}

double delta2_distance(const Delta2Params& a, const Delta2Params& b) {
  const double dx = a.x - b.x;
  const double d2 = dx * dx + a.sigma * a.sigma + b.sigma * b.sigma -
                    2.0 * a.sigma * b.sigma * std::exp(-std::abs(a.p - b.p));
  return std::sqrt(std::max(0.0, d2));
}

Measure1D reflect_about_barycenter(const Measure1D& mu) {
  return pushforward_affine(mu, -1.0, 2.0 * barycenter(mu));
}

namespace {

using AtomKey = std::vector<std::pair<double, double>>;

std::pair<Measure1D, Measure1D> segment_endpoints(std::span<const Atom> atoms,
                                                  SegmentChoice choice) {
  const std::size_t n = atoms.size();
  const std::size_t j = n - 2;  // the atom that gets absorbed
  std::vector<Atom> lo(atoms.begin(), atoms.end());
  std::vector<Atom> hi(atoms.begin(), atoms.end());
  if (choice == SegmentChoice::kMergeIntoNeighbours) {
    lo[j - 1].w += atoms[j].w;
    hi[j + 1].w += atoms[j].w;
    lo.erase(lo.begin() + static_cast<std::ptrdiff_t>(j));
    hi.erase(hi.begin() + static_cast<std::ptrdiff_t>(j));
  } else {
    // x_j moves left onto x_{j-1} while x_{j+1} moves right at rate
    // w_j / w_{j+1}; in the other direction both meet at their barycenter.
    const double alpha = atoms[j].w / atoms[j + 1].w;
    lo[j - 1].w += atoms[j].w;
    lo[j + 1].x += alpha * (atoms[j].x - atoms[j - 1].x);
    lo.erase(lo.begin() + static_cast<std::ptrdiff_t>(j));
    const double w = atoms[j].w + atoms[j + 1].w;
    hi[j] = {(atoms[j].w * atoms[j].x + atoms[j + 1].w * atoms[j + 1].x) / w, w};
    hi.pop_back();
  }
  return {Measure1D::from_atoms(lo), Measure1D::from_atoms(hi)};
}

class FlowRecursion {
 public:
  FlowRecursion(double t, SegmentChoice choice) : t_(t), choice_(choice) {}

  Measure1D run(const Measure1D& mu) {
    const std::size_t n = mu.atom_count();
    if (n <= 1) return mu;
    if (n == 2) {
      Delta2Params params = delta2_params(mu);
      params.p += t_;
      return measure_from_params(params);
    }
    AtomKey key;
    key.reserve(n);
    for (const auto& a : mu.atoms()) key.emplace_back(a.x, a.w);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const auto [lo, hi] = segment_endpoints(mu.atoms(), choice_);
    // Relative position by distances, valid even if atoms of the endpoints
    // coincide after merging.
    const double s = wasserstein2(lo, mu) / wasserstein2(lo, hi);
    Measure1D image = geodesic_eval(geodesic(run(lo), run(hi)), s);
    memo_.emplace(std::move(key), image);
    return image;
  }

 private:
  double t_;
  SegmentChoice choice_;
  std::map<AtomKey, Measure1D> memo_;
};

}  // namespace

Measure1D exotic_flow(const Measure1D& mu, double t, SegmentChoice choice) {
  if (!mu.is_atomic()) {
    throw std::invalid_argument(
        "exotic_flow: measure has a continuous part; quantize it first");
  }
  if (mu.atom_count() > kMaxFlowAtoms) {
    throw SizeLimitError("exotic_flow: more than " + std::to_string(kMaxFlowAtoms) +
                         " atoms");
  }
  if (!std::isfinite(t)) throw std::invalid_argument("exotic_flow: non-finite time");
  return FlowRecursion(t, choice).run(mu);
}

Measure1D quantize(const Measure1D& mu, std::size_t n) {
  if (n == 0) throw std::invalid_argument("quantize: need at least one atom");
  std::vector<Atom> atoms;
  atoms.reserve(n);
  const double w = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    atoms.push_back({quantile(mu, (static_cast<double>(i) + 0.5) * w), w});
  }
  return Measure1D::from_atoms(atoms);
}

QuantizedFlow exotic_flow_quantized(const Measure1D& mu, double t, std::size_t n) {
  Measure1D q = quantize(mu, n);
  const double bound = 2.0 * wasserstein2(mu, q);
  return {exotic_flow(q, t), bound};
}

void validate(const IsometryElement& g) {
  if ((g.eps != 1 && g.eps != -1) || (g.eta != 1 && g.eta != -1)) {
    throw std::invalid_argument("isometry: eps and eta must be +1 or -1");
  }
  if (!std::isfinite(g.v) || !std::isfinite(g.t)) {
    throw std::invalid_argument("isometry: non-finite parameter");
  }
}

IsometryElement compose(const IsometryElement& g1, const IsometryElement& g2) {
  return {g1.eps * g2.eps, g1.eps * g2.v + g1.v, g1.eta * g2.eta,
          g1.eta * g2.t + g2.eps * g1.t};
}

IsometryElement inverse(const IsometryElement& g) {
  return {g.eps, -g.eps * g.v, g.eta, -g.eta * g.eps * g.t};
}

Measure1D apply_isometry(const IsometryElement& g, const Measure1D& mu) {
  validate(g);
  Measure1D image = g.eta == -1 ? reflect_about_barycenter(mu) : mu;
  if (g.t != 0.0) image = exotic_flow(image, g.t);
  if (g.eps == 1 && g.v == 0.0) return image;
  return pushforward_affine(image, g.eps, g.v);
}

Delta2Params apply_isometry(const IsometryElement& g, const Delta2Params& params) {
  validate(g);
  return {g.eps * params.x + g.v, params.sigma, g.eps * (g.eta * params.p + g.t)};
}

std::vector<WindowSample> weak_convergence_profile(const Measure1D& mu,
                                                   std::span<const double> ts,
                                                   double width) {
  if (!(width > 0.0)) {
    throw std::invalid_argument("weak_convergence_profile: width must be positive");
  }
  const double c = barycenter(mu);
  const Measure1D center = Measure1D::dirac(c);
  std::vector<WindowSample> out;
  out.reserve(ts.size());
  for (double t : ts) {
    const Measure1D image = exotic_flow(mu, t);
    out.push_back({t, mass_in_window(image, c - width, c + width),
                   wasserstein2(image, center)});
  }
  return out;
}

Measure1D uniform3_closed_form(double x1, double x2, double x3, double t) {
  if (t == 0.0) throw std::domain_error("uniform3_closed_form: undefined at t = 0");
  if (!(x1 <= x2 && x2 <= x3)) {
    throw std::invalid_argument("uniform3_closed_form: atoms must be sorted");
  }
  const double t2 = t * t;
  const double a = x3 - x1;
  const double b = x2 - x1;
  const Atom atoms[] = {
      {x1 + (1.0 - t) * a / 3.0 + (1.0 - t) * b / 3.0, 1.0 / (1.0 + 2.0 * t2)},
      {x1 + (1.0 - t) * a / 3.0 + (1.0 + 1.0 / t + t) * b / 3.0,
       1.5 * t2 / ((1.0 + 0.5 * t2) * (1.0 + 2.0 * t2))},
      {x1 + (1.0 + 2.0 / t) * a / 3.0 + (1.0 - 1.0 / t) * b / 3.0,
       0.5 * t2 / (1.0 + 0.5 * t2)},
  };
  return Measure1D::from_atoms(atoms);
}

}  // namespace w2line
