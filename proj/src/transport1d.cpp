#include "w2line/transport1d.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace w2line {

std::string to_string(const Interval& interval) {
  std::ostringstream os;
  os.precision(17);
  os << (std::isinf(interval.lo) ? "(" : "[");
  if (std::isinf(interval.lo)) {
    os << "-inf";
  } else {
    os << interval.lo + 0.0;
  }
  os << ", ";
  if (std::isinf(interval.hi)) {
    os << "inf";
  } else {
    os << interval.hi + 0.0;
  }
  os << (std::isinf(interval.hi) ? ")" : "]");
  return os.str();
}

namespace {

// Restriction of piece k of q to the mass interval [lo, hi].
QuantilePiece restrict_piece(const QuantilePieces& q, std::size_t k, double lo,
                             double hi) {
  const auto& p = q.pieces()[k];
  if (p.is_constant()) return p;
  const double m0 = q.breakpoints()[k];
  const double width = q.breakpoints()[k + 1] - m0;
  const double u0 = std::clamp((lo - m0) / width, 0.0, 1.0);
  const double u1 = std::clamp((hi - m0) / width, 0.0, 1.0);
  return {p.at(u0), p.at(u1)};
}

double max_abs_value(const AlignedQuantiles& aq) {
  double scale = 1.0;
  for (std::size_t k = 0; k < aq.first.size(); ++k) {
    scale = std::max({scale, std::abs(aq.first[k].start), std::abs(aq.first[k].end),
                      std::abs(aq.second[k].start), std::abs(aq.second[k].end)});
  }
  return scale;
}

}  // namespace

AlignedQuantiles align(const QuantilePieces& a, const QuantilePieces& b) {
  const auto ba = a.breakpoints();
  const auto bb = b.breakpoints();
  std::vector<double> merged;
  merged.reserve(ba.size() + bb.size());
  std::merge(ba.begin(), ba.end(), bb.begin(), bb.end(), std::back_inserter(merged));

  AlignedQuantiles out;
  out.breakpoints.push_back(0.0);
  for (double m : merged) {
    if (m - out.breakpoints.back() > kCanonicalTol) out.breakpoints.push_back(m);
  }
  // The snapped grid must end exactly at 1.
  if (out.breakpoints.back() != 1.0) {
    if (out.breakpoints.size() > 1 && 1.0 - out.breakpoints.back() <= kCanonicalTol) {
      out.breakpoints.back() = 1.0;
    } else {
      out.breakpoints.push_back(1.0);
    }
  }

  std::size_t ia = 0;
  std::size_t ib = 0;
  const std::size_t pieces = out.breakpoints.size() - 1;
  out.first.reserve(pieces);
  out.second.reserve(pieces);
  for (std::size_t k = 0; k < pieces; ++k) {
    const double lo = out.breakpoints[k];
    const double hi = out.breakpoints[k + 1];
    const double mid = 0.5 * (lo + hi);
    while (ia + 1 < a.size() && ba[ia + 1] < mid) ++ia;
    while (ib + 1 < b.size() && bb[ib + 1] < mid) ++ib;
    out.first.push_back(restrict_piece(a, ia, lo, hi));
    out.second.push_back(restrict_piece(b, ib, lo, hi));
  }
  return out;
}

double wasserstein2_squared(const Measure1D& mu0, const Measure1D& mu1) {
  const AlignedQuantiles aq = align(mu0.quantile_pieces(), mu1.quantile_pieces());
  double sum = 0.0;
  for (std::size_t k = 0; k < aq.first.size(); ++k) {
    const double width = aq.breakpoints[k + 1] - aq.breakpoints[k];
    const double d0 = aq.first[k].start - aq.second[k].start;
    const double d1 = aq.first[k].end - aq.second[k].end;
    sum += width * (d0 * d0 + d0 * d1 + d1 * d1) / 3.0;
  }
  return std::max(0.0, sum);
}

double wasserstein2(const Measure1D& mu0, const Measure1D& mu1) {
  return std::sqrt(wasserstein2_squared(mu0, mu1));
}

Interval extension_interval(const AlignedQuantiles& aq) {
  const double tol = kCanonicalTol * max_abs_value(aq);
  Interval out;
  // g(t) = (1 - t) g0 + t g1 must stay >= 0, with g0, g1 >= 0.
  auto constrain = [&](double g0, double g1) {
    if (std::abs(g0) <= tol) g0 = 0.0;
    if (std::abs(g1) <= tol) g1 = 0.0;
    if (std::abs(g1 - g0) <= tol) return;
    if (g1 > g0) {
      out.lo = std::max(out.lo, -g0 / (g1 - g0) + 0.0);
    } else {
      out.hi = std::min(out.hi, g0 / (g0 - g1));
    }
  };
  for (std::size_t k = 0; k < aq.first.size(); ++k) {
    constrain(aq.first[k].end - aq.first[k].start,
              aq.second[k].end - aq.second[k].start);
    if (k > 0) {
      constrain(aq.first[k].start - aq.first[k - 1].end,
                aq.second[k].start - aq.second[k - 1].end);
    }
  }
  return out;
}

Interval extension_interval(const Measure1D& mu0, const Measure1D& mu1) {
  return extension_interval(align(mu0.quantile_pieces(), mu1.quantile_pieces()));
}

Geodesic1D geodesic(const Measure1D& mu0, const Measure1D& mu1) {
  Geodesic1D g;
  g.quantiles = align(mu0.quantile_pieces(), mu1.quantile_pieces());
  g.extension = extension_interval(g.quantiles);
  g.speed = wasserstein2(mu0, mu1);
  return g;
}

Measure1D geodesic_eval(const Geodesic1D& gamma, double t) {
  const double slack = kCanonicalTol * std::max(1.0, std::abs(t));
  if (!std::isfinite(t) || t < gamma.extension.lo - slack ||
      t > gamma.extension.hi + slack) {
    throw std::domain_error("geodesic does not extend to t = " + std::to_string(t) +
                            ", admissible " + to_string(gamma.extension));
  }
  const auto& aq = gamma.quantiles;
  std::vector<QuantilePiece> pieces;
  pieces.reserve(aq.first.size());
  for (std::size_t k = 0; k < aq.first.size(); ++k) {
    pieces.push_back({(1.0 - t) * aq.first[k].start + t * aq.second[k].start,
                      (1.0 - t) * aq.first[k].end + t * aq.second[k].end});
  }
  return Measure1D::from_quantile(QuantilePieces(aq.breakpoints, std::move(pieces)));
}

}  // namespace w2line
