#include "sgf/spectral/diagnostics.hpp"

#include "sgf/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sgf {

std::vector<double> DyadicRange::deltas() const {
  std::vector<double> out;
  for (int j = 0; j < count; ++j) out.push_back(std::ldexp(delta_max, -j));
  return out;
}

namespace {

double grid_extent(const DensityGrid& g) {
  double e = 0.0;
  for (const auto& c : g.cells)
    for (long k : c) e = std::max(e, std::max(std::abs(double(k)), std::abs(double(k + 1))) * g.step);
  return e;
}

// Candidate centers for the supremum over shifts.
std::vector<Point> candidate_centers(const SpectralMeasure& mu, double delta) {
  const int d = mu.dim();
  std::vector<Point> out;
  for (const auto& a : mu.atoms()) out.push_back(a.freq);
  if (d == 1) {
    double lo = 0.0, hi = 0.0;
    if (mu.density()) {
      double e = grid_extent(*mu.density());
      lo = std::min(lo, -e), hi = std::max(hi, e);
    }
    if (mu.cantor()) lo = std::min(lo, -2.0), hi = std::max(hi, 2.0);
    double h = 0.5 * delta;
    if (mu.density()) h = std::max(h, 0.25 * mu.density()->step);
    if (hi > lo)
      for (double u = lo; u <= hi + 1e-12; u += h) out.push_back({u});
  } else if (mu.density()) {
    const auto& g = *mu.density();
    for (const auto& c : g.cells) {
      Point p(d);
      for (int i = 0; i < d; ++i) p[i] = (c[i] + 0.5) * g.step;
      out.push_back(p);
    }
  }
  out.push_back(Point(d, 0.0));
  return out;
}

}  // namespace

DiagnosticsReport diagnostics(const SpectralMeasure& mu, const DyadicRange& range) {
  if (range.count < 2 || !(range.delta_max > 0.0)) throw DomainError("dyadic range needs >= 2 scales");
  const auto deltas = range.deltas();
  const double dmin = deltas.back(), dmax = deltas.front();
  if (mu.density()) {
    const auto& g = *mu.density();
    bool exact_partial = mu.dim() == 1 && g.power_alpha.has_value();
    if (!exact_partial && dmin < g.step)
      throw ResolutionError("dyadic range reaches below the density grid step");
    if (dmax > grid_extent(g)) throw ResolutionError("dyadic range exceeds the density grid extent");
  }
  if (mu.lattice() && dmax >= 0.5) throw ResolutionError("lattice measures need delta < 1/2");

  DiagnosticsReport rep;
  auto& prof = rep.profile;
  prof.deltas = deltas;
  for (double d : deltas) prof.masses.push_back(ball_mass(mu, d));

  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();
  bool positive = std::all_of(prof.masses.begin(), prof.masses.end(), [](double m) { return m > 0.0; });
  if (positive) {
    const int n = static_cast<int>(deltas.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int i = 0; i < n; ++i) {
      double x = std::log(deltas[i]), y = std::log(prof.masses[i]);
      sx += x, sy += y, sxx += x * x, sxy += x * y;
    }
    prof.alpha_hat = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    prof.lower_slope = inf, prof.upper_slope = -inf;
    for (int i = 0; i + 1 < n; ++i) {
      double s = std::log(prof.masses[i] / prof.masses[i + 1]) / std::log(deltas[i] / deltas[i + 1]);
      prof.lower_slope = std::min(prof.lower_slope, s);
      prof.upper_slope = std::max(prof.upper_slope, s);
    }
    for (int i = 0; i < n; ++i) prof.w.push_back(std::pow(deltas[i], -prof.alpha_hat) * prof.masses[i]);
  } else {
    prof.alpha_hat = prof.lower_slope = prof.upper_slope = nan;
    prof.w.assign(deltas.size(), nan);
  }

  rep.doubling_const = 0.0;
  for (double d : deltas) {
    double small = ball_mass(mu, d), big = ball_mass(mu, 2.0 * d);
    if (small > 0.0)
      rep.doubling_const = std::max(rep.doubling_const, big / small);
    else if (big > 0.0)
      rep.doubling_const = inf;
  }

  rep.origin_dominance_const = 0.0;
  for (double d : deltas) {
    double base = ball_mass(mu, d), best = base;
    for (const auto& u : candidate_centers(mu, d)) best = std::max(best, shifted_ball_mass(mu, u, d));
    double ratio = base > 0.0 ? best / base : (best > 0.0 ? inf : 1.0);
    rep.dominance_by_delta.push_back(ratio);
    rep.origin_dominance_const = std::max(rep.origin_dominance_const, ratio);
  }
  return rep;
}

}  // namespace sgf
