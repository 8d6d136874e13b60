#include "sgf/capacity/validators.hpp"

#include "sgf/capacity/riesz_reference.hpp"
#include "sgf/error.hpp"
#include "sgf/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <sstream>

namespace sgf {

namespace {

Point diff(const Point& a, const Point& b) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

// Capacity slack from the duality gap: 1/E_min - 1/E <= g / (E (E - g)).
double cap_slack(const EquilibriumSolution& s) {
  if (s.infinite_capacity || s.energy <= s.gap) return 0.0;
  return s.gap / (s.energy * (s.energy - s.gap));
}

EquilibriumSolution solve(const Kernel& K, const DiscreteDomain& D, const SolverOptions& opt) {
  return equilibrium_measure(D, assemble_gram(D, K), opt);
}

}  // namespace

double energy(const std::vector<Point>& xs, const std::vector<double>& nu, const std::vector<Point>& ys,
              const std::vector<double>& eta, const KernelTable& K) {
  if (xs.size() != nu.size() || ys.size() != eta.size()) throw DomainError("weights do not match points");
  double s = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < ys.size(); ++j) s += nu[i] * eta[j] * K.lookup(diff(xs[i], ys[j]));
  return s;
}

double energy(const std::vector<Point>& xs, const std::vector<double>& nu, const std::vector<Point>& ys,
              const std::vector<double>& eta, const Kernel& K) {
  if (xs.size() != nu.size() || ys.size() != eta.size()) throw DomainError("weights do not match points");
  double s = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < ys.size(); ++j) s += nu[i] * eta[j] * K(diff(xs[i], ys[j]));
  return s;
}

double spectral_energy(const std::vector<Point>& xs, const std::vector<double>& nu, const std::vector<Point>& ys,
                       const std::vector<double>& eta, const SpectralMeasure& mu) {
  if (xs.size() != nu.size() || ys.size() != eta.size()) throw DomainError("weights do not match points");
  auto transform = [](const std::vector<Point>& pts, const std::vector<double>& w, const Point& lam) {
    std::complex<double> z = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      double ph = 0.0;
      for (std::size_t k = 0; k < lam.size(); ++k) ph += lam[k] * pts[i][k];
      z += w[i] * std::polar(1.0, -2.0 * num::pi * ph);
    }
    return z;
  };
  return integrate_measure(mu, [&](const Point& lam) {
    return std::real(transform(xs, nu, lam) * std::conj(transform(ys, eta, lam)));
  });
}

double gram_energy(const GramMatrix& G, const std::vector<double>& x, const std::vector<double>& y) {
  Eigen::Map<const Eigen::VectorXd> a(x.data(), x.size()), b(y.data(), y.size());
  return a.dot(G.G * b);
}

void require(const InequalityReport& r) {
  if (r.holds) return;
  std::ostringstream msg;
  msg << r.name << " violated: " << r.lhs << " > " << r.rhs << " + " << r.slack;
  if (!r.detail.empty()) msg << " (" << r.detail << ")";
  throw ValidatorFailure(msg.str());
}

InequalityReport subadditivity_check(const Kernel& K, const DiscreteDomain& D1, const DiscreteDomain& D2,
                                     const SolverOptions& opt) {
  DiscreteDomain U = domain_union(D1, D2);
  GramMatrix GU = assemble_gram(U, K);
  InequalityReport r;
  r.name = "subadditivity";
  if (GU.G.minCoeff() < 0.0) r.detail = "kernel takes negative values on the union; hypothesis K >= 0 fails";
  auto s1 = solve(K, D1, opt), s2 = solve(K, D2, opt);
  auto su = equilibrium_measure(U, GU, opt);
  r.lhs = su.capacity;
  r.rhs = s1.capacity + s2.capacity;
  r.slack = cap_slack(s1) + cap_slack(s2) + 1e-12 * r.rhs;
  r.holds = r.lhs <= r.rhs + r.slack;
  return r;
}

InequalityReport monotonicity_check(const Kernel& K, const DiscreteDomain& inner, const DiscreteDomain& outer,
                                    const SolverOptions& opt) {
  if (!is_subdomain(inner, outer, 1e-9 * std::min(inner.spacing, outer.spacing)))
    throw DomainError("monotonicity check needs inner to be a subset of outer");
  auto si = solve(K, inner, opt), so = solve(K, outer, opt);
  InequalityReport r;
  r.name = "monotonicity";
  r.lhs = si.capacity;
  r.rhs = so.capacity;
  r.slack = cap_slack(so) + 1e-12 * r.rhs;
  r.holds = r.lhs <= r.rhs + r.slack;
  return r;
}

InequalityReport smoothing_check(const SpectralMeasure& mu, double T, double s, const TruncationPair& tp,
                                 const BallResolution& res, const SolverOptions& opt) {
  if (!(s > 0.0 && s < T)) throw DomainError("smoothing needs 0 < s < T");
  SpectralMeasure smooth = multiply_measure(mu, [&](const Point& lam) {
    double r2 = 0.0;
    for (double v : lam) r2 += v * v;
    double p = tp.phi(s, std::sqrt(r2));
    return p * p;
  });
  BallCapacity big = capacity_ball(mu, T, res, opt);
  BallCapacity small = capacity_ball(smooth, T - s, res, opt);
  InequalityReport r;
  r.name = "smoothing";
  r.lhs = small.capacity;
  r.rhs = big.capacity;
  // Both sides are grid approximations of continuum capacities; the
  // discretization budget is 2% of the larger side.
  r.slack = cap_slack(big.solution) + 0.02 * std::max(r.lhs, r.rhs);
  r.holds = r.lhs <= r.rhs + r.slack;
  std::ostringstream d;
  d << "methods " << small.method << " / " << big.method;
  r.detail = d.str();
  return r;
}

InequalityReport radialization_check(const DiscreteDomain& D, const GramMatrix& G, const EquilibriumSolution& sol) {
  // Orbit key: sorted absolute coordinates on the grid scale.
  std::map<std::vector<long>, std::vector<std::size_t>> orbits;
  for (std::size_t i = 0; i < D.size(); ++i) {
    std::vector<long> key;
    for (double v : D.points[i]) key.push_back(std::lround(std::abs(v) / D.spacing * 2.0));
    std::sort(key.begin(), key.end());
    orbits[key].push_back(i);
  }
  std::vector<double> avg(D.size(), 0.0);
  for (const auto& [key, idx] : orbits) {
    double m = 0.0;
    for (auto i : idx) m += sol.nu[i];
    for (auto i : idx) avg[i] = m / idx.size();
  }
  InequalityReport r;
  r.name = "radialization";
  r.lhs = gram_energy(G, avg, avg);
  r.rhs = sol.energy;
  r.slack = sol.gap + 1e-12 * std::abs(r.rhs);
  r.holds = r.lhs <= r.rhs + r.slack;
  return r;
}

InequalityReport stability_check(const GramMatrix& G, const EquilibriumSolution& sol, const std::vector<double>& nu,
                                 const std::vector<double>& eta, double slack) {
  const double Enu = gram_energy(G, nu, nu), Eeta = gram_energy(G, eta, eta);
  const double cap = sol.capacity;
  if (Enu * cap > 2.0) throw DomainError("stability check needs E[nu] Cap <= 2");
  // <h_nu, eta> = E[nu, eta] / E[nu]; h_D = h_{nu_D}.
  const double hD = gram_energy(G, sol.nu, eta) / sol.energy;
  const double hnu = gram_energy(G, nu, eta) / Enu;
  InequalityReport r;
  r.name = "stability of the equilibrium potential";
  r.lhs = std::abs(hD - hnu);
  r.rhs = 2.0 * std::sqrt(std::max(0.0, Eeta * cap * (Enu * cap - 1.0)));
  r.slack = slack;
  r.holds = r.lhs <= r.rhs + r.slack;
  return r;
}

double convexity_residual(const GramMatrix& G, const std::vector<double>& nu, const std::vector<double>& eta,
                          double t) {
  std::vector<double> mix(nu.size()), d(nu.size());
  for (std::size_t i = 0; i < nu.size(); ++i) {
    mix[i] = t * nu[i] + (1.0 - t) * eta[i];
    d[i] = nu[i] - eta[i];
  }
  return gram_energy(G, mix, mix) -
         (t * gram_energy(G, nu, nu) + (1.0 - t) * gram_energy(G, eta, eta) - t * (1.0 - t) * gram_energy(G, d, d));
}

BracketReport capacity_bracket(const SpectralMeasure& mu, double T, double capacity, const TruncationPair& tp,
                               double cd) {
  BracketReport b;
  b.T = T;
  b.cd = cd;
  b.capacity = capacity;
  const double phi2 = integrate_radial(mu, [&](double r) {
    double p = tp.phi(T, r);
    return p * p;
  });
  b.lower = 1.0 / phi2;
  b.upper = 4.0 / exact_ball_mass(mu, cd / T);
  b.holds = b.lower <= capacity * (1.0 + 1e-9) && capacity <= b.upper * (1.0 + 1e-9);
  return b;
}

DualReport dual_check(const GramMatrix& G, const EquilibriumSolution& sol, double pot_tol) {
  if (sol.infinite_capacity) throw DegenerateFieldError("dual check on an infinite-capacity domain");
  DualReport r;
  r.capacity = sol.capacity;
  r.pot_tol = pot_tol;
  r.min_potential = sol.min_potential;
  // Feasible candidate h / min(1, min_D h) with representing measure rho.
  const double m = std::min(1.0, sol.min_potential);
  std::vector<double> rho(sol.nu.size());
  for (std::size_t i = 0; i < rho.size(); ++i) rho[i] = sol.capacity * sol.nu[i] / m;
  r.norm2 = gram_energy(G, rho, rho);
  r.relative_residual = (r.norm2 - r.capacity) / r.capacity;
  const double lb = 1.0 - sol.gap / (2.0 * sol.energy);
  r.bound = lb > 0.0 ? 1.0 / (lb * lb) - 1.0 : std::numeric_limits<double>::infinity();
  r.holds = r.relative_residual >= -1e-10 && r.relative_residual <= r.bound + 1e-10 &&
            r.min_potential >= 1.0 - pot_tol;
  return r;
}

GrowthRow capacity_ratio(const SpectralMeasure& mu, double T_a, double T_b, const BallResolution& res,
                         const SolverOptions& opt) {
  GrowthRow g;
  g.T = T_a;
  g.T_next = T_b;
  g.cap = capacity_ball(mu, T_a, res, opt).capacity;
  g.cap_next = capacity_ball(mu, T_b, res, opt).capacity;
  g.ratio = g.cap_next / g.cap;
  return g;
}

std::vector<GrowthRow> capacity_growth_profile(const SpectralMeasure& mu, const std::vector<double>& T_list,
                                               double epsilon, const BallResolution& res,
                                               const SolverOptions& opt) {
  std::vector<GrowthRow> rows;
  for (double T : T_list) rows.push_back(capacity_ratio(mu, T, T + std::pow(T, 1.0 - epsilon), res, opt));
  return rows;
}

std::vector<ScalingRow> riesz_scaling_check(const SpectralMeasure& mu, double alpha, const std::vector<double>& T_list,
                                            const BallResolution& res, const SolverOptions& opt) {
  const double c = riesz_reference(alpha, mu.dim()).capacity;
  std::vector<ScalingRow> rows;
  for (double T : T_list) {
    ScalingRow r;
    r.T = T;
    r.capacity = capacity_ball(mu, T, res, opt).capacity;
    r.ball_mass = exact_ball_mass(mu, 1.0 / T);
    r.ratio = r.capacity * r.ball_mass / c;
    rows.push_back(r);
  }
  return rows;
}

}  // namespace sgf
