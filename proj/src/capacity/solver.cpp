#include "sgf/capacity/solver.hpp"

#include "sgf/error.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace sgf {

EquilibriumSolution equilibrium_measure(const DiscreteDomain& D, const GramMatrix& gram,
                                        const SolverOptions& opt) {
  const Eigen::MatrixXd& G = gram.G;
  const long n = G.rows();
  if (n == 0 || n != static_cast<long>(D.size())) throw DomainError("Gram matrix does not match domain");

  // Start at the point of least self-energy (lowest index on ties).
  long start = 0;
  for (long i = 1; i < n; ++i)
    if (G(i, i) < G(start, start)) start = i;
  Eigen::VectorXd nu = Eigen::VectorXd::Zero(n);
  nu[start] = 1.0;
  Eigen::VectorXd g = G.col(start);  // G nu
  double E = G(start, start);

  EquilibriumSolution sol;
  const double k0 = G.diagonal().maxCoeff();
  long it = 0;
  double gap = 0.0;
  for (;; ++it) {
    long fw = 0;
    for (long i = 1; i < n; ++i)
      if (g[i] < g[fw]) fw = i;
    gap = 2.0 * (E - g[fw]);
    if (opt.record_trace) sol.trace.push_back(E);
    if (gap <= std::max(opt.gap_abs, opt.gap_rel * E) || E < 1e-12 * k0) break;
    if (it >= opt.max_iterations) break;

    long aw = -1;
    if (opt.away_steps) {
      for (long i = 0; i < n; ++i)
        if (nu[i] > 0.0 && (aw < 0 || g[i] > g[aw])) aw = i;
    }
    const double fw_gain = E - g[fw];
    const double aw_gain = aw >= 0 ? g[aw] - E : -1.0;
    if (aw >= 0 && aw_gain > fw_gain && nu[aw] < 1.0) {
      // Away step: nu + t (nu - e_aw), t in [0, nu_aw / (1 - nu_aw)].
      const double slope = E - g[aw];
      const double curv = E - 2.0 * g[aw] + G(aw, aw);
      const double tmax = nu[aw] / (1.0 - nu[aw]);
      double t = curv > 0.0 ? std::min(-slope / curv, tmax) : tmax;
      const bool drop = t >= tmax;
      nu *= 1.0 + t;
      nu[aw] -= t;
      if (drop) nu[aw] = 0.0;
      g = (1.0 + t) * g - t * G.col(aw);
      E = E + 2.0 * t * slope + t * t * curv;
    } else {
      // Toward step: nu + t (e_fw - nu), t in [0, 1].
      const double slope = g[fw] - E;
      const double curv = G(fw, fw) - 2.0 * g[fw] + E;
      double t = curv > 0.0 ? std::min(-slope / curv, 1.0) : 1.0;
      nu *= 1.0 - t;
      nu[fw] += t;
      g = (1.0 - t) * g + t * G.col(fw);
      E = E + 2.0 * t * slope + t * t * curv;
    }
    // Refresh the running quantities now and then against drift.
    if ((it + 1) % 1000 == 0) {
      g.noalias() = G * nu;
      E = nu.dot(g);
    }
  }
  g.noalias() = G * nu;
  E = nu.dot(g);
  long fw = 0;
  for (long i = 1; i < n; ++i)
    if (g[i] < g[fw]) fw = i;
  gap = std::max(0.0, 2.0 * (E - g[fw]));

  sol.points = D.points;
  sol.nu.assign(nu.data(), nu.data() + n);
  sol.energy = E;
  sol.gap = gap;
  sol.iterations = it;
  sol.infinite_capacity = E < 1e-12 * k0;
  sol.converged = sol.infinite_capacity || gap <= std::max(opt.gap_abs, opt.gap_rel * E);
  sol.capacity = sol.infinite_capacity ? std::numeric_limits<double>::infinity() : 1.0 / E;
  sol.potential.resize(n);
  sol.min_potential = std::numeric_limits<double>::infinity();
  for (long i = 0; i < n; ++i) {
    sol.potential[i] = sol.infinite_capacity ? std::numeric_limits<double>::infinity() : g[i] / E;
    sol.min_potential = std::min(sol.min_potential, sol.potential[i]);
  }
  if (!sol.converged && opt.throw_on_nonconvergence) {
    std::ostringstream msg;
    msg << "conditional gradient did not converge in " << it << " iterations (gap " << gap << ", energy " << E << ")";
    throw ConvergenceError(msg.str());
  }
  return sol;
}

std::vector<double> potential_at(const EquilibriumSolution& sol, const Kernel& K,
                                 const std::vector<Point>& at) {
  if (sol.infinite_capacity) throw DegenerateFieldError("potential of an infinite-capacity domain");
  std::vector<double> h(at.size(), 0.0);
  for (std::size_t a = 0; a < at.size(); ++a) {
    double s = 0.0;
    for (std::size_t j = 0; j < sol.points.size(); ++j) {
      if (sol.nu[j] == 0.0) continue;
      Point lag = at[a];
      for (std::size_t k = 0; k < lag.size(); ++k) lag[k] -= sol.points[j][k];
      s += sol.nu[j] * K(lag);
    }
    h[a] = s * sol.capacity;
  }
  return h;
}

}  // namespace sgf
