#include "sgf/capacity/radial.hpp"

#include "sgf/capacity/riesz_reference.hpp"
#include "sgf/error.hpp"
#include "sgf/numerics.hpp"
#include "sgf/spectral/measure.hpp"

#include <cmath>

namespace sgf {

namespace {

struct ShellRule {
  std::vector<double> x, w;  // w includes the normalized r^{d-1} weight
};

ShellRule shell_rule(int d, double a, double b, int panels, int order) {
  ShellRule s;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    num::Rule r = num::gauss_legendre(order, a + (b - a) * p / panels, a + (b - a) * (p + 1) / panels);
    for (int i = 0; i < order; ++i) {
      s.x.push_back(r.x[i]);
      s.w.push_back(r.w[i] * std::pow(r.x[i], d - 1));
      total += s.w.back();
    }
  }
  for (double& w : s.w) w /= total;
  return s;
}

// Mean over s in [a, b] (weight s^{d-1}) of S(r, s), split at s = r.
double shell_average_at(double alpha, int d, double r, double a, double b) {
  const double mass = (std::pow(b, d) - std::pow(a, d)) / d;
  auto f = [&](double s) {
    double v = angular_average(alpha, d, r, s);
    return std::isfinite(v) ? v * std::pow(s, d - 1) : 0.0;
  };
  double v;
  if (r > a && r < b)
    v = num::integrate_singular(f, a, r, 1e-10) + num::integrate_singular(f, r, b, 1e-10);
  else if (std::abs(r - a) < 1e-14 || std::abs(r - b) < 1e-14)
    v = num::integrate_singular(f, a, b, 1e-10);
  else
    v = num::integrate(f, a, b, 1e-11);
  return v / mass;
}

}  // namespace

RadialSolution radial_riesz_capacity(double alpha, int d, double T, int shells, const SolverOptions& opt,
                                     double scale) {
  if (d < 2) throw DomainError("radial shells are for d >= 2");
  if (!(alpha > 0.0 && alpha < d)) throw DomainError("riesz alpha must lie in (0, d)");
  if (d != 3 && alpha >= d - 1.0)
    throw DomainError("radial shells need a bounded shell kernel (alpha < d - 1) outside d = 3");
  if (!(T > 0.0) || shells < 1) throw DomainError("bad radial discretization");
  RadialSolution R;
  R.dim = d;
  R.alpha = alpha;
  R.scale = scale;
  R.T = T;
  const double h = T / shells;
  for (int k = 0; k <= shells; ++k) R.edges.push_back(k * h);
  const double B = riesz_B(alpha, d) * scale;

  std::vector<ShellRule> far(shells);
  for (int k = 0; k < shells; ++k) far[k] = shell_rule(d, k * h, (k + 1) * h, 1, 6);
  Eigen::MatrixXd G(shells, shells);
  for (int k = 0; k < shells; ++k) {
    for (int l = k; l < shells; ++l) {
      double v = 0.0;
      if (l - k <= 1) {
        // Kernel kink or singularity inside or at the edge: outer composite
        // rule, inner adaptive split at r = s.
        ShellRule outer = shell_rule(d, k * h, (k + 1) * h, 4, 8);
        for (std::size_t i = 0; i < outer.x.size(); ++i)
          v += outer.w[i] * shell_average_at(alpha, d, outer.x[i], l * h, (l + 1) * h);
      } else {
        for (std::size_t i = 0; i < far[k].x.size(); ++i)
          for (std::size_t j = 0; j < far[l].x.size(); ++j)
            v += far[k].w[i] * far[l].w[j] * angular_average(alpha, d, far[k].x[i], far[l].x[j]);
      }
      G(k, l) = G(l, k) = B * v;
    }
  }
  R.gram.G = std::move(G);
  R.gram.regularization = "radial-shells";

  DiscreteDomain D;
  D.dim = 1;
  D.spacing = h;
  D.cell_centered = true;
  D.descriptor = "radial shells of B(T)";
  for (int k = 0; k < shells; ++k) D.points.push_back({(k + 0.5) * h});
  R.solution = equilibrium_measure(D, R.gram, opt);
  return R;
}

double RadialSolution::potential(double r) const {
  const double B = riesz_B(alpha, dim) * scale;
  double s = 0.0;
  for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
    if (solution.nu[k] == 0.0) continue;
    s += solution.nu[k] * shell_average_at(alpha, dim, r, edges[k], edges[k + 1]);
  }
  return solution.capacity * B * s;
}

}  // namespace sgf
