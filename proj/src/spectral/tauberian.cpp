#include "sgf/spectral/tauberian.hpp"

#include "sgf/error.hpp"
#include "sgf/numerics.hpp"
#include "sgf/spectral/measure.hpp"

#include <cmath>
#include <sstream>

namespace sgf {

namespace {

double sphere_area(int d) { return 2.0 * std::pow(num::pi, 0.5 * d) / std::tgamma(0.5 * d); }

// integral over [0, inf) of g(x) * s(omega x) where s = sin or cos, split at a
// so that the oscillatory tail has a smooth amplitude.
double oscillatory(const std::function<double(double)>& g, double omega, bool sine) {
  const double a = 2.0 * num::pi / omega;
  // Near 0 the amplitude may overflow before the sine factor cancels it.
  auto head = [&](double x) {
    double v = g(x) * (sine ? std::sin(omega * x) : std::cos(omega * x));
    return std::isfinite(v) ? v : 0.0;
  };
  double s = num::integrate_singular(head, 0.0, a, 1e-12);
  const double ca = std::cos(omega * a), sa = std::sin(omega * a);
  auto shifted = [&](double u) { return g(a + u); };
  double is = num::fourier_sin(shifted, omega), ic = num::fourier_cos(shifted, omega);
  // sin(w(a+u)) = sin(wu) cos(wa) + cos(wu) sin(wa); cos(w(a+u)) = cos cos - sin sin
  s += sine ? is * ca + ic * sa : ic * ca - is * sa;
  return s;
}

}  // namespace

double ball_mass_from_kernel(const std::function<double(double)>& K, int dim, double delta) {
  if (!(delta > 0.0)) throw DomainError("delta must be positive");
  const double omega = 2.0 * num::pi * delta;
  if (dim == 1) {
    // mu[B(delta)] = 2 int_0^inf K(x) sin(2 pi delta x) / (pi x) dx
    return 2.0 / num::pi * oscillatory([&](double x) { return K(x) / x; }, omega, true);
  }
  if (dim == 3) {
    // F[1_B(delta)](r) = (sin(w r) - w r cos(w r)) / (2 pi^2 r^3), against 4 pi r^2 dr
    double a = oscillatory([&](double r) { return K(r) / r; }, omega, true);
    double b = oscillatory([&](double r) { return K(r); }, omega, false);
    return 2.0 / num::pi * (a - omega * b);
  }
  throw DomainError("kernel-form inversion implemented for d = 1 and d = 3");
}

double ball_mass_from_density(const std::function<double(double)>& rho, int dim, double delta) {
  if (!(delta > 0.0)) throw DomainError("delta must be positive");
  return sphere_area(dim) *
         num::integrate_singular([&](double r) { return rho(r) * std::pow(r, dim - 1); }, 0.0, delta, 1e-12);
}

std::vector<TauberianRow> tauberian_check(const TauberianInput& in, const std::vector<double>& T_range) {
  if (!in.f) throw HypothesisError("no kernel or density supplied");
  if (!(in.alpha > 0.0 && in.alpha < in.dim)) throw DomainError("alpha must lie in (0, d)");
  const bool kernel = in.form == TauberianInput::Form::kernel;
  const double A = riesz_A(in.alpha, in.dim), B = riesz_B(in.alpha, in.dim);
  auto hyp = [&](double T) {
    if (kernel) return in.f(T) * std::pow(T, in.alpha) / (B * in.w(T));
    return in.f(1.0 / T) * std::pow(T, in.alpha - in.dim) / (A * in.w(T));
  };
  std::vector<TauberianRow> rows;
  for (double T : T_range) {
    double h0 = hyp(T), h2 = hyp(2.0 * T), h4 = hyp(4.0 * T);
    bool bad = !(h0 > 1e-3 && h0 < 1e3) || std::abs(h4 / h0 - 1.0) > 0.5 || std::abs(h2 / h0 - 1.0) > 0.5;
    if (bad) {
      std::ostringstream msg;
      msg << "hypothesis not met at T=" << T << ": normalized " << (kernel ? "kernel" : "density")
          << " ratios " << h0 << ", " << h2 << ", " << h4 << " (T, 2T, 4T)";
      throw HypothesisError(msg.str());
    }
    TauberianRow row;
    row.T = T;
    row.hypothesis = h0;
    row.ball_mass = kernel ? ball_mass_from_kernel(in.f, in.dim, 1.0 / T)
                           : ball_mass_from_density(in.f, in.dim, 1.0 / T);
    row.ratio = row.ball_mass * std::pow(T, in.alpha) / in.w(T);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace sgf
