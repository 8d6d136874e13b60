#include "sgf/spectral/poisson.hpp"

#include "sgf/error.hpp"
#include "sgf/numerics.hpp"

#include <cmath>

namespace sgf {

double fourier_transform(const SampledFunction& f, double lambda) {
  if (f.transform) return f.transform(lambda);
  const double R = f.support;
  const int panels = static_cast<int>(std::ceil(2.0 * R * (std::abs(lambda) + 1.0))) + 8;
  return num::integrate_panels(
      [&](double x) { return f.g(x) * std::cos(2.0 * num::pi * lambda * x); }, -R, R, panels, 20);
}

double periodize(const std::function<double(double)>& h, double t, double x, double support) {
  double s = h(x);
  for (long k = 1;; ++k) {
    double a = h(x + k * t), b = h(x - k * t);
    s += a + b;
    if (k * t > support + std::abs(x) && std::abs(a) + std::abs(b) < 1e-300) break;
    if (k > 1000000) break;
  }
  return s;
}

namespace {

// Sum of g(z) e^{-2 pi i lambda z} over z in (1/t) Z (real part; g even or not).
double discrete_transform(const SampledFunction& f, double t, double lambda) {
  const double h = 1.0 / t;
  const long n = static_cast<long>(std::floor(f.support / h));
  double s = 0.0;
  for (long k = -n; k <= n; ++k) s += f.g(k * h) * std::cos(2.0 * num::pi * lambda * k * h);
  return s;
}

// Terms below this are indistinguishable from quadrature noise.
double negligible(const SampledFunction& f) {
  return f.transform ? 1e-20 : 1e-15 * std::abs(fourier_transform(f, 0.0));
}

// A truncated g has a transform decaying only like 1/lambda; its periodized
// sum is then cut here and reported as not converged.
constexpr long max_terms = 256;

// t * Per_t(F[g])(lambda), with terms summed until they are negligible.
double periodized_transform(const SampledFunction& f, double t, double lambda, bool& converged) {
  const double eps = negligible(f);
  double s = fourier_transform(f, lambda);
  int quiet = 0;
  for (long k = 1; k <= max_terms; ++k) {
    double a = fourier_transform(f, lambda + k * t) + fourier_transform(f, lambda - k * t);
    s += a;
    quiet = std::abs(a) < eps ? quiet + 1 : 0;
    if (quiet >= 3) return t * s;
  }
  converged = false;
  return t * s;
}

}  // namespace

PoissonReport periodize_and_discretize(const SampledFunction& f, double t,
                                       const std::vector<double>& lambda, double tail_tol) {
  if (!(t > 0.0)) throw DomainError("period must be positive");
  if (!(f.support > 0.0)) throw DomainError("support radius must be positive");
  PoissonReport r;
  r.lambda = lambda;
  r.tail_estimate = std::max(std::abs(f.g(f.support)), std::abs(f.g(-f.support)));
  r.truncation_warning = r.tail_estimate > tail_tol;
  for (double l : lambda) {
    double a = discrete_transform(f, t, l), b = periodized_transform(f, t, l, r.converged);
    r.discretized.push_back(a);
    r.periodized.push_back(b);
    r.residual = std::max(r.residual, std::abs(a - b));
  }
  return r;
}

AlternatingReport alternating_identity(const SampledFunction& f, double T,
                                       const std::vector<double>& lambda) {
  if (!(T > 0.0)) throw DomainError("T must be positive");
  AlternatingReport r;
  r.lambda = lambda;
  const double eps = negligible(f);
  for (double x : lambda) {
    double lhs = discrete_transform(f, T, x) - discrete_transform(f, 0.5 * T, x);
    double rhs = fourier_transform(f, x);
    int quiet = 0;
    long k = 1;
    for (; k <= max_terms; ++k) {
      double sign = (k % 2) ? -1.0 : 1.0;
      double a = sign * (fourier_transform(f, x + 0.5 * k * T) + fourier_transform(f, x - 0.5 * k * T));
      rhs += a;
      quiet = std::abs(a) < eps ? quiet + 1 : 0;
      if (quiet >= 3) break;
    }
    if (k > max_terms) r.converged = false;
    rhs *= 0.5 * T;
    r.lhs.push_back(lhs);
    r.rhs.push_back(rhs);
    r.residual = std::max(r.residual, std::abs(lhs - rhs));
  }
  return r;
}

}  // namespace sgf
