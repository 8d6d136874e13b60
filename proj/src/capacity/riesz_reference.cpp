#include "sgf/capacity/riesz_reference.hpp"

#include "sgf/error.hpp"
#include "sgf/numerics.hpp"
#include "sgf/spectral/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sgf {

double angular_average(double alpha, int d, double r, double s) {
  r = std::abs(r);
  s = std::abs(s);
  if (alpha == 0.0) return 1.0;
  const double hi = std::max(r, s), lo = std::min(r, s);
  if (hi == 0.0) return std::numeric_limits<double>::infinity();
  if (lo == 0.0) return std::pow(hi, -alpha);
  if (d == 1) {
    double a = std::abs(r - s);
    return 0.5 * ((a == 0.0 ? std::numeric_limits<double>::infinity() : std::pow(a, -alpha)) +
                  std::pow(r + s, -alpha));
  }
  if (d == 3) {
    const double diff = hi - lo;
    if (alpha == 2.0) {
      if (diff == 0.0) return std::numeric_limits<double>::infinity();
      return (std::log(r + s) - std::log(diff)) / (2.0 * r * s);
    }
    if (diff == 0.0 && alpha > 2.0) return std::numeric_limits<double>::infinity();
    return (std::pow(r + s, 2.0 - alpha) - std::pow(diff, 2.0 - alpha)) / (2.0 * (2.0 - alpha) * r * s);
  }
  // c_d * integral_0^pi (r^2 + s^2 - 2 r s cos th)^{-alpha/2} sin^{d-2} th dth.
  const double t = lo / hi;
  if (t == 1.0 && alpha >= d - 1.0) return std::numeric_limits<double>::infinity();
  const double cd = std::tgamma(0.5 * d) / (std::sqrt(num::pi) * std::tgamma(0.5 * (d - 1)));
  auto f = [&](double th) {
    // 1 + t^2 - 2 t cos th = (1 - t)^2 + 4 t sin^2(th / 2), no cancellation.
    double sh = std::sin(0.5 * th);
    double q = (1.0 - t) * (1.0 - t) + 4.0 * t * sh * sh;
    if (q == 0.0) return 0.0;  // integrable endpoint singularity
    double v = std::pow(q, -0.5 * alpha) * std::pow(std::sin(th), d - 2);
    return std::isfinite(v) ? v : 0.0;  // underflow at the endpoint: inf * 0
  };
  double v = t > 0.9 ? num::integrate_singular(f, 0.0, num::pi, 1e-12) : num::integrate(f, 0.0, num::pi, 1e-12);
  return std::pow(hi, -alpha) * cd * v;
}

namespace {

// integral_0^1 s^{d-1} (1 - s^2)^{-(d-alpha)/2} angular_average(r, s) ds,
// split at s = r where the average may be singular.
double above_newton_integral(double alpha, int d, double r) {
  auto f = [&](double s) {
    double w = std::pow(s, d - 1) * std::pow((1.0 - s) * (1.0 + s), -0.5 * (d - alpha));
    double a = angular_average(alpha, d, r, s);
    double v = w * a;
    return std::isfinite(v) ? v : 0.0;  // integrable singular points
  };
  if (r > 0.0 && r < 1.0)
    return num::integrate_singular(f, 0.0, r, 1e-10) + num::integrate_singular(f, r, 1.0, 1e-10);
  return num::integrate_singular(f, 0.0, 1.0, 1e-10);
}

}  // namespace

RieszReference riesz_reference(double alpha, int d) {
  if (d < 1) throw DomainError("dimension must be >= 1");
  if (!(alpha >= 0.0 && alpha < d)) throw DomainError("riesz alpha must lie in [0, d)");
  RieszReference R;
  R.alpha = alpha;
  R.d = d;
  R.A = riesz_A(alpha, d);
  R.B = riesz_B(alpha, d);
  const double pi = num::pi;
  auto G = [](double x) { return std::tgamma(x); };
  if (alpha == 0.0) {
    R.regime = RieszReference::Regime::zero;
    R.capacity = 1.0;
  } else if (alpha < d - 2.0) {
    R.regime = RieszReference::Regime::below_newton;
    R.capacity = std::pow(2.0, 2.0 + alpha - d) * std::pow(pi, alpha + 0.5) * G(0.5 * (2 * d - alpha) - 1.0) *
                 G(0.5 * (d - alpha)) / (G(0.5 * (d - alpha - 1.0)) * G(1.0 + 0.5 * alpha) * G(0.5 * d) * G(0.5 * d));
    R.normalizer = angular_average(alpha, d, 1.0, 1.0);
  } else if (alpha == d - 2.0) {
    R.regime = RieszReference::Regime::newton;
    R.capacity = std::pow(pi, d - 2.0) / (G(0.5 * d) * G(0.5 * d));
  } else {
    R.regime = RieszReference::Regime::above_newton;
    R.capacity = std::pow(pi, alpha) / (G(1.0 + 0.5 * alpha) * G(1.0 + 0.5 * alpha));
    R.normalizer = above_newton_integral(alpha, d, 1.0);
  }
  return R;
}

double RieszReference::potential(double r) const {
  r = std::abs(r);
  switch (regime) {
    case Regime::zero:
      return 1.0;
    case Regime::below_newton:
      return angular_average(alpha, d, r, 1.0) / normalizer;
    case Regime::newton:
      return std::min(1.0, std::pow(r, 2.0 - d));
    case Regime::above_newton:
      return above_newton_integral(alpha, d, r) / normalizer;
  }
  return 0.0;
}

std::string RieszReference::regime_name() const {
  switch (regime) {
    case Regime::zero: return "alpha=0";
    case Regime::below_newton: return "0<alpha<d-2";
    case Regime::newton: return "alpha=d-2";
    case Regime::above_newton: return "d-2<alpha<d";
  }
  return "";
}

}  // namespace sgf
