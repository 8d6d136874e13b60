#include "sgf/numerics.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/ooura_fourier_integrals.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/erf.hpp>

#include <cmath>
#include <cstring>
#include <limits>
#include <map>
#include <mutex>

namespace sgf::num {

namespace {

Rule legendre_reference(int n) {
  Rule r;
  r.x.resize(n);
  r.w.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0, p1 = x;
      double dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) {
        r.w[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        break;
      }
      r.w[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    r.x[i] = x;
  }
  return r;
}

const Rule& cached_legendre(int n) {
  static std::mutex mu;
  static std::map<int, Rule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, legendre_reference(n)).first;
  return it->second;
}

}  // namespace

Rule gauss_legendre(int n, double a, double b) {
  const Rule& ref = cached_legendre(n);
  Rule r;
  r.x.resize(n);
  r.w.resize(n);
  double c = 0.5 * (a + b), h = 0.5 * (b - a);
  for (int i = 0; i < n; ++i) {
    r.x[i] = c + h * ref.x[i];
    r.w[i] = h * ref.w[i];
  }
  return r;
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol, double* error) {
  if (a == b) return 0.0;
  double err = 0.0;
  double v = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      f, a, b, 15, rel_tol, &err);
  if (error) *error = err;
  return v;
}

double integrate_singular(const std::function<double(double)>& f, double a,
                          double b, double rel_tol, double* error) {
  if (a == b) return 0.0;
  static thread_local boost::math::quadrature::tanh_sinh<double> ts(15);
  double err = 0.0;
  double v = ts.integrate(f, a, b, rel_tol, &err);
  if (error) *error = err;
  return v;
}

double integrate_panels(const std::function<double(double)>& f, double a,
                        double b, int panels, int order) {
  const Rule& ref = cached_legendre(order);
  double h = (b - a) / panels, s = 0.0;
  for (int p = 0; p < panels; ++p) {
    double c = a + (p + 0.5) * h;
    for (int i = 0; i < order; ++i) s += ref.w[i] * f(c + 0.5 * h * ref.x[i]);
  }
  return 0.5 * h * s;
}

double fourier_sin(const std::function<double(double)>& f, double omega) {
  static thread_local boost::math::quadrature::ooura_fourier_sin<double> q(
      1e-12, 12);
  return q.integrate(f, omega).first;
}

double fourier_cos(const std::function<double(double)>& f, double omega) {
  static thread_local boost::math::quadrature::ooura_fourier_cos<double> q(
      1e-12, 12);
  return q.integrate(f, omega).first;
}

double sinc(double u) {
  if (std::abs(u) < 1e-8) return 1.0 - (pi * u) * (pi * u) / 6.0;
  return std::sin(pi * u) / (pi * u);
}

double normal_pdf(double x) { return std::exp(-0.5 * x * x) / std::sqrt(2.0 * pi); }

double normal_cdf(double x) { return 0.5 * boost::math::erfc(-x / std::sqrt(2.0)); }

double normal_tail(double x) { return 0.5 * boost::math::erfc(x / std::sqrt(2.0)); }

double log_normal_tail(double x) {
  if (x < 30.0) return std::log(normal_tail(x));
  // Asymptotic series for the Mills ratio.
  double x2 = x * x, s = 1.0, term = 1.0;
  for (int k = 1; k < 8; ++k) {
    term *= -(2.0 * k - 1.0) / x2;
    s += term;
  }
  return -0.5 * x2 - std::log(x) - 0.5 * std::log(2.0 * pi) + std::log(s);
}

double bivariate_orthant(double a, double b, double r) {
  if (r >= 1.0 - 1e-15) return normal_tail(std::max(a, b));
  if (r <= -1.0 + 1e-15) return std::max(0.0, normal_tail(a) - normal_cdf(-b));
  double s = std::sqrt(1.0 - r * r);
  auto g = [&](double x) { return normal_pdf(x) * normal_tail((b - r * x) / s); };
  double lo = a, hi = std::max(a, 0.0) + 40.0;
  if (lo < -40.0) lo = -40.0;
  return integrate(g, lo, hi, 1e-13);
}

double log_add(double a, double b) {
  if (a == -std::numeric_limits<double>::infinity()) return b;
  if (b == -std::numeric_limits<double>::infinity()) return a;
  double m = std::max(a, b);
  return m + std::log1p(std::exp(-std::abs(a - b)));
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t hash_combine(std::uint64_t h, std::uint64_t v) {
  return splitmix64(h ^ (splitmix64(v) + 0x632be59bd9b4e019ULL + (h << 6) + (h >> 2)));
}

std::uint64_t hash_double(double v) {
  if (v == 0.0) v = 0.0;  // fold -0 into +0
  std::uint64_t bits;
  std::memcpy(&bits, &v, sizeof bits);
  return splitmix64(bits);
}

double to_unit(std::uint64_t bits) {
  return ((bits >> 11) + 0.5) * (1.0 / 9007199254740992.0);
}

std::uint64_t fnv1a(const void* data, std::size_t n, std::uint64_t h) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace sgf::num
