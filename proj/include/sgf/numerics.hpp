#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace sgf::num {

constexpr double pi = 3.14159265358979323846;

struct Rule {
  std::vector<double> x;
  std::vector<double> w;
};

// n-point Gauss-Legendre rule on [a, b].
Rule gauss_legendre(int n, double a = -1.0, double b = 1.0);

// Adaptive integration of a smooth integrand (Gauss-Kronrod).
double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-10, double* error = nullptr);

// Double-exponential rule; tolerant of integrable endpoint singularities.
double integrate_singular(const std::function<double(double)>& f, double a,
                          double b, double rel_tol = 1e-10,
                          double* error = nullptr);

// Composite Gauss-Legendre: `panels` equal panels with `order` nodes each.
double integrate_panels(const std::function<double(double)>& f, double a,
                        double b, int panels, int order = 16);

// integral over [0, inf) of f(x) sin(omega x) / cos(omega x).
double fourier_sin(const std::function<double(double)>& f, double omega);
double fourier_cos(const std::function<double(double)>& f, double omega);

// sin(pi u) / (pi u)
double sinc(double u);

double normal_pdf(double x);
double normal_cdf(double x);
// P[Z >= x] without cancellation for large x.
double normal_tail(double x);
double log_normal_tail(double x);

// Standard bivariate normal P[X >= a, Y >= b] with correlation r.
double bivariate_orthant(double a, double b, double r);

// log(exp(a) + exp(b))
double log_add(double a, double b);

// Mixing hash used for counter-based streams.
std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t hash_combine(std::uint64_t h, std::uint64_t v);
std::uint64_t hash_double(double v);
// Uniform in (0, 1) from 64 bits.
double to_unit(std::uint64_t bits);

// FNV-1a over bytes.
std::uint64_t fnv1a(const void* data, std::size_t n,
                    std::uint64_t h = 1469598103934665603ULL);

}  // namespace sgf::num
