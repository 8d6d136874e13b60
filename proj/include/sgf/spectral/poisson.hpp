#pragma once

#include <functional>
#include <vector>

namespace sgf {

// Real function on R given by an evaluator, with the radius beyond which it
// is treated as zero. `transform`, when set, is the exact F[g].
struct SampledFunction {
  std::function<double(double)> g;
  double support = 0.0;
  std::function<double(double)> transform;
};

struct PoissonReport {
  std::vector<double> lambda;
  std::vector<double> discretized;  // F[Dis_{1/t}(g)](lambda)
  std::vector<double> periodized;   // t Per_t(F[g])(lambda)
  double residual = 0.0;            // max abs difference
  double tail_estimate = 0.0;       // |g| at the edge of the support
  bool truncation_warning = false;
  bool converged = true;  // periodized sums reached negligible terms
};

// F[g] by quadrature over the declared support (or the exact transform).
double fourier_transform(const SampledFunction& f, double lambda);

// Per_t(h)(x) = sum over k of h(x + k t), summed until terms vanish.
double periodize(const std::function<double(double)>& h, double t, double x,
                 double support);

PoissonReport periodize_and_discretize(const SampledFunction& f, double t,
                                       const std::vector<double>& lambda,
                                       double tail_tol = 1e-12);

struct AlternatingReport {
  std::vector<double> lambda;
  std::vector<double> lhs;  // F[Dis_{1/T} g] - F[Dis_{2/T} g]
  std::vector<double> rhs;  // (T/2) sum (-1)^k F[g](x + k T / 2)
  double residual = 0.0;
  bool converged = true;
};

AlternatingReport alternating_identity(const SampledFunction& f, double T,
                                       const std::vector<double>& lambda);

}  // namespace sgf
