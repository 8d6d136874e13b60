#pragma once

#include <functional>
#include <vector>

namespace sgf {

// Radial closed form for either the kernel K(|x|) or the density rho(|lambda|).
struct TauberianInput {
  enum class Form { kernel, density };
  Form form = Form::kernel;
  std::function<double(double)> f;
  int dim = 1;
  double alpha = 0.5;
  std::function<double(double)> w = [](double) { return 1.0; };
};

struct TauberianRow {
  double T = 0.0;
  double ball_mass = 0.0;   // mu[B(1/T)]
  double ratio = 0.0;       // mu[B(1/T)] T^alpha / w(T)
  double hypothesis = 0.0;  // K(T) T^alpha / (B w(T))  or  rho(1/T) T^{alpha-d} / (A w(T))
};

// mu[B(delta)] recovered from K by Fourier inversion (d = 1 or 3).
double ball_mass_from_kernel(const std::function<double(double)>& K, int dim, double delta);
double ball_mass_from_density(const std::function<double(double)>& rho, int dim, double delta);

// Throws HypothesisError when the supplied form is not regularly varying
// with index -alpha (kernel) or alpha - d (density) over the range.
std::vector<TauberianRow> tauberian_check(const TauberianInput& in, const std::vector<double>& T_range);

}  // namespace sgf
