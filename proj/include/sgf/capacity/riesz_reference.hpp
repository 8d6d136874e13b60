#pragma once

#include <string>

namespace sgf {

// Mean of |r e - s y|^{-alpha} over y uniform on the unit sphere S^{d-1}
// (e a fixed unit vector). d = 1 averages over y = +-1.
double angular_average(double alpha, int d, double r, double s);

// Closed-form capacity c_alpha and equilibrium potential h_alpha of B(1)
// for k_alpha = B_{alpha,d} |x|^{-alpha}.
struct RieszReference {
  enum class Regime { zero, below_newton, newton, above_newton };
  double alpha = 0.0;
  int d = 1;
  Regime regime = Regime::zero;
  double A = 0.0, B = 0.0;
  double capacity = 1.0;
  // Normalizing integral of the potential in the above_newton regime:
  // integral over B(1) of |e - y|^{-alpha} d nu_alpha(y).
  double normalizer = 1.0;

  // h_alpha at |x| = r.
  double potential(double r) const;
  std::string regime_name() const;
};

RieszReference riesz_reference(double alpha, int d);

}  // namespace sgf
