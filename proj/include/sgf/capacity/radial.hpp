#pragma once

#include "sgf/capacity/gram.hpp"
#include "sgf/capacity/solver.hpp"

#include <vector>

namespace sgf {

// Equilibrium problem for the isotropic Riesz kernel scale * k_alpha on
// B(T) restricted to radial measures: shells [k h, (k+1) h], each carrying
// mass spread with density proportional to r^{d-1}.
struct RadialSolution {
  int dim = 1;
  double alpha = 0.0, scale = 1.0, T = 0.0;
  std::vector<double> edges;  // shell boundaries, size shells + 1
  GramMatrix gram;
  EquilibriumSolution solution;  // points = shell midpoints (radius only)

  // h(r) = Cap * sum_k nu_k * (shell-averaged kernel at radius r).
  double potential(double r) const;
};

RadialSolution radial_riesz_capacity(double alpha, int d, double T, int shells,
                                     const SolverOptions& opt = {}, double scale = 1.0);

}  // namespace sgf
