#pragma once

#include "sgf/capacity/domain.hpp"
#include "sgf/capacity/gram.hpp"
#include "sgf/spectral/kernel.hpp"

#include <vector>

namespace sgf {

struct SolverOptions {
  double gap_abs = 1e-8;  // stop when gap <= max(gap_abs, gap_rel * E)
  double gap_rel = 1e-6;
  long max_iterations = 100000;
  bool away_steps = true;
  bool record_trace = false;  // keep the energy after every iteration
  bool throw_on_nonconvergence = false;
};

struct EquilibriumSolution {
  std::vector<Point> points;
  std::vector<double> nu;         // probability vector on the points
  std::vector<double> potential;  // h = Cap * G nu on the points
  double energy = 0.0;            // E[nu] = nu^T G nu
  double capacity = 0.0;          // 1 / E[nu]; +inf when degenerate
  double gap = 0.0;               // 2 (E - min_i (G nu)_i) >= E - E_min
  double min_potential = 0.0;     // min_D h
  long iterations = 0;
  bool converged = false;
  bool infinite_capacity = false;
  std::vector<double> trace;      // energies, when requested
};

// Away-step conditional gradient on min nu^T G nu over the simplex.
EquilibriumSolution equilibrium_measure(const DiscreteDomain& D, const GramMatrix& G,
                                        const SolverOptions& opt = {});

// h(x) = Cap * sum_j nu_j K(x - x_j) at arbitrary points (non-singular K).
std::vector<double> potential_at(const EquilibriumSolution& sol, const Kernel& K,
                                 const std::vector<Point>& at);

}  // namespace sgf
