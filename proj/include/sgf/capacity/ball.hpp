#pragma once

#include "sgf/capacity/domain.hpp"
#include "sgf/capacity/gram.hpp"
#include "sgf/capacity/solver.hpp"
#include "sgf/spectral/kernel.hpp"
#include "sgf/spectral/measure.hpp"

#include <map>
#include <optional>
#include <string>

namespace sgf {

struct BallResolution {
  double spacing = 1.0 / 16.0;  // grid spacing for d = 1 and cubic grids
  int shells = 64;              // radial shells for isotropic Riesz, d >= 2
  bool allow_radial = true;
};

struct BallCapacity {
  double T = 0.0;
  double capacity = 0.0;
  std::string method;  // "lattice", "grid-cells", "grid-points", "radial-shells"
  DiscreteDomain domain;
  GramMatrix gram;
  EquilibriumSolution solution;
  Kernel kernel;
};

// Discretize B(T), assemble the Gram matrix of kernel_of(mu) and solve.
// Riesz measures with a closed form use the exact singular kernel
// (cell-averaged in d = 1, radial shells in d >= 2); lattice measures use
// Z^d cap B(T); other measures use vertex grids with point values.
BallCapacity capacity_ball(const SpectralMeasure& mu, double T, const BallResolution& res = {},
                           const SolverOptions& opt = {});
BallCapacity capacity_ball(const Kernel& K, bool lattice, double T, const BallResolution& res = {},
                           const SolverOptions& opt = {});

// Records solved balls and enforces T <= T' => Cap(B(T)) <= Cap(B(T')) up
// to the solver-gap slack. Not thread-safe; one session per caller.
class CapacitySession {
 public:
  // Throws ValidatorFailure when the new value breaks monotonicity.
  void record(const BallCapacity& b);
  void record(double T, double capacity, double gap_slack);
  const std::map<double, double>& values() const { return values_; }

 private:
  std::map<double, double> values_;  // T -> capacity
  std::map<double, double> slack_;   // T -> capacity slack from the gap
};

}  // namespace sgf
