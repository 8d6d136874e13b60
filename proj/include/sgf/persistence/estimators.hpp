#pragma once

#include "sgf/capacity/solver.hpp"
#include "sgf/fieldsim/sampler.hpp"
#include "sgf/fieldsim/tilt.hpp"

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace sgf {

struct MCOptions {
  long n_samples = 100000;
  std::uint64_t seed = 1;
  int threads = 1;
  // Replications per block; partial sums are combined in block order, so
  // results do not depend on the thread count.
  long block = 2048;
};

struct PersistenceEstimate {
  std::string domain;
  double level = 0.0;
  double p = 0.0;
  double theta = std::numeric_limits<double>::infinity();  // -log p
  double se_p = 0.0;
  double se_theta = std::numeric_limits<double>::infinity();  // se_p / p
  std::string method;  // "naive" or "importance"
  // (sum w 1_A)^2 / sum (w 1_A)^2; the hit count for the naive estimator.
  double ess = 0.0;
  double tilt_level = 0.0;
  long n_samples = 0;
  long hits = 0;
  bool rare = false;        // no hits: p = 0, see p_upper
  double p_upper = 0.0;     // one-sided 95% bound when rare
  bool unreliable = false;  // importance with ess < 10
};

// Fraction of samples with min over the domain >= level.
PersistenceEstimate persist_naive(const AtomizedSpectrum& spec, const std::vector<Point>& domain, double level,
                                  const MCOptions& opt = {});

// Mean of W 1[min f >= level] over samples of the tilted law; the tilt
// representing measure must live on the domain. Uses the same coefficient
// streams as persist_naive, so a zero tilt reproduces it exactly.
PersistenceEstimate persist_importance(const AtomizedSpectrum& spec, const std::vector<Point>& domain, double level,
                                       const TiltSpec& tilt, const MCOptions& opt = {});

// Equilibrium problem of the domain for the atomized kernel.
EquilibriumSolution domain_equilibrium(const AtomizedSpectrum& spec, const std::vector<Point>& domain,
                                       const SolverOptions& opt = {});

// rho = Cap nu, so that h = K * rho is the equilibrium potential (>= 1 on D).
TiltSpec equilibrium_tilt(const EquilibriumSolution& sol, double tilt_level);

// Grid of B(T): Z^d cap B(T) for lattice spectra, otherwise the vertex grid
// with the given spacing.
std::vector<Point> ball_grid(const AtomizedSpectrum& spec, double T, double spacing);

}  // namespace sgf
