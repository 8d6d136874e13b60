#pragma once

#include "sgf/persistence/estimators.hpp"

#include <functional>
#include <string>
#include <vector>

namespace sgf {

// Test measure with a Lipschitz density on B(1).
struct TestMeasure {
  std::string name = "uniform";
  std::function<double(const Point&)> density;  // on B(1); mass = integral
  double mass = 1.0;
  bool radial = true;
};

TestMeasure uniform_ball_measure();

// eta_T = T^{-d} eta(. / T) on grid points of B(T), as weights summing to
// eta's mass.
std::vector<double> rescaled_weights(const TestMeasure& eta, const std::vector<Point>& grid, double T);

struct ConditionedAverage {
  long accepted = 0, tried = 0;
  double mean = 0.0, se = 0.0;
  double min_value = 0.0;   // smallest conditioned average
  bool all_positive = false;
  std::vector<double> values;  // per accepted sample, in replication order
};

// Rejection sampling of the persistence event min f >= level; stops after
// n_conditioned acceptances or max_samples tries.
ConditionedAverage conditioned_average(const AtomizedSpectrum& spec, const std::vector<Point>& domain,
                                       const std::vector<double>& weights, double level, long n_conditioned,
                                       long max_samples, const MCOptions& opt);

struct RepulsionConfig {
  double level = 0.0;
  double alpha = 0.0;
  double m = 0.0;
  double spacing = 0.25;
  long n_conditioned = 200;
  long max_samples = 2000000;
  double min_accept_rate = 1e-4;
  MCOptions mc;
};

struct RepulsionStat {
  double T = 0.0;
  ConditionedAverage conditioned;
  double accept_rate = 0.0;
  double ell_T = 0.0;      // sqrt(2 m (d - alpha) log T)
  double reference = 0.0;  // <h_T, eta_T>
  double normalized = 0.0; // mean / ell_T
  double gap = 0.0;        // |normalized - reference|
  double gap_se = 0.0;
  bool skipped = false;
  std::string note;
};

// Throws DomainError when m (d - alpha) = 0 (normalizer zero).
std::vector<RepulsionStat> repulsion_experiment(const AtomizedSpectrum& spec, const std::vector<double>& T_list,
                                                const TestMeasure& eta, const RepulsionConfig& cfg);

}  // namespace sgf
