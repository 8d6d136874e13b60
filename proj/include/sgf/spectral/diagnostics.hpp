#pragma once

#include "sgf/spectral/measure.hpp"

#include <vector>

namespace sgf {

// delta_j = delta_max * 2^-j, j = 0 .. count - 1.
struct DyadicRange {
  double delta_max = 1.0;
  int count = 8;
  std::vector<double> deltas() const;
};

struct SingularityProfile {
  double alpha_hat = 0.0;    // least-squares slope of log mu[B(delta)] on log delta
  double lower_slope = 0.0;  // min of successive slopes
  double upper_slope = 0.0;  // max of successive slopes
  std::vector<double> deltas;
  std::vector<double> masses;
  std::vector<double> w;     // w(T) = T^alpha_hat mu[B(1/T)] at T = 1/delta
};

struct DiagnosticsReport {
  SingularityProfile profile;
  double doubling_const = 0.0;         // max mu[B(2 delta)] / mu[B(delta)]
  double origin_dominance_const = 0.0; // max sup_u mu[u + B(delta)] / mu[B(delta)]
  std::vector<double> dominance_by_delta;
};

DiagnosticsReport diagnostics(const SpectralMeasure& mu, const DyadicRange& range);

}  // namespace sgf
