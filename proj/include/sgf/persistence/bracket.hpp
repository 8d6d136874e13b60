#pragma once

#include "sgf/persistence/estimators.hpp"

namespace sgf {

struct PersistenceBracket {
  double level = 0.0, level_low = 0.0, capacity = 0.0;
  double lower = 0.0;  // level^2 Cap / 2
  // theta^{l'} + ((l - l')^2 Cap + 2/e) / (2 P[Per^{l'}])
  double upper = std::numeric_limits<double>::infinity();
  double upper_se = 0.0;  // propagated from the estimate of P[Per^{l'}]
  bool upper_available = false;

  // lower <= theta + k se and theta - k se <= upper + k upper_se.
  bool contains(double theta, double se = 0.0, double k = 3.0) const;
};

// Throws DomainError when level < level_low or cap <= 0.
PersistenceBracket bracket_persistence(double cap, const PersistenceEstimate& theta_low, double level,
                                       double level_low);

struct TailBounds {
  double lower = 0.0;  // max(0, (1/x - 1/x^3) phi(x))
  double upper = 0.0;  // exp(-x^2/2) / 2
  double tail = 0.0;   // P[Z >= x]
};

// Requires x > 0.
TailBounds gaussian_tail(double x);

}  // namespace sgf
