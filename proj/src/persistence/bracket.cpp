#include "sgf/persistence/bracket.hpp"

#include "sgf/error.hpp"
#include "sgf/numerics.hpp"

#include <cmath>

namespace sgf {

bool PersistenceBracket::contains(double theta, double se, double k) const {
  if (lower > theta + k * se) return false;
  if (upper_available && theta - k * se > upper + k * upper_se) return false;
  return true;
}

PersistenceBracket bracket_persistence(double cap, const PersistenceEstimate& theta_low, double level,
                                       double level_low) {
  if (!(cap > 0.0)) throw DomainError("capacity must be positive");
  if (level < level_low) throw DomainError("level must be >= the lower level");
  PersistenceBracket b;
  b.level = level;
  b.level_low = level_low;
  b.capacity = cap;
  b.lower = 0.5 * level * level * cap;
  if (theta_low.p <= 0.0) return b;  // P[Per^{l'}] = 0: no upper bound
  const double P = theta_low.p;
  const double C = (level - level_low) * (level - level_low) * cap + 2.0 / std::exp(1.0);
  b.upper = -std::log(P) + C / (2.0 * P);
  // d upper / dP = -1/P - C / (2 P^2)
  b.upper_se = (1.0 / P + C / (2.0 * P * P)) * theta_low.se_p;
  b.upper_available = true;
  return b;
}

TailBounds gaussian_tail(double x) {
  if (!(x > 0.0)) throw DomainError("gaussian_tail needs x > 0");
  TailBounds t;
  t.lower = std::max(0.0, (1.0 / x - 1.0 / (x * x * x)) * num::normal_pdf(x));
  t.upper = 0.5 * std::exp(-0.5 * x * x);
  t.tail = num::normal_tail(x);
  return t;
}

}  // namespace sgf
