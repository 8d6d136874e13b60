#include "sgf/capacity/ball.hpp"

#include "sgf/capacity/radial.hpp"
#include "sgf/error.hpp"

#include <cmath>
#include <sstream>

namespace sgf {

BallCapacity capacity_ball(const Kernel& K, bool lattice, double T, const BallResolution& res,
                           const SolverOptions& opt) {
  if (!(T > 0.0)) throw DomainError("ball radius must be positive");
  BallCapacity b;
  b.T = T;
  b.kernel = K;
  const int d = K.dim();
  if (lattice) {
    b.method = "lattice";
    b.domain = lattice_ball(d, T);
  } else if (K.singular() && d >= 2 && K.riesz_alpha() && res.allow_radial) {
    b.method = "radial-shells";
    RadialSolution R = radial_riesz_capacity(*K.riesz_alpha(), d, T, res.shells, opt, K.scale());
    b.domain.dim = 1;
    b.domain.spacing = T / res.shells;
    b.domain.cell_centered = true;
    b.domain.points = R.solution.points;
    b.domain.descriptor = "radial shells of B(T)";
    b.gram = std::move(R.gram);
    b.solution = std::move(R.solution);
    b.capacity = b.solution.capacity;
    return b;
  } else if (K.singular()) {
    b.method = "grid-cells";
    b.domain = ball_domain(d, T, res.spacing, true);
  } else {
    b.method = "grid-points";
    b.domain = ball_domain(d, T, res.spacing, false);
  }
  b.gram = assemble_gram(b.domain, K);
  b.solution = equilibrium_measure(b.domain, b.gram, opt);
  b.capacity = b.solution.capacity;
  return b;
}

BallCapacity capacity_ball(const SpectralMeasure& mu, double T, const BallResolution& res,
                           const SolverOptions& opt) {
  return capacity_ball(kernel_of(mu), mu.lattice(), T, res, opt);
}

void CapacitySession::record(const BallCapacity& b) {
  // E - E_min <= gap, so 1/E_min - 1/E <= gap / (E (E - gap)).
  const auto& s = b.solution;
  double slack = 0.0;
  if (!s.infinite_capacity && s.energy > s.gap) slack = s.gap / (s.energy * (s.energy - s.gap));
  record(b.T, b.capacity, slack);
}

void CapacitySession::record(double T, double capacity, double gap_slack) {
  auto check = [&](double T1, double c1, double s1, double T2, double c2) {
    // T1 < T2 requires c1 <= c2 + slack (c1 may be an underestimate by s1).
    if (c1 > c2 + s1 + 1e-9 * std::abs(c2)) {
      std::ostringstream msg;
      msg << "capacity monotonicity violated: Cap(B(" << T1 << ")) = " << c1 << " > Cap(B(" << T2
          << ")) = " << c2;
      throw ValidatorFailure(msg.str());
    }
  };
  for (const auto& [T2, c2] : values_) {
    if (T2 < T) check(T2, c2, slack_[T2] + gap_slack, T, capacity);
    if (T2 > T) check(T, capacity, slack_[T2] + gap_slack, T2, c2);
  }
  values_[T] = capacity;
  slack_[T] = gap_slack;
}

}  // namespace sgf
