#pragma once

#include "sgf/fieldsim/sampler.hpp"

namespace sgf {

struct TiltSpec {
  RepresentingMeasure rho;  // h = K * rho
  double level = 0.0;       // the shift is level * h
};

// Cameron-Martin shift in coefficient space: with m = B^T rho (B the
// synthesis basis at rho's points), f + level * h is the field of the
// coefficients a + level * m, and ||h||_H^2 = |m|^2 = rho^T K rho.
class Tilt {
 public:
  Tilt(const FieldSampler& sampler, const TiltSpec& spec);

  double level() const { return level_; }
  double rkhs_norm2() const { return m_.squaredNorm(); }  // ||h||_H^2
  const Eigen::VectorXd& direction() const { return m_; }
  // h on the sampler grid.
  Eigen::VectorXd shift_on_grid() const;
  // log W for tilted coefficients c: W = exp(-level <m, c> + level^2 |m|^2 / 2)
  // = dP_base / dP_tilt, so E_base[Phi(f)] = E_tilt[Phi(f) W(f)].
  double log_weight(const Eigen::VectorXd& c) const;
  Eigen::VectorXd log_weights(const Eigen::MatrixXd& c) const;

 private:
  double level_;
  Eigen::VectorXd m_;
  Eigen::MatrixXd basis_;
};

struct TiltedSample {
  FieldSample sample;  // the base sample shifted by level * h
  double log_weight = 0.0;
  double weight() const;
};

TiltedSample tilt_sample(const AtomizedSpectrum& spec, const std::vector<Point>& grid, const TiltSpec& tilt,
                         std::uint64_t seed, std::uint64_t replication = 0);
TiltedSample tilt_sample(const FieldSampler& sampler, const Tilt& tilt, std::uint64_t seed,
                         std::uint64_t replication = 0);

}  // namespace sgf
