#include "sgf/fieldsim/tilt.hpp"

#include "sgf/error.hpp"

#include <cmath>

namespace sgf {

Tilt::Tilt(const FieldSampler& sampler, const TiltSpec& spec) : level_(spec.level) {
  if (spec.rho.points.size() != spec.rho.weights.size()) throw DomainError("representing measure size mismatch");
  if (!std::isfinite(level_)) throw DomainError("tilt level must be finite");
  m_ = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(sampler.coefficient_count()));
  for (std::size_t j = 0; j < spec.rho.points.size(); ++j) {
    long i = sampler.find(spec.rho.points[j]);
    if (i < 0) throw DomainError("tilt representing measure is not supported on the grid");
    m_ += spec.rho.weights[j] * sampler.basis().row(i).transpose();
  }
  if (!std::isfinite(m_.squaredNorm())) throw DomainError("tilt has infinite RKHS norm");
  basis_ = sampler.basis();
}

Eigen::VectorXd Tilt::shift_on_grid() const { return basis_ * m_; }

double Tilt::log_weight(const Eigen::VectorXd& c) const {
  if (level_ == 0.0) return 0.0;
  return -level_ * m_.dot(c) + 0.5 * level_ * level_ * m_.squaredNorm();
}

Eigen::VectorXd Tilt::log_weights(const Eigen::MatrixXd& c) const {
  if (level_ == 0.0) return Eigen::VectorXd::Zero(c.cols());
  Eigen::VectorXd lw = -level_ * (c.transpose() * m_);
  lw.array() += 0.5 * level_ * level_ * m_.squaredNorm();
  return lw;
}

double TiltedSample::weight() const { return std::exp(log_weight); }

TiltedSample tilt_sample(const FieldSampler& sampler, const Tilt& tilt, std::uint64_t seed,
                         std::uint64_t replication) {
  Eigen::VectorXd c = sampler.coefficients(seed, replication);
  c += tilt.level() * tilt.direction();
  TiltedSample t;
  t.sample = sampler.from_coefficients(c, seed, replication);
  t.log_weight = tilt.log_weight(c);
  return t;
}

TiltedSample tilt_sample(const AtomizedSpectrum& spec, const std::vector<Point>& grid, const TiltSpec& tilt,
                         std::uint64_t seed, std::uint64_t replication) {
  FieldSampler s(spec, grid);
  return tilt_sample(s, Tilt(s, tilt), seed, replication);
}

}  // namespace sgf
