#pragma once

#include "sgf/fieldsim/atomize.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

namespace sgf {

struct FieldSample {
  std::vector<Point> grid;
  std::vector<double> values;
  // Per atom, in spectrum order; eta is 0 for self-conjugate atoms.
  std::vector<double> zeta, eta;
  std::uint64_t seed = 0;
  std::uint64_t replication = 0;
  std::uint64_t stream = 0;  // hash of (seed, replication)
};

// (zeta, eta) for one atom of one replication: Box-Muller on a counter
// hashed from (seed, replication, key). Shared atoms of different spectra
// get the same pair for the same (seed, replication).
std::pair<double, double> atom_gaussians(std::uint64_t seed, std::uint64_t replication, std::uint64_t key);

// f(x) = sum_j sqrt(2 w_j) (zeta_j cos(2 pi lambda_j.x) + eta_j sin(2 pi lambda_j.x))
//        + sqrt(w_0) zeta_0 cos(2 pi lambda_0.x)  (self-conjugate atoms)
// as a linear map from the coefficient vector to grid values. Coefficients
// are ordered atom by atom: zeta_j, then eta_j for pairs.
class FieldSampler {
 public:
  FieldSampler(const AtomizedSpectrum& spec, std::vector<Point> grid);

  const AtomizedSpectrum& spectrum() const { return spec_; }
  const std::vector<Point>& grid() const { return grid_; }
  std::size_t coefficient_count() const { return static_cast<std::size_t>(basis_.cols()); }
  // Rows: grid points; basis * basis^T is the covariance on the grid.
  const Eigen::MatrixXd& basis() const { return basis_; }

  Eigen::VectorXd coefficients(std::uint64_t seed, std::uint64_t replication) const;
  // Column r holds replication first + r.
  Eigen::MatrixXd coefficients(std::uint64_t seed, std::uint64_t first, std::size_t count) const;
  Eigen::VectorXd field(const Eigen::VectorXd& coeff) const { return basis_ * coeff; }

  FieldSample sample(std::uint64_t seed, std::uint64_t replication = 0) const;
  // Sample from a given coefficient vector (used by tilting).
  FieldSample from_coefficients(const Eigen::VectorXd& coeff, std::uint64_t seed, std::uint64_t replication) const;

  // Index of a grid point, or -1.
  long find(const Point& x, double tol = 1e-9) const;

 private:
  AtomizedSpectrum spec_;
  std::vector<Point> grid_;
  Eigen::MatrixXd basis_;
};

FieldSample sample_field(const AtomizedSpectrum& spec, const std::vector<Point>& grid, std::uint64_t seed,
                         std::uint64_t replication = 0);

// Independent fields for mu1 and mu2: component i is sampled with the seed
// hash(seed, i), so the pair is reproducible and the streams never collide.
std::pair<FieldSample, FieldSample> decompose_sample(const AtomizedSpectrum& mu1, const AtomizedSpectrum& mu2,
                                                     const std::vector<Point>& grid, std::uint64_t seed,
                                                     std::uint64_t replication = 0);
std::uint64_t component_seed(std::uint64_t seed, int component);

// Finite signed measure on points; h = K * rho.
struct RepresentingMeasure {
  std::vector<Point> points;
  std::vector<double> weights;
};

// sum_i rho_i f(x_i). Throws DomainError when a point of rho is not on the grid.
double rkhs_pairing(const FieldSample& sample, const RepresentingMeasure& rho, double tol = 1e-9);

// Columns: x1..xd, value.
void write_sample_csv(std::ostream& os, const FieldSample& s);

}  // namespace sgf
