#include "sgf/fieldsim/sampler.hpp"

#include "sgf/error.hpp"
#include "sgf/numerics.hpp"

#include <cmath>
#include <ostream>

namespace sgf {

std::pair<double, double> atom_gaussians(std::uint64_t seed, std::uint64_t replication, std::uint64_t key) {
  const std::uint64_t h = num::hash_combine(num::hash_combine(num::splitmix64(seed), replication), key);
  const double u1 = num::to_unit(num::splitmix64(h));
  const double u2 = num::to_unit(num::splitmix64(h ^ 0xa0761d6478bd642fULL));
  const double r = std::sqrt(-2.0 * std::log(u1));
  return {r * std::cos(2.0 * num::pi * u2), r * std::sin(2.0 * num::pi * u2)};
}

FieldSampler::FieldSampler(const AtomizedSpectrum& spec, std::vector<Point> grid)
    : spec_(spec), grid_(std::move(grid)) {
  if (spec_.atoms.empty()) throw DegenerateFieldError("empty spectrum");
  for (const auto& x : grid_)
    if (static_cast<int>(x.size()) != spec_.dim) throw DomainError("grid dimension mismatch");
  basis_.resize(static_cast<Eigen::Index>(grid_.size()), static_cast<Eigen::Index>(spec_.coefficient_count()));
  Eigen::Index col = 0;
  for (const auto& a : spec_.atoms) {
    const double amp = a.self_conjugate ? std::sqrt(a.weight) : std::sqrt(2.0 * a.weight);
    for (std::size_t r = 0; r < grid_.size(); ++r) {
      double dot = 0.0;
      for (int i = 0; i < spec_.dim; ++i) dot += a.freq[i] * grid_[r][i];
      const double t = 2.0 * num::pi * dot;
      basis_(static_cast<Eigen::Index>(r), col) = amp * std::cos(t);
      if (!a.self_conjugate) basis_(static_cast<Eigen::Index>(r), col + 1) = amp * std::sin(t);
    }
    col += a.self_conjugate ? 1 : 2;
  }
}

Eigen::VectorXd FieldSampler::coefficients(std::uint64_t seed, std::uint64_t replication) const {
  Eigen::VectorXd c(basis_.cols());
  Eigen::Index col = 0;
  for (const auto& a : spec_.atoms) {
    auto [z, e] = atom_gaussians(seed, replication, a.key);
    c(col++) = z;
    if (!a.self_conjugate) c(col++) = e;
  }
  return c;
}

Eigen::MatrixXd FieldSampler::coefficients(std::uint64_t seed, std::uint64_t first, std::size_t count) const {
  Eigen::MatrixXd c(basis_.cols(), static_cast<Eigen::Index>(count));
  for (std::size_t r = 0; r < count; ++r) c.col(static_cast<Eigen::Index>(r)) = coefficients(seed, first + r);
  return c;
}

FieldSample FieldSampler::from_coefficients(const Eigen::VectorXd& coeff, std::uint64_t seed,
                                            std::uint64_t replication) const {
  FieldSample s;
  s.grid = grid_;
  Eigen::VectorXd v = basis_ * coeff;
  s.values.assign(v.data(), v.data() + v.size());
  Eigen::Index col = 0;
  for (const auto& a : spec_.atoms) {
    s.zeta.push_back(coeff(col++));
    s.eta.push_back(a.self_conjugate ? 0.0 : coeff(col++));
  }
  s.seed = seed;
  s.replication = replication;
  s.stream = num::hash_combine(num::splitmix64(seed), replication);
  return s;
}

FieldSample FieldSampler::sample(std::uint64_t seed, std::uint64_t replication) const {
  return from_coefficients(coefficients(seed, replication), seed, replication);
}

long FieldSampler::find(const Point& x, double tol) const {
  for (std::size_t i = 0; i < grid_.size(); ++i) {
    bool same = x.size() == grid_[i].size();
    for (std::size_t k = 0; same && k < x.size(); ++k) same = std::abs(x[k] - grid_[i][k]) <= tol;
    if (same) return static_cast<long>(i);
  }
  return -1;
}

FieldSample sample_field(const AtomizedSpectrum& spec, const std::vector<Point>& grid, std::uint64_t seed,
                         std::uint64_t replication) {
  return FieldSampler(spec, grid).sample(seed, replication);
}

std::uint64_t component_seed(std::uint64_t seed, int component) {
  return num::hash_combine(seed ^ 0x6465636f6d70ULL, static_cast<std::uint64_t>(component));
}

std::pair<FieldSample, FieldSample> decompose_sample(const AtomizedSpectrum& mu1, const AtomizedSpectrum& mu2,
                                                     const std::vector<Point>& grid, std::uint64_t seed,
                                                     std::uint64_t replication) {
  auto part = [&](const AtomizedSpectrum& mu, int i) {
    const std::uint64_t s = component_seed(seed, i);
    if (mu.atoms.empty()) {
      // Zero measure: the zero field.
      FieldSample z;
      z.grid = grid;
      z.values.assign(grid.size(), 0.0);
      z.seed = s;
      z.replication = replication;
      z.stream = num::hash_combine(num::splitmix64(s), replication);
      return z;
    }
    return sample_field(mu, grid, s, replication);
  };
  return {part(mu1, 1), part(mu2, 2)};
}

double rkhs_pairing(const FieldSample& sample, const RepresentingMeasure& rho, double tol) {
  if (rho.points.size() != rho.weights.size()) throw DomainError("representing measure size mismatch");
  double s = 0.0;
  for (std::size_t j = 0; j < rho.points.size(); ++j) {
    long idx = -1;
    for (std::size_t i = 0; i < sample.grid.size() && idx < 0; ++i) {
      bool same = rho.points[j].size() == sample.grid[i].size();
      for (std::size_t k = 0; same && k < rho.points[j].size(); ++k)
        same = std::abs(rho.points[j][k] - sample.grid[i][k]) <= tol;
      if (same) idx = static_cast<long>(i);
    }
    if (idx < 0) throw DomainError("representing measure is not supported on the sample grid");
    s += rho.weights[j] * sample.values[static_cast<std::size_t>(idx)];
  }
  return s;
}

void write_sample_csv(std::ostream& os, const FieldSample& s) {
  const std::size_t d = s.grid.empty() ? 1 : s.grid[0].size();
  for (std::size_t i = 0; i < d; ++i) os << 'x' << i + 1 << ',';
  os << "value\n";
  os.precision(17);
  for (std::size_t r = 0; r < s.grid.size(); ++r) {
    for (double x : s.grid[r]) os << x << ',';
    os << s.values[r] << '\n';
  }
}

}  // namespace sgf
