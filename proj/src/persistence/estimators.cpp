#include "sgf/persistence/estimators.hpp"

#include "blocks.hpp"
#include "sgf/capacity/domain.hpp"
#include "sgf/capacity/gram.hpp"
#include "sgf/error.hpp"
#include "sgf/fieldsim/atomize.hpp"

#include <cmath>
#include <optional>
#include <sstream>

namespace sgf {

namespace {

struct Sums {
  double w = 0.0, w2 = 0.0;
  long hits = 0;
};

std::string describe(const std::vector<Point>& domain) {
  std::ostringstream os;
  os << domain.size() << " points";
  return os.str();
}

PersistenceEstimate run(const AtomizedSpectrum& spec, const std::vector<Point>& domain, double level,
                        const TiltSpec* tilt_spec, const MCOptions& opt) {
  if (opt.n_samples < 1) throw DomainError("n_samples must be >= 1");
  if (domain.empty()) throw DomainError("empty domain");
  if (opt.block < 1) throw DomainError("block must be >= 1");
  FieldSampler sampler(spec, domain);
  std::optional<Tilt> tilt;
  if (tilt_spec) tilt.emplace(sampler, *tilt_spec);
  const double shift = tilt ? tilt->level() : 0.0;

  auto parts = detail::run_blocks<Sums>(opt.n_samples, opt.block, opt.threads, [&](long, long first, long count) {
    Eigen::MatrixXd c = sampler.coefficients(opt.seed, static_cast<std::uint64_t>(first), static_cast<std::size_t>(count));
    if (tilt && shift != 0.0) c.colwise() += shift * tilt->direction();
    Eigen::MatrixXd f = sampler.basis() * c;
    Eigen::VectorXd lw = tilt ? tilt->log_weights(c) : Eigen::VectorXd::Zero(count);
    Sums s;
    for (long r = 0; r < count; ++r) {
      if (f.col(r).minCoeff() < level) continue;
      const double w = std::exp(lw(r));
      s.w += w;
      s.w2 += w * w;
      ++s.hits;
    }
    return s;
  });
  Sums tot;
  for (const auto& s : parts) {
    tot.w += s.w;
    tot.w2 += s.w2;
    tot.hits += s.hits;
  }

  PersistenceEstimate e;
  e.domain = describe(domain);
  e.level = level;
  e.method = tilt_spec ? "importance" : "naive";
  e.tilt_level = shift;
  e.n_samples = opt.n_samples;
  e.hits = tot.hits;
  const double n = static_cast<double>(opt.n_samples);
  e.p = tot.w / n;
  if (tilt_spec) {
    e.se_p = std::sqrt(std::max(0.0, tot.w2 / n - e.p * e.p) / n);
  } else {
    e.se_p = std::sqrt(e.p * (1.0 - e.p) / n);
  }
  e.ess = tot.w2 > 0.0 ? tot.w * tot.w / tot.w2 : 0.0;
  if (tot.hits == 0) {
    e.rare = true;
    e.p_upper = 1.0 - std::pow(0.05, 1.0 / n);
  } else {
    e.theta = -std::log(e.p);
    e.se_theta = e.se_p / e.p;
  }
  e.unreliable = tilt_spec && e.ess < 10.0;
  return e;
}

}  // namespace

PersistenceEstimate persist_naive(const AtomizedSpectrum& spec, const std::vector<Point>& domain, double level,
                                  const MCOptions& opt) {
  return run(spec, domain, level, nullptr, opt);
}

PersistenceEstimate persist_importance(const AtomizedSpectrum& spec, const std::vector<Point>& domain, double level,
                                       const TiltSpec& tilt, const MCOptions& opt) {
  if (tilt.level < 0.0) throw DomainError("tilt level must be >= 0");
  return run(spec, domain, level, &tilt, opt);
}

EquilibriumSolution domain_equilibrium(const AtomizedSpectrum& spec, const std::vector<Point>& domain,
                                       const SolverOptions& opt) {
  double spacing = 1.0;
  if (domain.size() > 1) {
    spacing = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < domain.size(); ++i) {
      double d2 = 0.0;
      for (std::size_t k = 0; k < domain[i].size(); ++k) d2 += std::pow(domain[i][k] - domain[i - 1][k], 2);
      if (d2 > 0.0) spacing = std::min(spacing, std::sqrt(d2));
    }
  }
  auto D = point_domain(spec.dim, domain, spacing, "field grid");
  auto G = assemble_gram(D, atomized_kernel(spec));
  return equilibrium_measure(D, G, opt);
}

TiltSpec equilibrium_tilt(const EquilibriumSolution& sol, double tilt_level) {
  if (sol.infinite_capacity) throw DegenerateFieldError("infinite capacity: no equilibrium potential");
  TiltSpec t;
  t.level = tilt_level;
  for (std::size_t i = 0; i < sol.points.size(); ++i) {
    if (sol.nu[i] <= 0.0) continue;
    t.rho.points.push_back(sol.points[i]);
    t.rho.weights.push_back(sol.capacity * sol.nu[i]);
  }
  return t;
}

std::vector<Point> ball_grid(const AtomizedSpectrum& spec, double T, double spacing) {
  if (!(T >= 0.0)) throw DomainError("T must be >= 0");
  if (spec.lattice) return lattice_ball(spec.dim, T).points;
  if (!(spacing > 0.0)) throw DomainError("spacing must be positive");
  if (T == 0.0) return {Point(spec.dim, 0.0)};
  return ball_domain(spec.dim, T, spacing, false).points;
}

}  // namespace sgf
