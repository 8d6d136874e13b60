#include "sgf/persistence/repulsion.hpp"

#include "blocks.hpp"
#include "sgf/error.hpp"

#include <cmath>

namespace sgf {

TestMeasure uniform_ball_measure() {
  TestMeasure t;
  t.name = "uniform";
  t.density = [](const Point&) { return 1.0; };
  t.mass = 1.0;
  t.radial = true;
  return t;
}

std::vector<double> rescaled_weights(const TestMeasure& eta, const std::vector<Point>& grid, double T) {
  if (!(T > 0.0)) throw DomainError("T must be positive");
  std::vector<double> w(grid.size(), 0.0);
  double total = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    Point y = grid[i];
    double r2 = 0.0;
    for (double& v : y) {
      v /= T;
      r2 += v * v;
    }
    if (r2 > 1.0 + 1e-12) continue;
    w[i] = eta.density(y);
    if (w[i] < 0.0) throw DomainError("test measure density must be >= 0");
    total += w[i];
  }
  if (!(total > 0.0)) throw DomainError("test measure has no mass on the grid");
  for (double& v : w) v *= eta.mass / total;
  return w;
}

ConditionedAverage conditioned_average(const AtomizedSpectrum& spec, const std::vector<Point>& domain,
                                       const std::vector<double>& weights, double level, long n_conditioned,
                                       long max_samples, const MCOptions& opt) {
  if (weights.size() != domain.size()) throw DomainError("weights must match the domain");
  if (n_conditioned < 1 || max_samples < 1) throw DomainError("sample counts must be >= 1");
  FieldSampler sampler(spec, domain);
  Eigen::Map<const Eigen::VectorXd> w(weights.data(), static_cast<Eigen::Index>(weights.size()));
  ConditionedAverage out;
  // Rounds of threads * block replications; accepted values are taken in
  // replication order, so the result does not depend on the thread count.
  const long round = opt.block * std::max(1, opt.threads);
  for (long start = 0; start < max_samples && out.accepted < n_conditioned; start += round) {
    const long n = std::min(round, max_samples - start);
    auto parts = detail::run_blocks<std::vector<double>>(n, opt.block, opt.threads, [&](long, long first, long count) {
      Eigen::MatrixXd c = sampler.coefficients(opt.seed, static_cast<std::uint64_t>(start + first),
                                               static_cast<std::size_t>(count));
      Eigen::MatrixXd f = sampler.basis() * c;
      std::vector<double> acc;
      for (long r = 0; r < count; ++r)
        if (f.col(r).minCoeff() >= level) acc.push_back(w.dot(f.col(r)));
      return acc;
    });
    // Count tries up to the replication that completed the quota.
    long tried = start;
    for (std::size_t b = 0; b < parts.size(); ++b) {
      const long first = static_cast<long>(b) * opt.block;
      const long count = std::min(opt.block, n - first);
      if (out.accepted + static_cast<long>(parts[b].size()) < n_conditioned) {
        out.values.insert(out.values.end(), parts[b].begin(), parts[b].end());
        out.accepted += static_cast<long>(parts[b].size());
        tried = start + first + count;
        continue;
      }
      // This block completes the quota; tries are counted to the block end.
      const long need = n_conditioned - out.accepted;
      out.values.insert(out.values.end(), parts[b].begin(), parts[b].begin() + need);
      out.accepted = n_conditioned;
      tried = start + first + count;
      break;
    }
    out.tried = tried;
  }
  if (out.accepted > 0) {
    double s = 0.0, s2 = 0.0;
    out.min_value = out.values[0];
    for (double v : out.values) {
      s += v;
      s2 += v * v;
      out.min_value = std::min(out.min_value, v);
    }
    const double n = static_cast<double>(out.accepted);
    out.mean = s / n;
    out.se = n > 1 ? std::sqrt(std::max(0.0, (s2 / n - out.mean * out.mean) * n / (n - 1)) / n) : 0.0;
    out.all_positive = out.min_value > 0.0;
  }
  return out;
}

std::vector<RepulsionStat> repulsion_experiment(const AtomizedSpectrum& spec, const std::vector<double>& T_list,
                                                const TestMeasure& eta, const RepulsionConfig& cfg) {
  const double scale = 2.0 * cfg.m * (spec.dim - cfg.alpha);
  if (!(scale > 0.0)) throw DomainError("normalizer sqrt(2 m (d - alpha) log T) is zero");
  std::vector<RepulsionStat> out;
  for (double T : T_list) {
    if (!(T > 1.0)) throw DomainError("repulsion needs T > 1");
    RepulsionStat st;
    st.T = T;
    st.ell_T = std::sqrt(scale * std::log(T));
    auto grid = ball_grid(spec, T, cfg.spacing);
    auto w = rescaled_weights(eta, grid, T);
    auto sol = domain_equilibrium(spec, grid);
    for (std::size_t i = 0; i < grid.size(); ++i) st.reference += w[i] * sol.potential[i];
    st.conditioned = conditioned_average(spec, grid, w, cfg.level, cfg.n_conditioned, cfg.max_samples, cfg.mc);
    st.accept_rate = st.conditioned.tried > 0
                         ? static_cast<double>(st.conditioned.accepted) / static_cast<double>(st.conditioned.tried)
                         : 0.0;
    if (st.conditioned.accepted < cfg.n_conditioned || st.accept_rate < cfg.min_accept_rate) {
      st.skipped = true;
      st.note = "acceptance too low for rejection sampling";
    }
    if (st.conditioned.accepted > 0) {
      st.normalized = st.conditioned.mean / st.ell_T;
      st.gap = std::abs(st.normalized - st.reference);
      st.gap_se = st.conditioned.se / st.ell_T;
    }
    out.push_back(std::move(st));
  }
  return out;
}

}  // namespace sgf
