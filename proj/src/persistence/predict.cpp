#include "sgf/persistence/predict.hpp"

#include "sgf/capacity/riesz_reference.hpp"
#include "sgf/error.hpp"
#include "sgf/spectral/measure.hpp"

#include <cmath>

namespace sgf {

const PredictorForm& AsymptoticPrediction::form(const std::string& name) const {
  for (const auto& f : forms)
    if (f.name == name) return f;
  throw DomainError("unknown predictor form: " + name);
}

double general_level_exponent(double m, double alpha, int d, double u_prime) {
  const double s = std::sqrt(2.0 * m * (d - alpha));
  if (!(u_prime > -s)) throw DomainError("u' must exceed -sqrt(2 m (d - alpha))");
  return 0.5 * (s + u_prime) * (s + u_prime);
}

AsymptoticPrediction predict_theta(const PredictorInputs& in, const std::vector<double>& T_list) {
  if (!(in.alpha >= 0.0 && in.alpha < in.d)) throw DomainError("alpha must lie in [0, d)");
  if (in.m < 0.0) throw DomainError("m must be >= 0");
  for (double T : T_list)
    if (!(T > 1.0)) throw DomainError("predictor needs T > 1");
  AsymptoticPrediction p;
  p.T = T_list;
  p.exponent = in.u_prime ? general_level_exponent(in.m, in.alpha, in.d, *in.u_prime) : in.m * (in.d - in.alpha);
  const auto ref = riesz_reference(in.alpha, in.d);
  const double c = ref.capacity;
  const double A = in.alpha > 0.0 ? riesz_A(in.alpha, in.d) : 0.0;
  const double B = riesz_B(in.alpha, in.d);

  auto make = [&](const std::string& name, const std::function<double(double)>& src, const char* missing,
                  auto formula) {
    PredictorForm f;
    f.name = name;
    if (!src) {
      f.note = missing;
      p.forms.push_back(f);
      return;
    }
    f.available = true;
    for (double T : T_list) f.theta.push_back(formula(T));
    p.forms.push_back(f);
  };
  const double e = p.exponent;
  make("capacity", in.capacity, "no capacity source",
       [&](double T) { return e * in.capacity(T) * std::log(T); });
  make("ball_mass", in.ball_mass, "no ball masses",
       [&](double T) { return c * e * std::log(T) / in.ball_mass(T); });
  make("kernel", in.kernel, "no kernel values",
       [&](double T) { return c * B * e * std::log(T) / in.kernel(T); });
  if (in.alpha == 0.0 && in.density) {
    PredictorForm f;
    f.name = "density";
    f.note = "density form needs alpha > 0";
    p.forms.push_back(f);
  } else {
    make("density", in.density, "no density",
         [&](double T) { return c * A * e * std::pow(T, in.d) * std::log(T) / in.density(1.0 / T); });
  }

  p.spread.assign(T_list.size(), 0.0);
  const PredictorForm* first = nullptr;
  for (const auto& f : p.forms)
    if (f.available && !first) first = &f;
  if (first) {
    for (const auto& f : p.forms) {
      if (!f.available) continue;
      for (std::size_t i = 0; i < T_list.size(); ++i)
        p.spread[i] = std::max(p.spread[i], std::abs(f.theta[i] / first->theta[i] - 1.0));
    }
  }
  return p;
}

double LaplacianExample::constant() const {
  if (k < 1 || d < 2 * k + 1) throw DomainError("need 1 <= k and d >= 2k + 1");
  const double a = alpha();
  return K0 * 2.0 * k * gamma * riesz_reference(a, d).capacity * riesz_B(a, d);
}

double LaplacianExample::theta(double T) const { return constant() * std::pow(T, alpha()) * std::log(T); }

std::vector<TrendRow> theta_trend(const AtomizedSpectrum& spec, const std::vector<double>& T_list,
                                  const TrendConfig& cfg) {
  if (!cfg.alpha) throw HypothesisError("theta trend needs a spectral singularity (alpha unset)");
  const double alpha = *cfg.alpha;
  if (!(alpha >= 0.0 && alpha < spec.dim)) throw DomainError("alpha must lie in [0, d)");
  std::vector<TrendRow> rows;
  for (double T : T_list) {
    TrendRow row;
    row.T = T;
    auto grid = ball_grid(spec, T, cfg.spacing);
    auto sol = domain_equilibrium(spec, grid);
    row.capacity = sol.capacity;
    if (cfg.importance) {
      double ell = cfg.tilt_level ? *cfg.tilt_level : std::sqrt(2.0 * cfg.m * (spec.dim - alpha) * std::log(T));
      row.estimate = persist_importance(spec, grid, cfg.level, equilibrium_tilt(sol, ell), cfg.mc);
    } else {
      row.estimate = persist_naive(spec, grid, cfg.level, cfg.mc);
    }
    row.predictor = cfg.m * (spec.dim - alpha) * row.capacity * std::log(T);
    if (row.predictor <= 0.0) {
      row.flagged = true;
      row.note = "degenerate: predictor is 0 (m = 0 or T <= 1)";
      row.ratio = std::numeric_limits<double>::quiet_NaN();
    } else if (row.estimate.rare) {
      row.flagged = true;
      row.note = "rare: no persistence hits";
      row.ratio = std::numeric_limits<double>::infinity();
    } else {
      row.ratio = row.estimate.theta / row.predictor;
      row.ratio_se = row.estimate.se_theta / row.predictor;
      if (row.estimate.unreliable) {
        row.flagged = true;
        row.note = "unreliable: effective sample size < 10";
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace sgf
