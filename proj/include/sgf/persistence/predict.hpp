#pragma once

#include "sgf/fieldsim/atomize.hpp"
#include "sgf/persistence/estimators.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace sgf {

// Unset callbacks make the corresponding form unavailable.
struct PredictorInputs {
  double m = 0.0;  // ||mu_ac||
  double alpha = 0.0;
  int d = 1;
  std::optional<double> u_prime;  // general levels u_T ~ u' sqrt(log T)
  std::function<double(double)> capacity;   // T -> Cap(B(T))
  std::function<double(double)> ball_mass;  // T -> mu[B(1/T)]
  std::function<double(double)> kernel;     // T -> K at |x| = T
  std::function<double(double)> density;    // lambda -> rho(lambda) near 0
  std::string capacity_source = "solver";
};

struct PredictorForm {
  std::string name;  // "capacity", "ball_mass", "kernel", "density"
  bool available = false;
  std::string note;
  std::vector<double> theta;
};

struct AsymptoticPrediction {
  std::vector<double> T;
  double exponent = 0.0;  // m (d - alpha), or (sqrt(2 m (d - alpha)) + u')^2 / 2
  std::vector<PredictorForm> forms;
  // max over available forms of |form / first available - 1|, per T.
  std::vector<double> spread;
  const PredictorForm& form(const std::string& name) const;
};

//   capacity:  e Cap(B(T)) log T
//   ball_mass: c_{alpha,d} e log T / mu[B(1/T)]
//   kernel:    c_{alpha,d} B_{alpha,d} e log T / K(T)
//   density:   c_{alpha,d} A_{alpha,d} e T^d log T / rho(1/T)
// with e = exponent.
AsymptoticPrediction predict_theta(const PredictorInputs& in, const std::vector<double>& T_list);

// (sqrt(2 m (d - alpha)) + u')^2 / 2; u' must exceed -sqrt(2 m (d - alpha)).
double general_level_exponent(double m, double alpha, int d, double u_prime);

// Fields with covariance inverse to a polynomial in the lattice Laplacian:
// K(x) ~ |x|^{2k-d} / gamma, theta ~ c T^{d-2k} log T with
// c = K(0) 2k gamma c_{d-2k,d} B_{d-2k,d}.
struct LaplacianExample {
  int k = 1;
  int d = 3;
  double gamma = 1.0;
  double K0 = 1.0;
  double alpha() const { return d - 2.0 * k; }
  double constant() const;
  double theta(double T) const;
};

struct TrendConfig {
  double level = 0.0;
  std::optional<double> alpha;  // unset: no singularity, the trend is undefined
  double m = 0.0;
  double spacing = 0.25;  // field grid in the continuum
  MCOptions mc;
  bool importance = false;
  // Tilt level; unset uses l_T = sqrt(2 m (d - alpha) log T).
  std::optional<double> tilt_level;
};

struct TrendRow {
  double T = 0.0;
  PersistenceEstimate estimate;
  double capacity = 0.0;
  double predictor = 0.0;  // m (d - alpha) Cap log T
  double ratio = 0.0;      // theta / predictor
  double ratio_se = 0.0;
  bool flagged = false;
  std::string note;
};

// Throws HypothesisError when alpha is unset.
std::vector<TrendRow> theta_trend(const AtomizedSpectrum& spec, const std::vector<double>& T_list,
                                  const TrendConfig& cfg);

}  // namespace sgf
