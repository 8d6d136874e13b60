#pragma once

#include "sgf/capacity/ball.hpp"
#include "sgf/capacity/domain.hpp"
#include "sgf/capacity/gram.hpp"
#include "sgf/capacity/solver.hpp"
#include "sgf/spectral/kernel.hpp"
#include "sgf/spectral/measure.hpp"
#include "sgf/spectral/truncation.hpp"

#include <string>
#include <vector>

namespace sgf {

// ---- energies ----

// E[nu, eta] = sum_ij nu_i eta_j K(x_i - y_j), lags looked up in the table.
// Throws ExtentError for lags beyond the table.
double energy(const std::vector<Point>& xs, const std::vector<double>& nu, const std::vector<Point>& ys,
              const std::vector<double>& eta, const KernelTable& K);
double energy(const std::vector<Point>& xs, const std::vector<double>& nu, const std::vector<Point>& ys,
              const std::vector<double>& eta, const Kernel& K);
// Same pairing in the spectral domain: integral of F[nu] conj(F[eta]) d mu
// (density cells under the piecewise-constant model, exact for atoms).
double spectral_energy(const std::vector<Point>& xs, const std::vector<double>& nu,
                       const std::vector<Point>& ys, const std::vector<double>& eta,
                       const SpectralMeasure& mu);
// x^T G y.
double gram_energy(const GramMatrix& G, const std::vector<double>& x, const std::vector<double>& y);

// ---- inequality reports ----

struct InequalityReport {
  std::string name;
  double lhs = 0.0;    // the inequality reads lhs <= rhs + slack
  double rhs = 0.0;
  double slack = 0.0;
  bool holds = false;
  std::string detail;
};

// Throws ValidatorFailure naming the inequality when it fails.
void require(const InequalityReport& r);

// Cap(D1 u D2) <= Cap(D1) + Cap(D2) for K >= 0.
InequalityReport subadditivity_check(const Kernel& K, const DiscreteDomain& D1, const DiscreteDomain& D2,
                                     const SolverOptions& opt = {});
// D1 subset of D2 => Cap(D1) <= Cap(D2).
InequalityReport monotonicity_check(const Kernel& K, const DiscreteDomain& inner, const DiscreteDomain& outer,
                                    const SolverOptions& opt = {});
// Cap_{phi_s^2 mu}(B(T - s)) <= Cap_mu(B(T)).
InequalityReport smoothing_check(const SpectralMeasure& mu, double T, double s, const TruncationPair& tp,
                                 const BallResolution& res = {}, const SolverOptions& opt = {});
// Averaging nu over the symmetries of the cubic grid (coordinate signs and
// permutations) does not raise the energy beyond the gap.
InequalityReport radialization_check(const DiscreteDomain& D, const GramMatrix& G, const EquilibriumSolution& sol);
// |<h_D, eta> - <h_nu, eta>| <= 2 sqrt(E[eta] Cap (E[nu] Cap - 1)) + slack,
// for a feasible nu with E[nu] Cap <= 2; eta is a signed vector on D.
InequalityReport stability_check(const GramMatrix& G, const EquilibriumSolution& sol, const std::vector<double>& nu,
                                 const std::vector<double>& eta, double slack);
// E(t nu + (1-t) eta) - [t E(nu) + (1-t) E(eta) - t(1-t) E(nu - eta)].
double convexity_residual(const GramMatrix& G, const std::vector<double>& nu, const std::vector<double>& eta,
                          double t);

struct BracketReport {
  double T = 0.0;
  double lower = 0.0;     // 1 / integral phi_T^2 d mu
  double capacity = 0.0;
  double upper = 0.0;     // 4 / mu[B(c_d / T)]
  double cd = 1.0 / 6.0;
  bool holds = false;
};
// c_d = 1/6 makes cos(2 pi <lambda, x>) >= 1/2 for |lambda| <= c_d, |x| <= 1.
BracketReport capacity_bracket(const SpectralMeasure& mu, double T, double capacity, const TruncationPair& tp,
                               double cd = 1.0 / 6.0);

struct DualReport {
  double capacity = 0.0;
  double norm2 = 0.0;         // ||h||_H^2 = rho^T G rho, rho = Cap nu
  double relative_residual = 0.0;  // |norm2 - Cap| / Cap
  double bound = 0.0;         // gap-derived bound on the residual
  double min_potential = 0.0;
  double pot_tol = 1e-3;
  bool holds = false;
};
DualReport dual_check(const GramMatrix& G, const EquilibriumSolution& sol, double pot_tol = 1e-3);

// ---- tables ----

struct GrowthRow {
  double T = 0.0, T_next = 0.0;
  double cap = 0.0, cap_next = 0.0, ratio = 0.0;
};
// Cap(B(T + T^{1-eps})) / Cap(B(T)).
std::vector<GrowthRow> capacity_growth_profile(const SpectralMeasure& mu, const std::vector<double>& T_list,
                                               double epsilon, const BallResolution& res = {},
                                               const SolverOptions& opt = {});
// Cap(B(T_b)) / Cap(B(T_a)) for an explicit pair.
GrowthRow capacity_ratio(const SpectralMeasure& mu, double T_a, double T_b, const BallResolution& res = {},
                         const SolverOptions& opt = {});

struct ScalingRow {
  double T = 0.0, capacity = 0.0, ball_mass = 0.0, ratio = 0.0;
};
// Cap(B(T)) mu[B(1/T)] / c_{alpha,d}.
std::vector<ScalingRow> riesz_scaling_check(const SpectralMeasure& mu, double alpha, const std::vector<double>& T_list,
                                            const BallResolution& res = {}, const SolverOptions& opt = {});

}  // namespace sgf
