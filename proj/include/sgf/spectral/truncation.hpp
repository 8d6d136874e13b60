#pragma once

#include <memory>
#include <vector>

namespace sgf {

struct TruncationOptions {
  double a = 1.0;
  double b = 1.0;
  int dim = 1;
  double certify_range = 100.0;  // |x| range for the decay certificate
  double max_constant = 1e6;     // certificate fails above this c
};

// Radial bump pair: xi >= 0 supported in B(1), zeta = F[xi] > 0 with
// zeta(0) = 1 and zeta(x) <= c exp(-|x|^v). phi_s(l) = zeta(s l / 2), so
// F[phi_s] is supported in B(s/2).
class TruncationPair {
 public:
  double v() const { return v_; }
  double a() const { return a_; }
  double b() const { return b_; }
  int dim() const { return dim_; }

  // Spatial function whose transform is zeta (so integral of xi = 1).
  double xi(double r) const;
  // Same shape normalized to profile(0) = 1; F[profile] = kappa * zeta.
  double xi_profile(double r) const;
  double kappa() const { return kappa_; }
  double zeta(double r) const;
  // Interpolated zeta (log-cubic on a fine table over the resolved range,
  // 0 beyond it). Used by phi.
  double zeta_fast(double r) const;
  double phi(double s, double lambda_norm) const { return zeta_fast(0.5 * s * lambda_norm); }

  // Fitted c with zeta(x) <= c exp(-x^v) on the certified range.
  double decay_constant() const { return c_; }
  double certified_range() const { return range_; }
  // End of the range where zeta is above the quadrature noise floor.
  double resolved_range() const { return resolved_; }
  // Largest |zeta| observed below the quadrature noise floor.
  double noise_floor() const { return noise_; }

  // F[phi_s](x) by numeric quadrature of phi_s (d = 1 only), and the L1 mass
  // of |F[phi_s]| outside B(s/2).
  double phi_transform(double s, double x) const;
  double phi_tail_mass(double s) const;

  friend TruncationPair build_truncation(double v, const TruncationOptions& opt);

 private:
  double v_ = 0.5, a_ = 1.0, b_ = 1.0;
  int dim_ = 1;
  double norm_ = 1.0;     // xi = norm_ * g * gaussian
  double profile0_ = 1.0; // g(0) * gaussian(0)
  double kappa_ = 1.0;
  double c_ = 0.0, range_ = 0.0, resolved_ = 0.0, noise_ = 0.0;
  // Radial nodes/weights on [0, 1] and unnormalized g(r) * gaussian(r).
  std::shared_ptr<const std::vector<double>> r_, w_, f_;
  // log zeta at multiples of table_step_ on [0, resolved_].
  std::shared_ptr<const std::vector<double>> log_table_;
  double table_step_ = 1.0 / 64.0;

  double bump(double r) const;        // xi'_{a,b}
  double autocorr(double r) const;    // (xi' * xi')(r)
  double gaussian(double r) const;
  double radial_transform(double rho) const;
};

TruncationPair build_truncation(double v = 0.5, const TruncationOptions& opt = {});

}  // namespace sgf
