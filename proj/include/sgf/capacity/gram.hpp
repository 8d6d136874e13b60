#pragma once

#include "sgf/capacity/domain.hpp"
#include "sgf/spectral/kernel.hpp"

#include <Eigen/Dense>
#include <string>

namespace sgf {

struct GramMatrix {
  Eigen::MatrixXd G;
  // How entries were formed: "point", "cell-averaged" (d = 1 singular),
  // "cell-diagonal" (singular, d >= 2: exact cell self-energy on the
  // diagonal, point values off it), or "radial-shells".
  std::string regularization = "point";
  double min_eigenvalue = 0.0;  // filled by check_psd
  bool psd_checked = false;

  std::size_t size() const { return static_cast<std::size_t>(G.rows()); }
  double norm() const { return G.cwiseAbs().maxCoeff(); }
};

// G_ij = K(x_i - x_j), with cell averaging for singular kernels on
// cell-centered domains. Translation-invariant grids reuse kernel values by
// lag, so expensive kernels are evaluated once per distinct lag.
GramMatrix assemble_gram(const DiscreteDomain& D, const Kernel& K);

// Smallest eigenvalue; throws DomainError if below -rel_tol * ||G||.
void check_psd(GramMatrix& g, double rel_tol = 1e-8);

}  // namespace sgf
