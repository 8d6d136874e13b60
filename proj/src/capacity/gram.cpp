#include "sgf/capacity/gram.hpp"

#include "sgf/error.hpp"

#include <cmath>
#include <map>
#include <sstream>

namespace sgf {

namespace {

// Mean of B |x - y|^{-alpha} over x, y in cells of width h whose centers
// are r apart (d = 1): B [F(r+h) - 2F(r) + F(r-h)] / h^2,
// F(u) = |u|^{2-alpha} / ((1-alpha)(2-alpha)).
double riesz_cell_pair_1d(double alpha, double B, double r, double h) {
  auto F = [alpha](double u) { return std::pow(std::abs(u), 2.0 - alpha) / ((1.0 - alpha) * (2.0 - alpha)); };
  r = std::abs(r);
  if (r > 64.0 * h) {
    // Second difference loses digits far away; Taylor: K(r) (1 + alpha(alpha+1) h^2 / (12 r^2)).
    double t = h / r;
    return B * std::pow(r, -alpha) * (1.0 + alpha * (alpha + 1.0) * t * t / 12.0);
  }
  return B * (F(r + h) - 2.0 * F(r) + F(r - h)) / (h * h);
}

}  // namespace

GramMatrix assemble_gram(const DiscreteDomain& D, const Kernel& K) {
  D.validate();
  if (K.dim() != D.dim) throw DomainError("kernel and domain dimensions differ");
  const std::size_t n = D.size();
  GramMatrix g;
  g.G.resize(n, n);
  const bool singular = K.singular();
  if (singular && !D.cell_centered)
    throw DomainError("singular kernel requires a cell-centered domain");
  const bool averaged_1d = singular && D.dim == 1 && K.riesz_alpha();
  g.regularization = !singular ? "point" : averaged_1d ? "cell-averaged" : "cell-diagonal";
  const double h = D.spacing;
  double B = 0.0, alpha = 0.0;
  if (averaged_1d) {
    alpha = *K.riesz_alpha();
    B = riesz_B(alpha, 1) * K.scale();
  }

  // Lag cache keyed by integer multiples of the spacing; points off the
  // grid fall back to direct evaluation.
  std::map<std::vector<long>, double> cache;
  auto value = [&](const Point& a, const Point& b) -> double {
    Point lag(D.dim);
    std::vector<long> key(D.dim);
    bool on_grid = true;
    for (int j = 0; j < D.dim; ++j) {
      lag[j] = a[j] - b[j];
      double q = lag[j] / h;
      long k = std::lround(q);
      if (std::abs(q - k) > 1e-7) on_grid = false;
      key[j] = k;
    }
    // K is even: canonical sign so that the first nonzero entry is positive.
    for (int j = 0; j < D.dim; ++j) {
      if (key[j] == 0) continue;
      if (key[j] < 0)
        for (auto& v : key) v = -v;
      break;
    }
    auto eval = [&]() {
      bool zero = true;
      for (double v : lag) zero = zero && std::abs(v) < 1e-12 * h;
      if (singular && zero) return K.cell_self_energy(h);
      if (averaged_1d) return riesz_cell_pair_1d(alpha, B, lag[0], h);
      return K(lag);
    };
    if (!on_grid) return eval();
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    double v = eval();
    cache.emplace(std::move(key), v);
    return v;
  };

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      double v = value(D.points[i], D.points[j]);
      if (!std::isfinite(v)) {
        std::ostringstream msg;
        msg << "non-finite kernel value between domain points " << i << " and " << j;
        throw DomainError(msg.str());
      }
      g.G(i, j) = g.G(j, i) = v;
    }
  return g;
}

void check_psd(GramMatrix& g, double rel_tol) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g.G, Eigen::EigenvaluesOnly);
  g.min_eigenvalue = es.eigenvalues().minCoeff();
  g.psd_checked = true;
  if (g.min_eigenvalue < -rel_tol * g.norm()) {
    std::ostringstream msg;
    msg << "Gram matrix not positive semidefinite: smallest eigenvalue " << g.min_eigenvalue;
    throw DomainError(msg.str());
  }
}

}  // namespace sgf
