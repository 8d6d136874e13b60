#include "sgf/spectral/truncation.hpp"

#include "sgf/error.hpp"
#include "sgf/numerics.hpp"

#include <cmath>
#include <sstream>

namespace sgf {

namespace {

double sphere_area(int d) {  // surface area of S^{d-1}
  return 2.0 * std::pow(num::pi, 0.5 * d) / std::tgamma(0.5 * d);
}

}  // namespace

double TruncationPair::bump(double r) const {
  double t = 1.0 - 4.0 * r * r;
  if (t <= 0.0) return 0.0;
  return std::exp(-b_ / std::pow(t, a_));
}

double TruncationPair::gaussian(double r) const {
  return std::pow(2.0 * num::pi, -0.5 * dim_) * std::exp(-0.5 * r * r);
}

double TruncationPair::autocorr(double r) const {
  r = std::abs(r);
  if (r >= 1.0) return 0.0;
  if (dim_ == 1) {
    // integral over y in [r - 1/2, 1/2] of xi'(y) xi'(r - y)
    return num::integrate([&](double y) { return bump(y) * bump(r - y); }, r - 0.5, 0.5, 1e-12);
  }
  const int d = dim_;
  const double ring = sphere_area(d - 1);
  auto inner = [&](double s) {
    auto ang = [&](double th) {
      double q = r * r + s * s - 2.0 * r * s * std::cos(th);
      return bump(std::sqrt(std::max(q, 0.0))) * std::pow(std::sin(th), d - 2);
    };
    return std::pow(s, d - 1) * bump(s) * num::integrate(ang, 0.0, num::pi, 1e-11);
  };
  return ring * num::integrate(inner, 0.0, 0.5, 1e-11);
}

double TruncationPair::radial_transform(double rho) const {
  const auto& r = *r_;
  const auto& w = *w_;
  const auto& f = *f_;
  double s = 0.0;
  const int d = dim_;
  if (d == 1) {
    for (std::size_t i = 0; i < r.size(); ++i) s += w[i] * f[i] * 2.0 * std::cos(2.0 * num::pi * rho * r[i]);
    return s;
  }
  if (rho == 0.0) {
    for (std::size_t i = 0; i < r.size(); ++i) s += w[i] * f[i] * std::pow(r[i], d - 1);
    return sphere_area(d) * s;
  }
  const double z = 2.0 * num::pi * rho;
  if (d == 3) {
    for (std::size_t i = 0; i < r.size(); ++i) s += w[i] * f[i] * r[i] * std::sin(z * r[i]);
    return 2.0 * s / rho;
  }
  const double nu = 0.5 * d - 1.0;
  for (std::size_t i = 0; i < r.size(); ++i)
    s += w[i] * f[i] * std::cyl_bessel_j(nu, z * r[i]) * std::pow(r[i], 0.5 * d);
  return 2.0 * num::pi * std::pow(rho, 1.0 - 0.5 * d) * s;
}

double TruncationPair::xi(double r) const { return norm_ * autocorr(r) * gaussian(r); }

double TruncationPair::xi_profile(double r) const {
  return autocorr(r) * gaussian(r) / profile0_;
}

double TruncationPair::zeta(double r) const { return norm_ * radial_transform(std::abs(r)); }

double TruncationPair::zeta_fast(double r) const {
  r = std::abs(r);
  if (!log_table_) return zeta(r);
  const auto& t = *log_table_;
  const double q = r / table_step_;
  const long n = static_cast<long>(t.size());
  if (q >= n - 1) return 0.0;
  // Catmull-Rom on log zeta; zeta is even, linear extrapolation at the end.
  long i = static_cast<long>(q);
  double u = q - i;
  auto at = [&](long k) {
    if (k < 0) return t[-k];
    if (k >= n) return 2.0 * t[n - 1] - t[2 * (n - 1) - k];
    return t[k];
  };
  double p0 = at(i - 1), p1 = at(i), p2 = at(i + 1), p3 = at(i + 2);
  double v = p1 + 0.5 * u * (p2 - p0 + u * (2.0 * p0 - 5.0 * p1 + 4.0 * p2 - p3 + u * (3.0 * (p1 - p2) + p3 - p0)));
  return std::exp(v);
}

namespace {

// F[phi_s](x) = 2 * integral_0^L zeta(s l / 2) cos(2 pi l x) dl for each x,
// with L chosen where zeta is below the noise floor. zeta is sampled once.
std::vector<double> phi_transform_many(const TruncationPair& p, double s, const std::vector<double>& xs,
                                       double range) {
  double xmax = 0.0;
  for (double x : xs) xmax = std::max(xmax, std::abs(x));
  const double L = 2.0 * range / s;
  const int order = 16;
  const int panels = static_cast<int>(std::ceil(L * (xmax + s) * 2.0)) + 16;
  std::vector<double> nodes, weights;
  for (int k = 0; k < panels; ++k) {
    num::Rule rule = num::gauss_legendre(order, L * k / panels, L * (k + 1) / panels);
    for (int i = 0; i < order; ++i) {
      nodes.push_back(rule.x[i]);
      weights.push_back(rule.w[i] * p.zeta(0.5 * s * rule.x[i]));
    }
  }
  std::vector<double> out;
  out.reserve(xs.size());
  for (double x : xs) {
    double acc = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * std::cos(2.0 * num::pi * nodes[i] * x);
    out.push_back(2.0 * acc);
  }
  return out;
}

}  // namespace

double TruncationPair::phi_transform(double s, double x) const {
  if (dim_ != 1) throw DomainError("phi_transform is implemented for d = 1");
  return phi_transform_many(*this, s, {x}, range_)[0];
}

double TruncationPair::phi_tail_mass(double s) const {
  if (dim_ != 1) throw DomainError("phi_tail_mass is implemented for d = 1");
  // |F[phi_s]| integrated over s/2 <= |x| <= s (both sides); the support of
  // the exact transform ends at s/2.
  const int n = 64;
  num::Rule rule = num::gauss_legendre(n, 0.5 * s, s);
  std::vector<double> f = phi_transform_many(*this, s, rule.x, range_);
  double m = 0.0;
  for (int i = 0; i < n; ++i) m += rule.w[i] * std::abs(f[i]);
  return 2.0 * m;
}

TruncationPair build_truncation(double v, const TruncationOptions& opt) {
  if (!(v > 0.0 && v < 1.0)) throw DomainError("truncation parameter v must lie in (0, 1)");
  if (!(opt.a > 0.0 && opt.b > 0.0)) throw DomainError("bump parameters must be positive");
  if (opt.dim < 1) throw DomainError("dimension must be >= 1");
  TruncationPair p;
  p.v_ = v;
  p.a_ = opt.a;
  p.b_ = opt.b;
  p.dim_ = opt.dim;

  // Radial table of g * gaussian on [0, 1] (composite Gauss-Legendre).
  const int panels = opt.dim == 1 ? 96 : 48, order = 16;
  auto r = std::make_shared<std::vector<double>>();
  auto w = std::make_shared<std::vector<double>>();
  auto f = std::make_shared<std::vector<double>>();
  for (int k = 0; k < panels; ++k) {
    num::Rule rule = num::gauss_legendre(order, double(k) / panels, double(k + 1) / panels);
    for (int i = 0; i < order; ++i) {
      r->push_back(rule.x[i]);
      w->push_back(rule.w[i]);
      f->push_back(p.autocorr(rule.x[i]) * p.gaussian(rule.x[i]));
    }
  }
  p.r_ = r;
  p.w_ = w;
  p.f_ = f;
  const double z0 = p.radial_transform(0.0);
  p.norm_ = 1.0 / z0;
  p.profile0_ = p.autocorr(0.0) * p.gaussian(0.0);
  p.kappa_ = z0 / p.profile0_;

  // Quadrature noise floor: roundoff of the weighted sum.
  double abs_sum = 0.0;
  for (std::size_t i = 0; i < r->size(); ++i) abs_sum += std::abs((*w)[i] * (*f)[i]);
  const double floor = 64.0 * 2.2e-16 * abs_sum * p.norm_ * (opt.dim == 1 ? 2.0 : 1.0);

  // Certificate: c = max zeta(x) e^{x^v} over the range, restricted to
  // values above the noise floor; the ratio must not grow on the last
  // quarter of the resolved range.
  const int samples = 4000;
  std::vector<std::pair<double, double>> ratios;  // (x, ratio)
  double noise = 0.0;
  for (int i = 0; i <= samples; ++i) {
    double x = opt.certify_range * i / samples;
    double z = p.zeta(x);
    if (std::abs(z) <= floor) {
      noise = std::max(noise, std::abs(z));
      continue;
    }
    if (z < 0.0) {
      std::ostringstream msg;
      msg << "truncation transform negative at x=" << x << " (value " << z << ")";
      throw ConstructionError(msg.str());
    }
    ratios.emplace_back(x, z * std::exp(std::pow(x, v)));
  }
  const double resolved = ratios.empty() ? 0.0 : ratios.back().first;
  double cmax = 0.0, tail_max = 0.0;
  for (auto [x, q] : ratios) {
    cmax = std::max(cmax, q);
    if (x >= 0.75 * resolved) tail_max = std::max(tail_max, q);
  }
  p.c_ = cmax;
  p.range_ = opt.certify_range;
  p.resolved_ = resolved;
  p.noise_ = noise;
  auto table = std::make_shared<std::vector<double>>();
  for (long k = 0; k * p.table_step_ <= resolved; ++k) table->push_back(std::log(p.zeta(k * p.table_step_)));
  p.log_table_ = table;
  if (cmax > opt.max_constant || tail_max >= cmax * (1.0 - 1e-12)) {
    std::ostringstream msg;
    msg << "decay bound zeta(x) <= c exp(-|x|^" << v << ") not certified: worst ratio " << cmax
        << ", ratio on the last quarter of the resolved range [0, " << resolved << "] " << tail_max;
    throw ConstructionError(msg.str());
  }
  return p;
}

}  // namespace sgf
