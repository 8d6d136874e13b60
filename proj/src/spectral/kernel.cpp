#include "sgf/spectral/kernel.hpp"

#include "sgf/error.hpp"
#include "sgf/numerics.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <ostream>

namespace sgf {

Kernel::Kernel(int dim, Eval eval, std::string tag)
    : dim_(dim), eval_(std::move(eval)), tag_(std::move(tag)) {}

double Kernel::at(double x) const {
  Point p(dim_, 0.0);
  p[0] = x;
  return eval_(p);
}

double Kernel::origin() const { return eval_(Point(dim_, 0.0)); }

double Kernel::cell_self_energy(double h) const {
  if (cell_self_) return cell_self_(h);
  return origin();
}

Kernel Kernel::with_cell_self_energy(CellSelfEnergy f) const {
  Kernel k = *this;
  k.cell_self_ = std::move(f);
  return k;
}

Kernel Kernel::with_riesz(double alpha, double scale) const {
  Kernel k = *this;
  k.riesz_alpha_ = alpha;
  k.scale_ = scale;
  return k;
}

namespace {

// 2^d d * integral over u in [0,1]^{d-1} of (1+|u|^2)^{-alpha/2} *
// sum_k e_k(u) / (d - alpha + k), where (1-t) prod_j (1 - t u_j) = sum_k e_k t^k.
double riesz_cube_constant(double alpha, int d) {
  static std::mutex mu;
  static std::map<std::pair<int, double>, double> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({d, alpha});
    if (it != cache.end()) return it->second;
  }
  const int q = 14;
  num::Rule r = num::gauss_legendre(q, 0.0, 1.0);
  const int m = d - 1;
  std::vector<int> idx(m, 0);
  double s = 0.0;
  while (true) {
    double w = 1.0, u2 = 0.0;
    std::vector<double> poly{1.0, -1.0};  // (1 - t)
    for (int j = 0; j < m; ++j) {
      double u = r.x[idx[j]];
      w *= r.w[idx[j]];
      u2 += u * u;
      std::vector<double> next(poly.size() + 1, 0.0);
      for (std::size_t k = 0; k < poly.size(); ++k) {
        next[k] += poly[k];
        next[k + 1] -= poly[k] * u;
      }
      poly.swap(next);
    }
    double inner = 0.0;
    for (std::size_t k = 0; k < poly.size(); ++k) inner += poly[k] / (d - alpha + k);
    s += w * std::pow(1.0 + u2, -0.5 * alpha) * inner;
    int j = 0;
    while (j < m && ++idx[j] == q) idx[j++] = 0;
    if (j >= m) break;
  }
  double c = std::pow(2.0, d) * d * s;
  std::lock_guard<std::mutex> lock(mu);
  cache[{d, alpha}] = c;
  return c;
}

}  // namespace

Kernel riesz_kernel(double alpha, int d, double scale) {
  if (!(alpha >= 0.0 && alpha < d)) throw DomainError("riesz alpha must lie in [0, d)");
  if (alpha == 0.0)
    return Kernel(d, [scale](const Point&) { return scale; }, "riesz(alpha=0)").with_riesz(0.0, scale);
  const double B = riesz_B(alpha, d) * scale;
  Kernel k(
      d,
      [alpha, B](const Point& x) {
        double r2 = 0.0;
        for (double v : x) r2 += v * v;
        if (r2 == 0.0) return std::numeric_limits<double>::infinity();
        return B * std::pow(r2, -0.5 * alpha);
      },
      "riesz(alpha=" + std::to_string(alpha) + ",d=" + std::to_string(d) + ")");
  const double C = d == 1 ? 2.0 / ((1.0 - alpha) * (2.0 - alpha)) : riesz_cube_constant(alpha, d);
  return k.with_cell_self_energy([alpha, B, C](double h) { return B * C * std::pow(h, -alpha); })
      .with_riesz(alpha, scale);
}

Kernel exponential_kernel(double length, int d, double variance) {
  if (!(length > 0.0)) throw DomainError("exponential kernel length must be positive");
  return Kernel(
      d,
      [length, variance](const Point& x) {
        double r2 = 0.0;
        for (double v : x) r2 += v * v;
        return variance * std::exp(-std::sqrt(r2) / length);
      },
      "exponential(length=" + std::to_string(length) + ")");
}

Kernel measure_kernel(const SpectralMeasure& mu) {
  if (mu.empty()) throw DegenerateFieldError("empty spectral measure");
  const int d = mu.dim();
  struct Term {
    Point c;
    double mass;
    double width;  // 0 for atoms
  };
  auto terms = std::make_shared<std::vector<Term>>();
  for (const auto& a : mu.atoms())
    if (a.mass > 0.0) terms->push_back({a.freq, a.mass, 0.0});
  if (mu.density()) {
    const auto& g = *mu.density();
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g.masses[i] <= 0.0) continue;
      Point c(d);
      for (int j = 0; j < d; ++j) c[j] = (g.cells[i][j] + 0.5) * g.step;
      terms->push_back({c, g.masses[i], g.step});
    }
  }
  if (mu.cantor()) {
    const auto& cr = *mu.cantor();
    for (const auto& iv : cr.intervals()) {
      double c = iv.start + 0.5 * iv.width;
      terms->push_back({{c}, cr.weight * iv.mass, iv.width});
      terms->push_back({{-c}, cr.weight * iv.mass, iv.width});
    }
  }
  return Kernel(
      d,
      [terms, d](const Point& x) {
        double s = 0.0;
        for (const auto& t : *terms) {
          double ph = 0.0, damp = 1.0;
          for (int j = 0; j < d; ++j) {
            ph += t.c[j] * x[j];
            if (t.width > 0.0) damp *= num::sinc(t.width * x[j]);
          }
          s += t.mass * std::cos(2.0 * num::pi * ph) * damp;
        }
        return s;
      },
      mu.recipe().empty() ? "measure" : "measure:" + mu.recipe());
}

Kernel kernel_of(const SpectralMeasure& mu) {
  if (mu.closed_form() && mu.closed_form()->kind == ClosedForm::Kind::riesz && !mu.lattice())
    return riesz_kernel(mu.closed_form()->alpha, mu.dim());
  return measure_kernel(mu);
}

double KernelTable::lookup(const Point& lag) const {
  double r2 = 0.0;
  for (double v : lag) r2 += v * v;
  if (std::sqrt(r2) > extent * (1.0 + 1e-12)) throw ExtentError("lag outside kernel table extent");
  if (dim == 1) {
    double k = lag[0] / step;
    long kr = std::lround(k);
    if (std::abs(k - kr) < 1e-9) return values[kr + half_size()];
  }
  return kernel(lag);
}

KernelTable tabulate(const Kernel& k, const KernelGridSpec& grid, int dim) {
  if (!(grid.step > 0.0 && grid.extent > 0.0)) throw DomainError("bad kernel grid");
  KernelTable t;
  t.dim = dim;
  t.step = grid.step;
  const long n = std::lround(std::floor(grid.extent / grid.step + 1e-9));
  t.extent = n * grid.step;
  t.values.resize(2 * n + 1);
  for (long i = 0; i <= n; ++i) {
    double v = k.at(i * grid.step);
    t.values[n + i] = v;
    t.values[n - i] = v;
  }
  t.kernel = k;
  if (k.riesz_alpha()) t.closed_form = k.tag();
  return t;
}

KernelTable kernel_from_measure(const SpectralMeasure& mu, const KernelGridSpec& grid) {
  if (mu.empty()) throw DegenerateFieldError("empty spectral measure");
  return tabulate(measure_kernel(mu), grid, mu.dim());
}

void write_kernel_csv(std::ostream& os, const KernelTable& table) {
  os << "x,K\n";
  os.precision(17);
  for (std::size_t i = 0; i < table.values.size(); ++i)
    os << table.x_at(i) << ',' << table.values[i] << '\n';
}

}  // namespace sgf
