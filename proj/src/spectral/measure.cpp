#include "sgf/spectral/measure.hpp"

#include "sgf/error.hpp"
#include "sgf/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace sgf {

double DensityGrid::total() const {
  return std::accumulate(masses.begin(), masses.end(), 0.0);
}

int CantorRecipe::branching() const {
  return static_cast<int>(
      std::count_if(J.begin(), J.end(), [&](int j) { return j <= depth; }));
}

std::vector<CantorRecipe::Interval> CantorRecipe::intervals() const {
  if (depth < 0 || depth > 50) throw DomainError("cantor depth must lie in [0, 50]");
  std::vector<int> active;
  for (int j : J)
    if (j <= depth) active.push_back(j);
  if (active.size() > 24)
    throw DomainError("cantor depth too large to enumerate (more than 2^24 intervals)");
  const std::uint64_t base = std::uint64_t{1} << depth;
  const std::size_t n = std::size_t{1} << active.size();
  const double width = std::ldexp(1.0, -depth);
  const double mass = std::ldexp(1.0, -static_cast<int>(active.size()));
  std::vector<Interval> out;
  out.reserve(n);
  for (std::size_t bits = 0; bits < n; ++bits) {
    std::uint64_t num = base;
    for (std::size_t i = 0; i < active.size(); ++i)
      if (bits >> i & 1U) num += std::uint64_t{1} << (depth - active[i]);
    out.push_back({num, std::ldexp(static_cast<double>(num), -depth), width, mass});
  }
  std::sort(out.begin(), out.end(),
            [](const Interval& a, const Interval& b) { return a.numerator < b.numerator; });
  return out;
}

SpectralMeasure::SpectralMeasure(int dim, bool lattice) : dim_(dim), lattice_(lattice) {
  if (dim < 1) throw DomainError("dimension must be >= 1");
}

Point torus_reduce(Point freq) {
  for (double& x : freq) {
    x -= std::floor(x + 0.5);
    if (x >= 0.5) x -= 1.0;
  }
  return freq;
}

namespace {

Point negate(Point p) {
  for (double& x : p) x = -x;
  return p;
}

std::vector<long long> freq_key(const Point& p) {
  std::vector<long long> k(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) k[i] = std::llround(p[i] * 1e9);
  return k;
}

}  // namespace

SpectralMeasure SpectralMeasure::with_atom(Point freq, double mass) const {
  if (static_cast<int>(freq.size()) != dim_) throw DomainError("atom dimension mismatch");
  SpectralMeasure m = *this;
  if (lattice_) freq = torus_reduce(std::move(freq));
  m.atoms_.push_back({std::move(freq), mass});
  return m;
}

SpectralMeasure SpectralMeasure::with_atoms(std::vector<Atom> atoms) const {
  SpectralMeasure m = *this;
  m.atoms_.reserve(m.atoms_.size() + atoms.size());
  for (auto& a : atoms) {
    if (static_cast<int>(a.freq.size()) != dim_) throw DomainError("atom dimension mismatch");
    if (lattice_) a.freq = torus_reduce(std::move(a.freq));
    m.atoms_.push_back(std::move(a));
  }
  return m;
}

SpectralMeasure SpectralMeasure::with_pair(Point freq, double mass) const {
  Point f = lattice_ ? torus_reduce(freq) : freq;
  Point g = lattice_ ? torus_reduce(negate(f)) : negate(f);
  if (freq_key(f) == freq_key(g)) return with_atom(f, mass);
  return with_atom(f, mass).with_atom(g, mass);
}

SpectralMeasure SpectralMeasure::with_density(DensityGrid g) const {
  if (g.step <= 0.0) throw DomainError("density grid step must be positive");
  SpectralMeasure m = *this;
  m.density_ = std::move(g);
  return m;
}

SpectralMeasure SpectralMeasure::with_cantor(CantorRecipe c) const {
  if (dim_ != 1) throw DomainError("cantor component requires d = 1");
  SpectralMeasure m = *this;
  m.cantor_ = std::move(c);
  return m;
}

SpectralMeasure SpectralMeasure::with_closed_form(std::optional<ClosedForm> c) const {
  SpectralMeasure m = *this;
  m.closed_ = c;
  return m;
}

SpectralMeasure SpectralMeasure::with_recipe(std::string r) const {
  SpectralMeasure m = *this;
  m.recipe_ = std::move(r);
  return m;
}

SpectralMeasure SpectralMeasure::scaled(double factor) const {
  if (factor < 0.0) throw DomainError("negative scale factor");
  SpectralMeasure m = *this;
  for (auto& a : m.atoms_) a.mass *= factor;
  if (m.density_)
    for (double& v : m.density_->masses) v *= factor;
  if (m.cantor_) m.cantor_->weight *= factor;
  m.closed_.reset();
  return m;
}

SpectralMeasure SpectralMeasure::plus(const SpectralMeasure& other) const {
  if (other.dim_ != dim_ || other.lattice_ != lattice_)
    throw DomainError("cannot add measures of different dimension or lattice type");
  SpectralMeasure m = *this;
  m.atoms_.insert(m.atoms_.end(), other.atoms_.begin(), other.atoms_.end());
  if (other.density_) {
    if (!m.density_) {
      m.density_ = other.density_;
    } else {
      if (std::abs(m.density_->step - other.density_->step) > 1e-15)
        throw DomainError("density grids must share their step");
      std::map<std::vector<long>, double> merged;
      for (std::size_t i = 0; i < m.density_->size(); ++i)
        merged[m.density_->cells[i]] += m.density_->masses[i];
      for (std::size_t i = 0; i < other.density_->size(); ++i)
        merged[other.density_->cells[i]] += other.density_->masses[i];
      DensityGrid g;
      g.step = m.density_->step;
      if (m.density_->power_alpha == other.density_->power_alpha)
        g.power_alpha = m.density_->power_alpha;
      for (auto& [k, v] : merged) {
        g.cells.push_back(k);
        g.masses.push_back(v);
      }
      m.density_ = std::move(g);
    }
  }
  if (other.cantor_) {
    if (m.cantor_) throw DomainError("at most one cantor component");
    m.cantor_ = other.cantor_;
  }
  m.closed_.reset();
  if (!other.recipe_.empty())
    m.recipe_ = m.recipe_.empty() ? other.recipe_ : m.recipe_ + " + " + other.recipe_;
  return m;
}

double SpectralMeasure::atom_mass() const {
  double s = 0.0;
  for (const auto& a : atoms_) s += a.mass;
  return s;
}

double SpectralMeasure::ac_mass() const { return density_ ? density_->total() : 0.0; }

double SpectralMeasure::sc_mass() const { return cantor_ ? 2.0 * cantor_->weight : 0.0; }

double SpectralMeasure::total_mass() const { return atom_mass() + ac_mass() + sc_mass(); }

void SpectralMeasure::validate(double tol) const {
  std::map<std::vector<long long>, double> atom_map;
  for (const auto& a : atoms_) {
    if (!(a.mass >= 0.0)) throw DomainError("negative atom mass");
    if (static_cast<int>(a.freq.size()) != dim_) throw DomainError("atom dimension mismatch");
    atom_map[freq_key(a.freq)] += a.mass;
  }
  for (const auto& [k, w] : atom_map) {
    Point neg(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) neg[i] = -static_cast<double>(k[i]) * 1e-9;
    if (lattice_) neg = torus_reduce(neg);
    auto it = atom_map.find(freq_key(neg));
    double wm = it == atom_map.end() ? 0.0 : it->second;
    if (std::abs(wm - w) > tol * std::max(1.0, w))
      throw DomainError("atoms violate Hermitian symmetry");
  }
  if (density_) {
    std::map<std::vector<long>, double> cell_map;
    for (std::size_t i = 0; i < density_->size(); ++i) {
      if (!(density_->masses[i] >= 0.0)) throw DomainError("negative density cell");
      if (static_cast<int>(density_->cells[i].size()) != dim_)
        throw DomainError("density cell dimension mismatch");
      cell_map[density_->cells[i]] += density_->masses[i];
    }
    for (const auto& [k, v] : cell_map) {
      std::vector<long> mirror(k.size());
      for (std::size_t i = 0; i < k.size(); ++i) mirror[i] = -k[i] - 1;
      auto it = cell_map.find(mirror);
      double vm = it == cell_map.end() ? 0.0 : it->second;
      if (std::abs(vm - v) > tol * std::max(1.0, v))
        throw DomainError("density grid is not symmetric");
    }
  }
  if (cantor_ && cantor_->weight < 0.0) throw DomainError("negative cantor weight");
  if (!std::isfinite(total_mass())) throw DomainError("total mass is not finite");
}

double riesz_A(double alpha, int d) {
  return alpha * std::tgamma(0.5 * d) / (2.0 * std::pow(num::pi, 0.5 * d));
}

double riesz_B(double alpha, int d) {
  return std::tgamma(1.0 + 0.5 * alpha) * std::tgamma(0.5 * d) /
         (std::pow(num::pi, alpha) * std::tgamma(0.5 * (d - alpha)));
}

namespace {

// Smooth-region tensor Gauss rule for A |l|^{alpha-d} over a box.
double riesz_box_smooth(double alpha, const Point& lo, const Point& hi, int depth) {
  const int d = static_cast<int>(lo.size());
  double size = 0.0, dist2 = 0.0;
  for (int i = 0; i < d; ++i) {
    size = std::max(size, hi[i] - lo[i]);
    double c = std::clamp(0.0, lo[i], hi[i]);
    dist2 += c * c;
  }
  const double ratio = std::sqrt(dist2) / size;
  if (ratio < 4.0 && depth < 12) {
    double s = 0.0;
    for (int mask = 0; mask < (1 << d); ++mask) {
      Point a(d), b(d);
      for (int i = 0; i < d; ++i) {
        double mid = 0.5 * (lo[i] + hi[i]);
        a[i] = (mask >> i & 1) ? mid : lo[i];
        b[i] = (mask >> i & 1) ? hi[i] : mid;
      }
      s += riesz_box_smooth(alpha, a, b, depth + 1);
    }
    return s;
  }
  const int q = ratio > 8.0 ? 3 : 5;
  std::vector<num::Rule> rules;
  for (int i = 0; i < d; ++i) rules.push_back(num::gauss_legendre(q, lo[i], hi[i]));
  const double A = riesz_A(alpha, d);
  std::vector<int> idx(d, 0);
  double s = 0.0;
  while (true) {
    double r2 = 0.0, w = 1.0;
    for (int i = 0; i < d; ++i) {
      r2 += rules[i].x[idx[i]] * rules[i].x[idx[i]];
      w *= rules[i].w[idx[i]];
    }
    s += w * A * std::pow(r2, 0.5 * (alpha - d));
    int i = 0;
    while (i < d && ++idx[i] == q) idx[i++] = 0;
    if (i == d) break;
  }
  return s;
}

// Mass of [0, a_1] x ... x [0, a_d] (origin at a vertex).
double riesz_corner_mass(double alpha, Point a) {
  const int d = static_cast<int>(a.size());
  const double m = *std::min_element(a.begin(), a.end());
  // Self-similarity of the cube [0, m]^d: M = R / (1 - 2^-alpha).
  double rest = 0.0;
  for (int mask = 1; mask < (1 << d); ++mask) {
    Point lo(d), hi(d);
    for (int i = 0; i < d; ++i) {
      lo[i] = (mask >> i & 1) ? 0.5 * m : 0.0;
      hi[i] = (mask >> i & 1) ? m : 0.5 * m;
    }
    rest += riesz_box_smooth(alpha, lo, hi, 0);
  }
  double cube = rest / (1.0 - std::pow(2.0, -alpha));
  // Slabs covering [0, a] minus [0, m]^d.
  for (int i = 0; i < d; ++i) {
    if (a[i] <= m) continue;
    Point lo(d, 0.0), hi(d);
    for (int j = 0; j < d; ++j) hi[j] = j < i ? m : a[j];
    lo[i] = m;
    cube += riesz_box_smooth(alpha, lo, hi, 0);
  }
  return cube;
}

}  // namespace

double riesz_box_mass(double alpha, const Point& lo, const Point& hi) {
  const int d = static_cast<int>(lo.size());
  if (d == 1) {
    auto F = [&](double x) { return std::copysign(std::pow(std::abs(x), alpha), x) / 2.0; };
    return F(hi[0]) - F(lo[0]);
  }
  bool touches = true;
  for (int i = 0; i < d; ++i)
    if (lo[i] > 0.0 || hi[i] < 0.0) touches = false;
  if (!touches) return riesz_box_smooth(alpha, lo, hi, 0);
  // Split along axes that straddle 0 so each piece has the origin as a vertex.
  double s = 0.0;
  for (int mask = 0; mask < (1 << d); ++mask) {
    Point a(d);
    bool ok = true;
    for (int i = 0; i < d; ++i) {
      double len = (mask >> i & 1) ? hi[i] : -lo[i];
      if (len <= 0.0) ok = false;
      a[i] = len;
    }
    if (ok) s += riesz_corner_mass(alpha, a);
  }
  return s;
}

SpectralMeasure riesz_torus_measure(double alpha, double step) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("torus riesz alpha must lie in (0, 1)");
  if (!(step > 0.0) || std::abs(0.5 / step - std::round(0.5 / step)) > 1e-9)
    throw DomainError("torus riesz step must divide 1/2");
  auto mu = riesz_measure(alpha, 1, {step, 0.5});
  return SpectralMeasure(1, true)
      .with_density(*mu.density())
      .with_recipe("riesz_torus(alpha=" + std::to_string(alpha) + ")");
}

RieszGridSpec default_riesz_grid(int d) {
  if (d <= 1) return {};
  if (d == 2) return {1.0 / 16.0, 8.0};
  if (d == 3) return {1.0 / 4.0, 4.0};
  return {1.0, 2.0};
}

SpectralMeasure riesz_measure(double alpha, int d) { return riesz_measure(alpha, d, default_riesz_grid(d)); }

SpectralMeasure riesz_measure(double alpha, int d, const RieszGridSpec& grid) {
  if (d < 1) throw DomainError("dimension must be >= 1");
  if (!(alpha >= 0.0 && alpha < d)) throw DomainError("riesz alpha must lie in [0, d)");
  SpectralMeasure mu(d);
  if (alpha == 0.0) {
    return mu.with_atom(Point(d, 0.0), 1.0)
        .with_closed_form(ClosedForm{ClosedForm::Kind::riesz, 0.0})
        .with_recipe("riesz(alpha=0)");
  }
  if (grid.step <= 0.0 || grid.extent <= 0.0) throw DomainError("bad riesz grid");
  const long n = static_cast<long>(std::ceil(grid.extent / grid.step - 1e-9));
  DensityGrid g;
  g.step = grid.step;
  if (d == 1) g.power_alpha = alpha;
  // Masses depend only on |k| pattern; cache by sorted absolute offsets.
  std::map<std::vector<long>, double> cache;
  std::vector<long> idx(d, -n);
  while (true) {
    std::vector<long> key(d);
    for (int i = 0; i < d; ++i) key[i] = idx[i] < 0 ? -idx[i] - 1 : idx[i];
    std::sort(key.begin(), key.end());
    auto it = cache.find(key);
    if (it == cache.end()) {
      Point lo(d), hi(d);
      for (int i = 0; i < d; ++i) {
        lo[i] = key[i] * grid.step;
        hi[i] = (key[i] + 1) * grid.step;
      }
      it = cache.emplace(key, riesz_box_mass(alpha, lo, hi)).first;
    }
    g.cells.push_back(idx);
    g.masses.push_back(it->second);
    int i = 0;
    while (i < d && ++idx[i] == n) idx[i++] = -n;
    if (i == d) break;
  }
  return mu.with_density(std::move(g))
      .with_closed_form(ClosedForm{ClosedForm::Kind::riesz, alpha})
      .with_recipe("riesz(alpha=" + std::to_string(alpha) + ",d=" + std::to_string(d) + ")");
}

namespace {

// Fraction of a d=1 cell [a, b] lying in [lo, hi].
double cell_fraction_1d(double a, double b, double lo, double hi,
                        const std::optional<double>& power) {
  double x0 = std::max(a, lo), x1 = std::min(b, hi);
  if (x1 <= x0) return 0.0;
  if (power) {
    auto F = [&](double x) { return std::copysign(std::pow(std::abs(x), *power), x); };
    return (F(x1) - F(x0)) / (F(b) - F(a));
  }
  return (x1 - x0) / (b - a);
}

double dist_to_box(const Point& u, const Point& lo, const Point& hi, bool farthest) {
  double s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    double c;
    if (farthest)
      c = std::max(std::abs(u[i] - lo[i]), std::abs(u[i] - hi[i]));
    else
      c = u[i] < lo[i] ? lo[i] - u[i] : (u[i] > hi[i] ? u[i] - hi[i] : 0.0);
    s += c * c;
  }
  return std::sqrt(s);
}

double density_in_ball(const DensityGrid& g, int d, const Point& u, double delta) {
  double s = 0.0;
  Point lo(d), hi(d);
  for (std::size_t c = 0; c < g.size(); ++c) {
    for (int i = 0; i < d; ++i) {
      lo[i] = g.cells[c][i] * g.step;
      hi[i] = lo[i] + g.step;
    }
    if (d == 1) {
      s += g.masses[c] * cell_fraction_1d(lo[0], hi[0], u[0] - delta, u[0] + delta, g.power_alpha);
      continue;
    }
    if (dist_to_box(u, lo, hi, false) > delta) continue;
    if (dist_to_box(u, lo, hi, true) <= delta) {
      s += g.masses[c];
      continue;
    }
    // 4^d subcell midpoints.
    const int k = 4, total = static_cast<int>(std::pow(k, d));
    int inside = 0;
    for (int t = 0; t < total; ++t) {
      int r = t;
      double r2 = 0.0;
      for (int i = 0; i < d; ++i) {
        double x = lo[i] + (r % k + 0.5) * g.step / k - u[i];
        r /= k;
        r2 += x * x;
      }
      if (r2 <= delta * delta) ++inside;
    }
    s += g.masses[c] * inside / total;
  }
  return s;
}

double shifted_ball_mass_plain(const SpectralMeasure& mu, const Point& u, double delta) {
  const int d = mu.dim();
  double s = 0.0;
  const double eps = 1e-12 * std::max(1.0, delta);
  for (const auto& a : mu.atoms()) {
    double r2 = 0.0;
    for (int i = 0; i < d; ++i) r2 += (a.freq[i] - u[i]) * (a.freq[i] - u[i]);
    if (std::sqrt(r2) <= delta + eps) s += a.mass;
  }
  if (mu.density()) s += density_in_ball(*mu.density(), d, u, delta);
  if (mu.cantor()) {
    const auto& c = *mu.cantor();
    for (const auto& iv : c.intervals()) {
      for (int side : {1, -1}) {
        double a = side > 0 ? iv.start : -iv.start - iv.width;
        double b = a + iv.width;
        s += c.weight * iv.mass * cell_fraction_1d(a, b, u[0] - delta, u[0] + delta, std::nullopt);
      }
    }
  }
  return s;
}

}  // namespace

double shifted_ball_mass(const SpectralMeasure& mu, const Point& u, double delta) {
  if (!(delta > 0.0)) throw DomainError("ball radius must be positive");
  if (static_cast<int>(u.size()) != mu.dim()) throw DomainError("center dimension mismatch");
  if (!mu.lattice()) return shifted_ball_mass_plain(mu, u, delta);
  if (delta >= 0.5) throw DomainError("torus balls need radius < 1/2");
  // Sum over periodic images of the center that can meet [-1/2, 1/2)^d.
  const int d = mu.dim();
  Point v = torus_reduce(u);
  double s = 0.0;
  const int images = static_cast<int>(std::pow(3, d));
  for (int t = 0; t < images; ++t) {
    Point w = v;
    int r = t;
    for (int i = 0; i < d; ++i) {
      w[i] += (r % 3) - 1;
      r /= 3;
    }
    bool near = true;
    for (int i = 0; i < d; ++i)
      if (w[i] + delta < -0.5 || w[i] - delta > 0.5) near = false;
    if (near) s += shifted_ball_mass_plain(mu, w, delta);
  }
  return s;
}

double ball_mass(const SpectralMeasure& mu, double delta) {
  return shifted_ball_mass(mu, Point(mu.dim(), 0.0), delta);
}

double exact_ball_mass(const SpectralMeasure& mu, double delta) {
  if (!(delta > 0.0)) throw DomainError("ball radius must be positive");
  if (mu.closed_form() && !mu.lattice() && mu.closed_form()->kind == ClosedForm::Kind::riesz)
    return std::pow(delta, mu.closed_form()->alpha);
  return ball_mass(mu, delta);
}

namespace {

// Calls visit(point, mass) for an 8^d product rule over every cell and
// cantor interval (masses sum to the piece's mass), and for every atom.
template <class V>
void visit_quadrature(const SpectralMeasure& mu, V&& visit) {
  const int d = mu.dim();
  for (const auto& a : mu.atoms()) visit(a.freq, a.mass, -1);
  const int q = 8;
  num::Rule unit = num::gauss_legendre(q, 0.0, 1.0);
  if (mu.density()) {
    const auto& g = *mu.density();
    for (std::size_t c = 0; c < g.size(); ++c) {
      if (g.masses[c] == 0.0) continue;
      if (d == 1) {
        const double a = g.cells[c][0] * g.step, b = a + g.step;
        for (int i = 0; i < q; ++i) {
          double x;
          if (g.power_alpha) {
            // u = sign(x)|x|^alpha is uniform under the profile.
            auto F = [&](double t) { return std::copysign(std::pow(std::abs(t), *g.power_alpha), t); };
            double u = F(a) + (F(b) - F(a)) * unit.x[i];
            x = std::copysign(std::pow(std::abs(u), 1.0 / *g.power_alpha), u);
          } else {
            x = a + g.step * unit.x[i];
          }
          visit(Point{x}, g.masses[c] * unit.w[i], static_cast<long>(c));
        }
        continue;
      }
      const long total = static_cast<long>(std::pow(q, d));
      Point x(d);
      for (long t = 0; t < total; ++t) {
        long r = t;
        double w = 1.0;
        for (int i = 0; i < d; ++i) {
          x[i] = (g.cells[c][i] + unit.x[r % q]) * g.step;
          w *= unit.w[r % q];
          r /= q;
        }
        visit(x, g.masses[c] * w, static_cast<long>(c));
      }
    }
  }
  if (mu.cantor()) {
    const auto& cr = *mu.cantor();
    for (const auto& iv : cr.intervals())
      for (int side : {1, -1})
        for (int i = 0; i < q; ++i)
          visit(Point{side * (iv.start + iv.width * unit.x[i])}, cr.weight * iv.mass * unit.w[i], -2);
  }
}

}  // namespace

double integrate_measure(const SpectralMeasure& mu, const std::function<double(const Point&)>& f) {
  double s = 0.0;
  visit_quadrature(mu, [&](const Point& x, double m, long) { s += m * f(x); });
  return s;
}

SpectralMeasure multiply_measure(const SpectralMeasure& mu, const std::function<double(const Point&)>& f) {
  SpectralMeasure out(mu.dim(), mu.lattice());
  std::vector<Atom> atoms;
  for (const auto& a : mu.atoms()) atoms.push_back({a.freq, a.mass * f(a.freq)});
  if (mu.density()) {
    DensityGrid g = *mu.density();
    std::vector<double> m(g.size(), 0.0);
    visit_quadrature(SpectralMeasure(mu.dim(), mu.lattice()).with_density(g),
                     [&](const Point& x, double w, long c) { m[c] += w * f(x); });
    g.masses = std::move(m);
    out = out.with_density(std::move(g));
  }
  if (mu.cantor()) {
    const auto& cr = *mu.cantor();
    for (const auto& iv : cr.intervals()) {
      const double c = iv.start + 0.5 * iv.width;
      for (int side : {1, -1}) {
        double avg = 0.0;
        num::Rule r = num::gauss_legendre(8, iv.start, iv.start + iv.width);
        for (int i = 0; i < 8; ++i) avg += r.w[i] * f(Point{side * r.x[i]});
        atoms.push_back({{side * c}, cr.weight * iv.mass * avg / iv.width});
      }
    }
  }
  return out.with_atoms(std::move(atoms)).with_recipe(mu.recipe().empty() ? "product" : "product:" + mu.recipe());
}

double integrate_radial(const SpectralMeasure& mu, const std::function<double(double)>& f) {
  if (mu.closed_form() && !mu.lattice() && mu.closed_form()->kind == ClosedForm::Kind::riesz) {
    const double alpha = mu.closed_form()->alpha;
    if (alpha == 0.0) return f(0.0);
    // u = r^alpha is uniform; u = t / (1 - t) maps [0, 1) onto [0, inf).
    return num::integrate(
        [&](double t) {
          if (t >= 1.0) return 0.0;
          double u = t / (1.0 - t);
          return f(std::pow(u, 1.0 / alpha)) / ((1.0 - t) * (1.0 - t));
        },
        0.0, 1.0, 1e-10);
  }
  return integrate_measure(mu, [&](const Point& x) {
    double r2 = 0.0;
    for (double v : x) r2 += v * v;
    return f(std::sqrt(r2));
  });
}

}  // namespace sgf
