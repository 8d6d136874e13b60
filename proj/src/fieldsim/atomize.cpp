#include "sgf/fieldsim/atomize.hpp"

#include "sgf/error.hpp"
#include "sgf/numerics.hpp"
#include "sgf/spectral/serialize.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace sgf {

namespace {

using FreqKey = std::vector<long long>;

FreqKey key_of(const Point& p) {
  FreqKey k(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) k[i] = std::llround(p[i] * 1e12);
  return k;
}

Point mirror(const Point& p, bool lattice) {
  Point q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[i] = -p[i];
  return lattice ? torus_reduce(std::move(q)) : q;
}

// Collects masses on canonical representatives. Masses are added per
// occurrence: an atom at lambda with mirror mass m at -lambda contributes
// m to each side of its pair.
class Accumulator {
 public:
  Accumulator(int dim, bool lattice) : dim_(dim), lattice_(lattice) {}

  void add(Point freq, double mass) {
    if (mass == 0.0) return;
    if (mass < 0.0) throw DomainError("negative spectral mass");
    if (lattice_) freq = torus_reduce(std::move(freq));
    Point mir = mirror(freq, lattice_);
    FreqKey k = key_of(freq), km = key_of(mir);
    const bool self = k == km;
    const bool canonical = self || km < k;
    const FreqKey& ck = canonical ? k : km;
    auto it = index_.find(ck);
    if (it == index_.end()) {
      SpectralAtom a;
      a.freq = canonical ? freq : mir;
      a.self_conjugate = self;
      std::uint64_t h = 0x5347464174u;
      for (long long v : ck) h = num::hash_combine(h, static_cast<std::uint64_t>(v));
      a.key = h;
      it = index_.emplace(ck, atoms_.size()).first;
      atoms_.push_back(a);
      both_sides_.push_back(0.0);
    }
    both_sides_[it->second] += mass;
  }

  std::vector<SpectralAtom> finish() {
    for (std::size_t i = 0; i < atoms_.size(); ++i)
      atoms_[i].weight = atoms_[i].self_conjugate ? both_sides_[i] : 0.5 * both_sides_[i];
    std::vector<SpectralAtom> out;
    for (auto& a : atoms_)
      if (a.weight > 0.0) out.push_back(a);
    return out;
  }

 private:
  int dim_;
  bool lattice_;
  std::map<FreqKey, std::size_t> index_;
  std::vector<SpectralAtom> atoms_;
  std::vector<double> both_sides_;
};

struct Displacement {
  double mass = 0.0, max = 0.0, moment = 0.0;
  void add(double m, double dist) {
    if (dist <= 0.0) return;
    mass += m;
    max = std::max(max, dist);
    moment += m * dist;
  }
};

void atomize_density(const DensityGrid& g, int dim, double resolution, Accumulator& acc, Displacement& disp) {
  const int n = std::max(1, static_cast<int>(std::ceil(g.step / resolution - 1e-9)));
  const double sub = g.step / n;
  const double radius = 0.5 * sub * std::sqrt(static_cast<double>(dim));
  for (std::size_t c = 0; c < g.size(); ++c) {
    const auto& cell = g.cells[c];
    const double mass = g.masses[c];
    if (mass == 0.0) continue;
    if (dim == 1 && g.power_alpha) {
      // Cell [a, b] on one side of the origin with density |lambda|^(alpha-1).
      const double alpha = *g.power_alpha;
      const double a = cell[0] * g.step, b = a + g.step;
      const double lo = std::min(std::abs(a), std::abs(b)), hi = std::max(std::abs(a), std::abs(b));
      const double sign = a < 0.0 ? -1.0 : 1.0;
      const double total = std::pow(hi, alpha) - std::pow(lo, alpha);
      for (int k = 0; k < n; ++k) {
        const double u0 = lo + k * sub, u1 = u0 + sub;
        const double m = mass * (std::pow(u1, alpha) - std::pow(u0, alpha)) / total;
        acc.add({sign * 0.5 * (u0 + u1)}, m);
        disp.add(m, radius);
      }
      continue;
    }
    const double m = mass / std::pow(static_cast<double>(n), dim);
    std::vector<int> idx(dim, 0);
    while (true) {
      Point p(dim);
      for (int i = 0; i < dim; ++i) p[i] = cell[i] * g.step + (idx[i] + 0.5) * sub;
      acc.add(std::move(p), m);
      disp.add(m, radius);
      int i = 0;
      while (i < dim && ++idx[i] == n) idx[i++] = 0;
      if (i == dim) break;
    }
  }
}

}  // namespace

double AtomizedSpectrum::total_mass() const {
  double s = 0.0;
  for (const auto& a : atoms) s += a.self_conjugate ? a.weight : 2.0 * a.weight;
  return s;
}

std::size_t AtomizedSpectrum::coefficient_count() const {
  std::size_t n = 0;
  for (const auto& a : atoms) n += a.self_conjugate ? 1 : 2;
  return n;
}

double AtomizedSpectrum::covariance(const Point& lag) const {
  if (static_cast<int>(lag.size()) != dim) throw DomainError("lag dimension mismatch");
  double s = 0.0;
  for (const auto& a : atoms) {
    double dot = 0.0;
    for (int i = 0; i < dim; ++i) dot += a.freq[i] * lag[i];
    s += (a.self_conjugate ? 1.0 : 2.0) * a.weight * std::cos(2.0 * num::pi * dot);
  }
  return s;
}

double AtomizedSpectrum::covariance_bias_bound(double max_abs_x) const {
  return 2.0 * num::pi * max_abs_x * displacement_moment;
}

AtomizedSpectrum atomize(const SpectralMeasure& mu, double freq_resolution) {
  if (!(freq_resolution > 0.0)) throw DomainError("frequency resolution must be positive");
  if (!std::isfinite(mu.total_mass())) throw DomainError("spectral measure must be finite");
  AtomizedSpectrum s;
  s.dim = mu.dim();
  s.lattice = mu.lattice();
  s.source_hash = spectrum_hash(mu);
  s.source_recipe = mu.recipe();
  s.resolution = freq_resolution;
  Accumulator acc(s.dim, s.lattice);
  Displacement disp;
  for (const auto& a : mu.atoms()) acc.add(a.freq, a.mass);
  if (mu.density()) atomize_density(*mu.density(), s.dim, freq_resolution, acc, disp);
  if (mu.cantor()) {
    for (const auto& iv : mu.cantor()->intervals()) {
      const double mid = iv.start + 0.5 * iv.width;
      acc.add({mid}, iv.mass * mu.cantor()->weight);
      acc.add({-mid}, iv.mass * mu.cantor()->weight);
      disp.add(2.0 * iv.mass * mu.cantor()->weight, 0.5 * iv.width);
    }
  }
  s.atoms = acc.finish();
  s.displaced_mass = disp.mass;
  s.max_displacement = disp.max;
  s.displacement_moment = disp.moment;
  return s;
}

AtomizedSpectrum atomic_spectrum(int dim, bool lattice, const std::vector<Atom>& per_side) {
  SpectralMeasure mu(dim, lattice);
  std::map<FreqKey, bool> seen;
  for (const auto& a : per_side) {
    Point f = lattice ? torus_reduce(a.freq) : a.freq;
    FreqKey k = key_of(f), km = key_of(mirror(f, lattice));
    if (k == km) {
      mu = mu.with_atom(f, a.mass);
    } else if (!seen.count(km)) {
      mu = mu.with_pair(f, a.mass);
      seen[k] = true;
    }
  }
  return atomize(mu, 1.0);
}

SpectralMeasure iid_lattice_measure(int N) {
  if (N < 1) throw DomainError("N must be positive");
  SpectralMeasure mu(1, true);
  for (int k = 0; k < N; ++k) mu = mu.with_atom({(k + 0.5) / N - 0.5}, 1.0 / N);
  return mu.with_recipe("iid_lattice(N=" + std::to_string(N) + ")");
}

Kernel atomized_kernel(const AtomizedSpectrum& s) {
  auto atoms = s.atoms;
  const int dim = s.dim;
  return Kernel(
      dim,
      [atoms, dim](const Point& x) {
        double v = 0.0;
        for (const auto& a : atoms) {
          double dot = 0.0;
          for (int i = 0; i < dim; ++i) dot += a.freq[i] * x[i];
          v += (a.self_conjugate ? 1.0 : 2.0) * a.weight * std::cos(2.0 * num::pi * dot);
        }
        return v;
      },
      "atomized(" + s.source_hash + ")");
}

}  // namespace sgf
