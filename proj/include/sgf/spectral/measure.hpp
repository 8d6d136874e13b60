#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace sgf {

using Point = std::vector<double>;

struct Atom {
  Point freq;
  double mass = 0.0;
};

// Piecewise-constant density on cells [k*step, (k+1)*step]^d. Cells are keyed
// by their lower-corner index, so the origin is always a cell vertex.
struct DensityGrid {
  double step = 0.0;
  std::vector<std::vector<long>> cells;
  std::vector<double> masses;
  // Within-cell profile |lambda|^(power_alpha - 1) instead of uniform; used
  // for exact partial-cell fractions of power-law densities in d = 1.
  std::optional<double> power_alpha;

  std::size_t size() const { return masses.size(); }
  double total() const;
};

// Dyadic Cantor-type set on [1, 2]: numbers 1 + sum_{j in J} b_j 2^-j.
// Stored symbolically; intervals are produced on demand at a given depth.
struct CantorRecipe {
  std::vector<int> J;  // sorted, distinct, >= 1
  int depth = 0;       // resolution m, <= 50
  double weight = 1.0; // one-sided total mass; the mirror carries the same

  struct Interval {
    std::uint64_t numerator;  // start = numerator / 2^depth
    double start;
    double width;
    double mass;
  };

  int branching() const;  // |J cap [depth]|
  // Positive-side intervals, each of mass weight * 2^-branching.
  std::vector<Interval> intervals() const;
};

// Closed-form identity of an untruncated measure (kernel known exactly).
struct ClosedForm {
  enum class Kind { riesz };
  Kind kind = Kind::riesz;
  double alpha = 0.0;
};

class SpectralMeasure {
 public:
  SpectralMeasure() = default;
  explicit SpectralMeasure(int dim, bool lattice = false);

  int dim() const { return dim_; }
  bool lattice() const { return lattice_; }

  const std::vector<Atom>& atoms() const { return atoms_; }
  const std::optional<DensityGrid>& density() const { return density_; }
  const std::optional<CantorRecipe>& cantor() const { return cantor_; }
  const std::optional<ClosedForm>& closed_form() const { return closed_; }
  const std::string& recipe() const { return recipe_; }

  // Builders return modified copies; a measure is immutable once shared.
  SpectralMeasure with_atom(Point freq, double mass) const;
  SpectralMeasure with_atoms(std::vector<Atom> atoms) const;
  // Adds (freq, mass) and its mirror (-freq, mass); a self-mirrored
  // frequency gets a single atom of the given mass.
  SpectralMeasure with_pair(Point freq, double mass) const;
  SpectralMeasure with_density(DensityGrid g) const;
  SpectralMeasure with_cantor(CantorRecipe c) const;
  SpectralMeasure with_closed_form(std::optional<ClosedForm> c) const;
  SpectralMeasure with_recipe(std::string r) const;
  SpectralMeasure scaled(double factor) const;
  // Sum of two measures with the same dimension and lattice flag. Density
  // grids must share their step; at most one cantor part.
  SpectralMeasure plus(const SpectralMeasure& other) const;

  double atom_mass() const;
  double ac_mass() const;  // m = ||mu_ac||
  double sc_mass() const;  // both sides
  double total_mass() const;
  bool empty() const { return total_mass() <= 0.0; }

  // Throws DomainError on negative masses or broken Hermitian symmetry.
  void validate(double tol = 1e-12) const;

 private:
  int dim_ = 1;
  bool lattice_ = false;
  std::vector<Atom> atoms_;
  std::optional<DensityGrid> density_;
  std::optional<CantorRecipe> cantor_;
  std::optional<ClosedForm> closed_;
  std::string recipe_;
};

struct RieszGridSpec {
  double step = 1.0 / 64.0;
  double extent = 8.0;  // cells cover [-extent, extent]^d
};

// A_{alpha,d} and B_{alpha,d}: density and kernel constants of the Riesz pair.
double riesz_A(double alpha, int d);
double riesz_B(double alpha, int d);

// Default grid per dimension: the d = 1 grid above, coarser in d >= 2 so the
// cell count stays near 10^5.
RieszGridSpec default_riesz_grid(int d);

// rho_alpha(lambda) = A |lambda|^{alpha-d} on the grid; alpha = 0 gives delta_0.
SpectralMeasure riesz_measure(double alpha, int d, const RieszGridSpec& grid);
SpectralMeasure riesz_measure(double alpha, int d);

// rho_alpha restricted to the torus [-1/2, 1/2) as a lattice spectral
// measure on Z (d = 1); total mass 2^{-alpha}. No closed form is attached.
SpectralMeasure riesz_torus_measure(double alpha, double step = 1.0 / 256.0);

// Exact mass of rho_alpha over the box prod [lo_i, hi_i] (box may touch the
// origin only at a vertex or face, never contain it in its interior).
double riesz_box_mass(double alpha, const Point& lo, const Point& hi);

// mu[B(delta)] (closed ball). On a lattice, frequencies live on the torus.
double ball_mass(const SpectralMeasure& mu, double delta);
// mu[u + B(delta)].
double shifted_ball_mass(const SpectralMeasure& mu, const Point& u, double delta);

// delta^alpha for measures carrying a Riesz closed form (any delta),
// otherwise ball_mass.
double exact_ball_mass(const SpectralMeasure& mu, double delta);

// integral of f d mu. Atoms exactly; density cells by an 8-point rule per
// axis under the cell profile (|lambda|^(alpha-1) in d = 1 when power_alpha
// is set, uniform otherwise); cantor intervals by the same uniform rule.
double integrate_measure(const SpectralMeasure& mu, const std::function<double(const Point&)>& f);

// integral of f(|lambda|) d mu; exact Riesz measures use their closed form
// d mu = alpha r^{alpha-1} dr, other measures integrate_measure.
double integrate_radial(const SpectralMeasure& mu, const std::function<double(double)>& f);

// The measure f mu for f >= 0: atoms reweighted, cells and cantor intervals
// by their f-average (cantor intervals become atoms at their midpoints with
// the averaged mass). The closed form is dropped.
SpectralMeasure multiply_measure(const SpectralMeasure& mu, const std::function<double(const Point&)>& f);

// Reduce a frequency to the torus [-1/2, 1/2)^d.
Point torus_reduce(Point freq);

}  // namespace sgf
