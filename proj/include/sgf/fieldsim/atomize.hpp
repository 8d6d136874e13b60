#pragma once

#include "sgf/spectral/kernel.hpp"
#include "sgf/spectral/measure.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sgf {

// One canonical frequency and its weight. A mirrored pair (lambda, -lambda)
// is stored once with the mass of each side; a self-conjugate frequency
// (the origin, or a half-integer corner of the torus) carries its full mass.
struct SpectralAtom {
  Point freq;
  double weight = 0.0;
  bool self_conjugate = false;
  std::uint64_t key = 0;  // stream key, a hash of the canonical frequency
};

struct AtomizedSpectrum {
  int dim = 1;
  bool lattice = false;
  std::vector<SpectralAtom> atoms;
  std::string source_hash;    // spectrum_hash of the measure it approximates
  std::string source_recipe;
  double resolution = 0.0;
  double displaced_mass = 0.0;       // mass moved to a midpoint
  double max_displacement = 0.0;     // largest distance moved
  double displacement_moment = 0.0;  // sum of mass * distance moved

  double total_mass() const;  // both sides of every pair
  std::size_t coefficient_count() const;  // one per self-conjugate atom, two per pair
  // Cov(f(x), f(x + lag)) of the synthesized field.
  double covariance(const Point& lag) const;
  // mass displaced * max displacement
  double displacement_bound() const { return displaced_mass * max_displacement; }
  // Bound on |K_atomized - K| for lags with |x| <= max_abs_x.
  double covariance_bias_bound(double max_abs_x) const;
};

// Density cells are split into subcells of side <= freq_resolution and each
// subcell becomes an atom at its midpoint (mass by the cell profile); cantor
// intervals become one atom per interval at its midpoint. Atoms of mu are
// kept exactly, and atoms at the same frequency are merged.
AtomizedSpectrum atomize(const SpectralMeasure& mu, double freq_resolution);

// Spectrum given directly by atoms (both mirrors may be listed or just one
// side; listed masses are per side).
AtomizedSpectrum atomic_spectrum(int dim, bool lattice, const std::vector<Atom>& per_side);

// Flat spectrum on the torus with N atoms at (k + 1/2) / N: the field on
// sites 0..N-1 of Z is i.i.d. standard Gaussian.
SpectralMeasure iid_lattice_measure(int N);

// K of the atomized spectrum.
Kernel atomized_kernel(const AtomizedSpectrum& s);

}  // namespace sgf
