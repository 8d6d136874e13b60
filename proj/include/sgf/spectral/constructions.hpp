#pragma once

#include "sgf/spectral/measure.hpp"
#include "sgf/spectral/truncation.hpp"

#include <vector>

namespace sgf {

// J = union of [s_1, s_2], [s_3, s_4], ...; an odd-length sequence leaves
// the last block open up to `depth`.
std::vector<int> cantor_index_set(const std::vector<int>& s_sequence, int depth);

struct CantorOptions {
  double alpha = 0.5;          // rho_alpha on [-1, 1]
  double riesz_step = 1.0 / 64.0;
  bool include_riesz = true;
};

// rho_alpha restricted to [-1, 1] plus the symmetrized Cantor measure on
// [-2,-1] u [1,2] (total sc mass 1).
SpectralMeasure cantor_measure(const std::vector<int>& s_sequence, int depth,
                               const CantorOptions& opt = {});
SpectralMeasure cantor_measure_from_index_set(std::vector<int> J, int depth,
                                              const CantorOptions& opt = {});

struct IrregularMeasure {
  SpectralMeasure measure;
  std::vector<double> scales;  // T_0 = 1, T_1, ...
  std::vector<double> level_mass;  // ||mu'_i|| before normalization
  double normalizer = 0.0;         // ||mu'||
  double epsilon = 0.0;
};

// Atoms at odd multiples of 1/T_i with weights T_i^-alpha |k|^{alpha-1}
// zeta(T_{i-1} k / (T_i eps)), plus 1/2 delta_{+-1}; normalized to mass 1.
IrregularMeasure irregular_measure(double alpha, double epsilon, const std::vector<int>& ratios,
                                   const TruncationPair& truncation);
IrregularMeasure irregular_measure(double alpha, double epsilon, const std::vector<int>& ratios);

}  // namespace sgf
