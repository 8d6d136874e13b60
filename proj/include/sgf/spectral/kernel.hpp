#pragma once

#include "sgf/spectral/measure.hpp"

#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace sgf {

// Covariance kernel K(x) on R^d (or Z^d). Value type; cheap to copy.
class Kernel {
 public:
  using Eval = std::function<double(const Point&)>;
  // Mean of K(x - y) over x, y uniform in a cube of side h (singular kernels).
  using CellSelfEnergy = std::function<double(double h)>;

  Kernel() = default;
  Kernel(int dim, Eval eval, std::string tag);

  int dim() const { return dim_; }
  const std::string& tag() const { return tag_; }
  double operator()(const Point& x) const { return eval_(x); }
  double at(double x) const;  // d = 1 convenience
  double origin() const;      // K(0); +inf when singular

  bool singular() const { return static_cast<bool>(cell_self_); }
  double cell_self_energy(double h) const;

  // Closed-form radial profile, when the kernel is isotropic and analytic.
  std::optional<double> riesz_alpha() const { return riesz_alpha_; }
  double scale() const { return scale_; }

  Kernel with_cell_self_energy(CellSelfEnergy f) const;
  Kernel with_riesz(double alpha, double scale) const;

 private:
  int dim_ = 1;
  Eval eval_;
  CellSelfEnergy cell_self_;
  std::string tag_;
  std::optional<double> riesz_alpha_;
  double scale_ = 1.0;
};

// k_alpha(x) = B_{alpha,d} |x|^{-alpha}; alpha = 0 gives K = 1.
Kernel riesz_kernel(double alpha, int d, double scale = 1.0);
Kernel exponential_kernel(double length, int d, double variance = 1.0);
// K = Fourier transform of mu (atoms exact, cells and cantor intervals by
// exact integration of the piecewise-constant model).
Kernel measure_kernel(const SpectralMeasure& mu);
// Closed form when mu carries one, otherwise measure_kernel.
Kernel kernel_of(const SpectralMeasure& mu);

struct KernelGridSpec {
  double step = 1.0 / 16.0;
  double extent = 8.0;
};

// K tabulated along the first axis at x = k*step, |x| <= extent.
struct KernelTable {
  int dim = 1;
  double step = 0.0;
  double extent = 0.0;
  std::vector<double> values;  // index k + n for x = k*step, k in [-n, n]
  std::string closed_form;     // empty unless analytic
  Kernel kernel;               // full evaluator, for lags off the axis

  long half_size() const { return static_cast<long>(values.size() / 2); }
  double x_at(std::size_t i) const { return (static_cast<long>(i) - half_size()) * step; }
  double origin() const { return values[half_size()]; }
  // Value at a lag on the table (first axis only in d = 1). Throws ExtentError.
  double lookup(const Point& lag) const;
};

KernelTable kernel_from_measure(const SpectralMeasure& mu, const KernelGridSpec& grid = {});
KernelTable tabulate(const Kernel& k, const KernelGridSpec& grid, int dim);

void write_kernel_csv(std::ostream& os, const KernelTable& table);

}  // namespace sgf
