#pragma once

#include "sgf/spectral/measure.hpp"

#include <string>
#include <utility>
#include <vector>

namespace sgf {

// Finite point set standing in for a compact domain. When cell_centered is
// set, each point is the center of a cube of side `spacing` and singular
// kernels are cell-averaged.
struct DiscreteDomain {
  int dim = 1;
  double spacing = 0.0;
  bool lattice = false;
  bool cell_centered = false;
  std::vector<Point> points;
  std::string descriptor;

  std::size_t size() const { return points.size(); }
  // Throws DomainError if empty, spacing <= 0, or two points coincide.
  void validate() const;
};

// Grid points of B(T) with spacing h. cell_centered: centers of the cells
// (k h, (k+1) h)^d shifted so that in d = 1 the cells tile [-T, T] exactly;
// otherwise the vertices k h (in d = 1 these include the endpoints +-T).
// In d = 1, h is adjusted down so that T/h is an integer.
DiscreteDomain ball_domain(int d, double T, double h, bool cell_centered);
// Z^d cap B(T).
DiscreteDomain lattice_ball(int d, double T);
DiscreteDomain point_domain(int d, std::vector<Point> points, double spacing,
                            std::string descriptor = "points");
// Union of closed intervals in d = 1, vertex grid with spacing h anchored at 0.
DiscreteDomain interval_union(const std::vector<std::pair<double, double>>& intervals, double h);
// Union of two domains with the same dimension (duplicates removed).
DiscreteDomain domain_union(const DiscreteDomain& a, const DiscreteDomain& b);
// Every point of `inner` is (within tol) a point of `outer`.
bool is_subdomain(const DiscreteDomain& inner, const DiscreteDomain& outer, double tol = 1e-9);

}  // namespace sgf
