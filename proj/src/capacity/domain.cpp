#include "sgf/capacity/domain.hpp"

#include "sgf/error.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace sgf {

namespace {

std::vector<long> key_of(const Point& p, double tol) {
  std::vector<long> k(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) k[i] = std::lround(p[i] / tol);
  return k;
}

// All integer vectors in [-n, n]^d, in lexicographic order.
template <class F>
void for_each_index(int d, long lo, long hi, F&& f) {
  std::vector<long> idx(d, lo);
  while (true) {
    f(idx);
    int j = d - 1;
    while (j >= 0 && ++idx[j] > hi) idx[j--] = lo;
    if (j < 0) break;
  }
}

}  // namespace

void DiscreteDomain::validate() const {
  if (points.empty()) throw DomainError("empty domain");
  if (!(spacing > 0.0)) throw DomainError("domain spacing must be positive");
  std::set<std::vector<long>> seen;
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != dim) throw DomainError("domain point has wrong dimension");
    if (!seen.insert(key_of(p, 1e-9 * spacing)).second) throw DomainError("domain points are not distinct");
  }
}

DiscreteDomain ball_domain(int d, double T, double h, bool cell_centered) {
  if (d < 1) throw DomainError("dimension must be >= 1");
  if (!(T > 0.0 && h > 0.0)) throw DomainError("ball radius and spacing must be positive");
  DiscreteDomain D;
  D.dim = d;
  D.cell_centered = cell_centered;
  std::ostringstream desc;
  desc << "ball(d=" << d << ",T=" << T;
  if (d == 1) {
    const long n = std::max(1L, static_cast<long>(std::ceil(T / h - 1e-9)));
    h = T / n;
    D.spacing = h;
    if (cell_centered) {
      for (long k = -n; k < n; ++k) D.points.push_back({(k + 0.5) * h});
    } else {
      for (long k = -n; k <= n; ++k) D.points.push_back({k * h});
    }
  } else {
    D.spacing = h;
    const long n = static_cast<long>(std::ceil(T / h)) + 1;
    const double T2 = T * T * (1.0 + 1e-12);
    for_each_index(d, -n, n, [&](const std::vector<long>& idx) {
      Point p(d);
      double r2 = 0.0;
      for (int j = 0; j < d; ++j) {
        p[j] = (cell_centered ? idx[j] + 0.5 : double(idx[j])) * h;
        r2 += p[j] * p[j];
      }
      if (r2 <= T2) D.points.push_back(std::move(p));
    });
  }
  desc << ",h=" << D.spacing << (cell_centered ? ",cells)" : ",vertices)");
  D.descriptor = desc.str();
  return D;
}

DiscreteDomain lattice_ball(int d, double T) {
  if (d < 1 || !(T >= 0.0)) throw DomainError("bad lattice ball");
  DiscreteDomain D;
  D.dim = d;
  D.spacing = 1.0;
  D.lattice = true;
  const long n = static_cast<long>(std::floor(T + 1e-12));
  const double T2 = T * T * (1.0 + 1e-12);
  for_each_index(d, -n, n, [&](const std::vector<long>& idx) {
    Point p(idx.begin(), idx.end());
    double r2 = 0.0;
    for (double v : p) r2 += v * v;
    if (r2 <= T2) D.points.push_back(std::move(p));
  });
  std::ostringstream desc;
  desc << "lattice_ball(d=" << d << ",T=" << T << ")";
  D.descriptor = desc.str();
  return D;
}

DiscreteDomain point_domain(int d, std::vector<Point> points, double spacing, std::string descriptor) {
  DiscreteDomain D;
  D.dim = d;
  D.spacing = spacing;
  D.points = std::move(points);
  D.descriptor = std::move(descriptor);
  D.validate();
  return D;
}

DiscreteDomain interval_union(const std::vector<std::pair<double, double>>& intervals, double h) {
  if (!(h > 0.0)) throw DomainError("spacing must be positive");
  std::set<long> ks;
  for (auto [a, b] : intervals) {
    if (b < a) throw DomainError("interval with b < a");
    for (long k = static_cast<long>(std::ceil(a / h - 1e-9)); k * h <= b + 1e-9 * h; ++k) ks.insert(k);
  }
  DiscreteDomain D;
  D.dim = 1;
  D.spacing = h;
  for (long k : ks) D.points.push_back({k * h});
  D.descriptor = "interval_union";
  D.validate();
  return D;
}

DiscreteDomain domain_union(const DiscreteDomain& a, const DiscreteDomain& b) {
  if (a.dim != b.dim) throw DomainError("domain dimensions differ");
  DiscreteDomain D = a;
  const double tol = 1e-9 * std::min(a.spacing, b.spacing);
  std::set<std::vector<long>> seen;
  for (const auto& p : a.points) seen.insert(key_of(p, tol));
  for (const auto& p : b.points)
    if (seen.insert(key_of(p, tol)).second) D.points.push_back(p);
  D.spacing = std::min(a.spacing, b.spacing);
  D.lattice = a.lattice && b.lattice;
  D.cell_centered = a.cell_centered && b.cell_centered;
  D.descriptor = a.descriptor + " u " + b.descriptor;
  return D;
}

bool is_subdomain(const DiscreteDomain& inner, const DiscreteDomain& outer, double tol) {
  if (inner.dim != outer.dim) return false;
  std::set<std::vector<long>> keys;
  for (const auto& p : outer.points) keys.insert(key_of(p, tol));
  for (const auto& p : inner.points)
    if (!keys.count(key_of(p, tol))) return false;
  return true;
}

}  // namespace sgf
