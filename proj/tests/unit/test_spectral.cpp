#include <doctest.h>

#include "sgf/error.hpp"
#include "sgf/numerics.hpp"
#include "sgf/spectral/constructions.hpp"
#include "sgf/spectral/diagnostics.hpp"
#include "sgf/spectral/kernel.hpp"
#include "sgf/spectral/measure.hpp"
#include "sgf/spectral/poisson.hpp"
#include "sgf/spectral/serialize.hpp"
#include "sgf/spectral/tauberian.hpp"
#include "sgf/spectral/truncation.hpp"

#include <cmath>
#include <set>
#include <sstream>

using namespace sgf;
using doctest::Approx;

namespace {

const TruncationPair& pair_half() {
  static const TruncationPair p = build_truncation(0.5);
  return p;
}

SpectralMeasure uniform_density(double half_width, double step) {
  DensityGrid g;
  g.step = step;
  const long n = std::lround(half_width / step);
  for (long k = -n; k < n; ++k) {
    g.cells.push_back({k});
    g.masses.push_back(step / (2.0 * half_width));
  }
  return SpectralMeasure(1).with_density(g);
}

}  // namespace

TEST_CASE("riesz measure masses") {
  SUBCASE("alpha zero is a unit atom at the origin") {
    auto mu = riesz_measure(0.0, 1);
    REQUIRE(mu.atoms().size() == 1);
    CHECK(mu.atoms()[0].freq[0] == 0.0);
    CHECK(mu.atoms()[0].mass == 1.0);
    CHECK(mu.ac_mass() == 0.0);
  }
  SUBCASE("ball masses follow delta^alpha at cell boundaries and inside cells") {
    auto mu = riesz_measure(0.5, 1);
    CHECK(ball_mass(mu, 1.0) == Approx(1.0).epsilon(1e-13));
    CHECK(ball_mass(mu, 0.25) == Approx(0.5).epsilon(1e-13));
    CHECK(ball_mass(mu, 1.0 / 9.0) == Approx(1.0 / 3.0).epsilon(1e-13));
  }
  SUBCASE("d = 2 cells integrate the density exactly on aligned squares") {
    auto mu = riesz_measure(1.0, 2, {1.0 / 8.0, 1.0});
    // The whole grid is the square [-1, 1]^2; its mass by direct polar
    // integration: A * integral over the square of |x|^{alpha-2}.
    const double A = riesz_A(1.0, 2);
    const double oracle = 8.0 * A * num::integrate([](double th) { return 1.0 / std::cos(th); }, 0.0, num::pi / 4, 1e-13);
    CHECK(mu.ac_mass() == Approx(oracle).epsilon(1e-8));
  }
  SUBCASE("alpha outside [0, d) is a domain error") {
    CHECK_THROWS_AS(riesz_measure(1.0, 1), DomainError);
    CHECK_THROWS_AS(riesz_measure(-0.1, 2), DomainError);
  }
  SUBCASE("constants") {
    CHECK(riesz_B(0.5, 1) == Approx(0.25).epsilon(1e-14));
    CHECK(riesz_B(1.0, 3) == Approx(0.25 / num::pi * num::pi).epsilon(1e-14));
    CHECK(riesz_B(0.0, 4) == Approx(1.0));
  }
  SUBCASE("every construction passes the symmetry validation") {
    CHECK_NOTHROW(riesz_measure(0.5, 1).validate());
    CHECK_NOTHROW(riesz_measure(1.0, 2, {1.0 / 8.0, 1.0}).validate());
    CHECK_NOTHROW(cantor_measure_from_index_set({1, 3}, 6).validate());
    CHECK_NOTHROW(irregular_measure(0.5, 0.9, {3, 5}, pair_half()).measure.validate());
    auto broken = SpectralMeasure(1).with_atom({0.3}, 1.0);
    CHECK_THROWS_AS(broken.validate(), DomainError);
  }
}

TEST_CASE("kernel from measure") {
  SUBCASE("delta at the origin gives a constant kernel") {
    auto t = kernel_from_measure(SpectralMeasure(1).with_atom({0.0}, 1.0));
    for (double v : t.values) CHECK(v == Approx(1.0));
  }
  SUBCASE("a symmetric pair gives a cosine") {
    auto t = kernel_from_measure(SpectralMeasure(1).with_pair({1.0}, 0.5));
    for (std::size_t i = 0; i < t.values.size(); ++i)
      CHECK(t.values[i] == Approx(std::cos(2.0 * num::pi * t.x_at(i))).epsilon(1e-12));
    CHECK(t.origin() == Approx(1.0));
  }
  SUBCASE("uniform density on [-1, 1] against a 10x finer midpoint rule") {
    auto mu = uniform_density(1.0, 1.0 / 64.0);
    auto K = measure_kernel(mu);
    for (double x : {0.5, 0.3, 1.7}) {
      const int n = 1280;
      double oracle = 0.0;
      for (int i = 0; i < n; ++i) {
        double lam = -1.0 + (i + 0.5) * 2.0 / n;
        oracle += 0.5 * (2.0 / n) * std::cos(2.0 * num::pi * lam * x);
      }
      CHECK(K.at(x) == Approx(oracle).epsilon(1e-5).scale(1.0));
    }
    // frozen: sin(0.6 pi) / (0.6 pi)
    CHECK(K.at(0.3) == Approx(0.504551152427104683).epsilon(1e-12));
    CHECK(std::abs(K.at(0.5)) < 1e-12);
  }
  SUBCASE("table symmetry, K(0) equals the total mass, psd on a point set") {
    auto mu = riesz_measure(0.5, 1, {1.0 / 16.0, 4.0});
    auto t = kernel_from_measure(mu, {1.0 / 8.0, 4.0});
    CHECK(t.origin() == Approx(mu.total_mass()).epsilon(1e-12));
    for (long i = 0; i < t.half_size(); ++i) CHECK(t.values[i] == t.values[t.values.size() - 1 - i]);
    CHECK_THROWS_AS(t.lookup({5.0}), ExtentError);
  }
  SUBCASE("empty measure is degenerate") {
    CHECK_THROWS_AS(kernel_from_measure(SpectralMeasure(1)), DegenerateFieldError);
  }
  SUBCASE("csv export") {
    std::ostringstream os;
    write_kernel_csv(os, kernel_from_measure(SpectralMeasure(1).with_atom({0.0}, 2.0), {0.5, 1.0}));
    CHECK(os.str().rfind("x,K\n", 0) == 0);
    CHECK(os.str().find("-1,2\n") != std::string::npos);
  }
}

TEST_CASE("truncation pair") {
  const auto& p = pair_half();
  CHECK(p.zeta(0.0) == Approx(1.0).epsilon(1e-14));
  CHECK(p.xi_profile(0.0) == Approx(1.0).epsilon(1e-14));
  CHECK(p.xi(1.0) == 0.0);
  CHECK(p.xi(1.5) == 0.0);
  CHECK(p.xi(0.5) > 0.0);
  SUBCASE("transform is positive and obeys the certified decay bound") {
    for (double x = 0.0; x <= p.resolved_range(); x += 0.37) {
      CHECK(p.zeta(x) > 0.0);
      CHECK(p.zeta(x) <= p.decay_constant() * std::exp(-std::sqrt(x)) * (1.0 + 1e-12));
    }
    CHECK(p.decay_constant() < 10.0);
    CHECK(p.resolved_range() > 40.0);
  }
  SUBCASE("xi integrates to zeta(0)") {
    double integral = 2.0 * num::integrate([&](double r) { return p.xi(r); }, 0.0, 1.0, 1e-10);
    CHECK(integral == Approx(1.0).epsilon(1e-8));
    CHECK(p.kappa() < 1.0);
  }
  SUBCASE("interpolated transform matches the direct one") {
    for (double x : {0.0, 0.3, 1.7, 5.2, 13.9, 30.1})
      CHECK(p.zeta_fast(x) == Approx(p.zeta(x)).epsilon(1e-6));
  }
  SUBCASE("transform of phi_s is supported in B(s/2) up to tiny tail mass") {
    CHECK(p.phi_tail_mass(8.0) < 1e-6);
    // Inside the support the transform carries the unit mass.
    double inside = 2.0 * num::integrate([&](double x) { return p.phi_transform(8.0, x); }, 0.0, 4.0, 1e-8);
    CHECK(inside == Approx(1.0).epsilon(1e-6));
  }
  SUBCASE("construction errors") {
    CHECK_THROWS_AS(build_truncation(0.0), DomainError);
    CHECK_THROWS_AS(build_truncation(1.0), DomainError);
    // The transform decays like exp(-c sqrt(x)); exponent 0.9 cannot be certified.
    CHECK_THROWS_AS(build_truncation(0.9), ConstructionError);
  }
}

TEST_CASE("poisson summation") {
  SampledFunction gauss{[](double x) { return num::normal_pdf(x); }, 12.0,
                        [](double l) { return std::exp(-2.0 * num::pi * num::pi * l * l); }};
  std::vector<double> lam;
  for (int i = 0; i <= 20; ++i) lam.push_back(-1.0 + 0.1 * i);
  SUBCASE("gaussian, t = 1") {
    auto r = periodize_and_discretize(gauss, 1.0, lam);
    CHECK(r.residual < 1e-8);
    CHECK(r.converged);
    CHECK_FALSE(r.truncation_warning);
  }
  SUBCASE("numeric transform gives the same identity") {
    SampledFunction g2 = gauss;
    g2.transform = nullptr;
    auto r = periodize_and_discretize(g2, 0.5, lam);
    CHECK(r.residual < 1e-8);
  }
  SUBCASE("no aliasing when the support fits in one period") {
    auto h = [](double x) { return std::abs(x) < 0.4 ? 1.0 - std::abs(x) / 0.4 : 0.0; };
    for (double x : {-0.3, 0.0, 0.1, 0.35}) CHECK(periodize(h, 1.0, x, 0.4) == Approx(h(x)));
  }
  SUBCASE("alternating-sum identity, T = 4") {
    auto r = alternating_identity(gauss, 4.0, lam);
    CHECK(r.residual < 1e-8);
  }
  SUBCASE("short support triggers the truncation warning") {
    SampledFunction cut{[](double x) { return num::normal_pdf(x); }, 2.0, nullptr};
    auto r = periodize_and_discretize(cut, 1.0, {0.0, 0.3});
    CHECK(r.truncation_warning);
    CHECK_FALSE(r.converged);
  }
}

TEST_CASE("ball masses") {
  CHECK(ball_mass(SpectralMeasure(2).with_atom({0.0, 0.0}, 1.0), 1e-6) == 1.0);
  CHECK(ball_mass(SpectralMeasure(1).with_atom({0.0}, 1.0), 3.0) == 1.0);
  SUBCASE("cantor interval [1, 1.25] carries a quarter of the one-sided mass") {
    CantorOptions opt;
    opt.include_riesz = false;
    auto mu = cantor_measure_from_index_set({1, 2}, 4, opt);
    CHECK(mu.sc_mass() == Approx(1.0));
    CHECK(shifted_ball_mass(mu, {1.125}, 0.125) == Approx(0.25 * 0.5).epsilon(1e-14));
    CHECK(shifted_ball_mass(mu, {-1.125}, 0.125) == Approx(0.25 * 0.5).epsilon(1e-14));
  }
  SUBCASE("torus balls wrap around") {
    auto mu = SpectralMeasure(1, true).with_pair({0.49}, 0.5);
    CHECK(shifted_ball_mass(mu, {-0.5}, 0.02) == Approx(1.0));
    CHECK_THROWS_AS(shifted_ball_mass(mu, {0.0}, 0.5), DomainError);
  }
}

TEST_CASE("singularity diagnostics") {
  SUBCASE("exact power law") {
    auto r = diagnostics(riesz_measure(0.5, 1), {1.0, 8});
    CHECK(r.profile.alpha_hat == Approx(0.5).epsilon(0.01));
    CHECK(r.doubling_const == Approx(std::sqrt(2.0)).epsilon(1e-10));
    CHECK(r.profile.lower_slope <= r.profile.alpha_hat + 1e-12);
    CHECK(r.profile.upper_slope >= r.profile.alpha_hat - 1e-12);
  }
  SUBCASE("off-origin atoms break origin dominance") {
    auto mu = SpectralMeasure(1).with_pair({1.0}, 0.5).plus(riesz_measure(0.5, 1, {1.0 / 256.0, 2.0}).scaled(1e-3));
    auto r = diagnostics(mu, {0.25, 5});
    // sup_u mu[u + B(delta)] >= 1/2 while mu[B(delta)] ~ 1e-3 sqrt(delta).
    for (std::size_t i = 1; i < r.dominance_by_delta.size(); ++i)
      CHECK(r.dominance_by_delta[i] > r.dominance_by_delta[i - 1]);
    CHECK(r.origin_dominance_const > 1e3);
  }
  SUBCASE("range below the grid resolution") {
    auto mu = riesz_measure(1.0, 2, {1.0 / 8.0, 1.0});
    CHECK_THROWS_AS(diagnostics(mu, {1.0, 6}), ResolutionError);
  }
}

TEST_CASE("cantor construction") {
  SUBCASE("no branching: one interval of full mass") {
    CantorRecipe c{{5, 6}, 3, 1.0};
    auto iv = c.intervals();
    REQUIRE(iv.size() == 1);
    CHECK(iv[0].start == 1.0);
    CHECK(iv[0].width == 0.125);
    CHECK(iv[0].mass == 1.0);
  }
  SUBCASE("J = {1, 2}, m = 2: four quarter intervals") {
    CantorRecipe c{{1, 2}, 2, 1.0};
    auto iv = c.intervals();
    REQUIRE(iv.size() == 4);
    for (const auto& i : iv) CHECK(i.mass == 0.25);
  }
  SUBCASE("interval starts match brute-force enumeration") {
    for (std::vector<int> J : {std::vector<int>{1}, std::vector<int>{1, 3}, std::vector<int>{2, 3, 5}}) {
      const int m = 5;
      std::set<double> brute;
      const int k = static_cast<int>(J.size());
      for (int bits = 0; bits < (1 << k); ++bits) {
        double x = 1.0;
        for (int j = 0; j < k; ++j)
          if (bits >> j & 1) x += std::ldexp(1.0, -J[j]);
        brute.insert(x);
      }
      CantorRecipe c{J, m, 1.0};
      std::set<double> got;
      for (const auto& i : c.intervals()) {
        got.insert(i.start);
        CHECK(i.mass == std::ldexp(1.0, -k));
      }
      CHECK(got == brute);
    }
    CantorRecipe c{{1}, 3, 1.0};
    auto iv = c.intervals();
    REQUIRE(iv.size() == 2);
    CHECK(iv[0].start == 1.0);
    CHECK(iv[1].start == 1.5);
  }
  SUBCASE("block sequence and depth limits") {
    CHECK(cantor_index_set({1, 2, 4, 5}, 10) == std::vector<int>{1, 2, 4, 5});
    CHECK(cantor_index_set({2, 3, 6}, 8) == std::vector<int>{2, 3, 6, 7, 8});
    CHECK_THROWS(cantor_index_set({3, 2}, 5));
    CHECK_THROWS(CantorRecipe({1}, 51, 1.0).intervals());
    CHECK_THROWS(cantor_measure({1, 2}, 51));
  }
}

TEST_CASE("irregular construction") {
  const auto& p = pair_half();
  SUBCASE("atoms of the first level sit at odd multiples of 1/3") {
    auto m = irregular_measure(0.5, 0.9, {3}, p);
    std::set<long> thirds;
    for (const auto& a : m.measure.atoms()) {
      double k = a.freq[0] * 3.0;
      CHECK(std::abs(k - std::round(k)) < 1e-12);
      CHECK(std::lround(std::abs(k)) % 2 == 1);
      thirds.insert(std::lround(k));
    }
    for (long k : {-5, -3, -1, 1, 3, 5}) CHECK(thirds.count(k) == 1);
    CHECK(m.measure.total_mass() == Approx(1.0).epsilon(1e-13));
  }
  SUBCASE("power-law ball masses over the constructed range") {
    auto m = irregular_measure(0.5, 0.9, {3, 5}, p);
    double lo = 1e300, hi = 0.0;
    for (double delta = 1.0 / 15.0; delta <= 1.0 + 1e-12; delta *= 1.05) {
      double q = ball_mass(m.measure, delta) / std::sqrt(delta);
      lo = std::min(lo, q);
      hi = std::max(hi, q);
    }
    CHECK(lo > 0.0);
    CHECK(hi / lo < 20.0);
  }
  SUBCASE("ratios must be odd and at least three") {
    CHECK_THROWS_AS(irregular_measure(0.5, 0.9, {4}, p), ConstructionError);
    CHECK_THROWS_AS(irregular_measure(0.5, 0.9, {1}, p), ConstructionError);
  }
}

TEST_CASE("tauberian check") {
  SUBCASE("exact riesz kernel gives ratio one") {
    TauberianInput in;
    in.f = [](double x) { return riesz_B(0.5, 1) * std::pow(x, -0.5); };
    for (const auto& row : tauberian_check(in, {4, 16, 64})) CHECK(row.ratio == Approx(1.0).epsilon(1e-6));
  }
  SUBCASE("exponential kernel is rejected") {
    TauberianInput in;
    in.f = [](double x) { return std::exp(-x); };
    CHECK_THROWS_AS(tauberian_check(in, {16, 64}), HypothesisError);
  }
  SUBCASE("shifted power kernel against an oscillatory quadrature oracle") {
    // mu[B(1/T)] for K = (1 + |x|)^{-1/2}, computed offline with
    // arbitrary-precision oscillatory quadrature.
    const double oracle16 = 0.620967068237035065, oracle64 = 0.390976553932566690;
    auto K = [](double x) { return 1.0 / std::sqrt(1.0 + x); };
    CHECK(ball_mass_from_kernel(K, 1, 1.0 / 16.0) == Approx(oracle16).epsilon(1e-7));
    CHECK(ball_mass_from_kernel(K, 1, 1.0 / 64.0) == Approx(oracle64).epsilon(1e-7));
  }
  SUBCASE("density form") {
    TauberianInput in;
    in.form = TauberianInput::Form::density;
    in.f = [](double l) { return riesz_A(0.5, 1) * std::pow(l, -0.5); };
    for (const auto& row : tauberian_check(in, {4, 64})) CHECK(row.ratio == Approx(1.0).epsilon(1e-6));
  }
}

TEST_CASE("measure serialization") {
  auto mu = riesz_measure(0.5, 1, {1.0 / 8.0, 2.0})
                .plus(SpectralMeasure(1).with_atom({0.0}, 0.25))
                .plus(cantor_measure_from_index_set({1, 2}, 3, {0.5, 1.0 / 8.0, false}));
  auto j = measure_to_json(mu);
  auto back = measure_from_json(j);
  CHECK(spectrum_hash(back) == spectrum_hash(mu));
  CHECK(back.total_mass() == Approx(mu.total_mass()).epsilon(1e-15));
  CHECK(spectrum_hash(mu).size() == 16);
  CHECK(spectrum_hash(mu.scaled(2.0)) != spectrum_hash(mu));
  j["schema_version"] = 99;
  CHECK_THROWS_AS(measure_from_json(j), DomainError);
}
