#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "swk/geometry.hpp"

using namespace swk;

TEST_CASE("theta density basics") {
  CHECK_THROWS_AS(theta_density(1, 16), DimensionError);
  CHECK_THROWS_AS(theta_density(0, 32), ArgumentError);
  CHECK(theta_tail_bound(1) < 1e-14);
  auto f = theta_density(1, 32);
  CHECK(f.density.minCoeff() >= 0);
  CHECK(f.curvature_coeff == doctest::Approx(-kTwoPi));
  CHECK(f.degree_integral == doctest::Approx(1).epsilon(1e-12));
  REQUIRE(f.zeros.size() == 1);
  CHECK(f.zeros[0].first == 0.5);
  CHECK(f.zeros[0].second == 0.5);
  auto f2 = theta_density(2, 32);
  REQUIRE(f2.zeros.size() == 2);
  CHECK(f2.zeros[0].first == 0.25);
  CHECK(f2.zeros[1].first == 0.75);
  CHECK(f2.zeros[0].second == 0.5);
  CHECK(f2.degree_integral == doctest::Approx(2).epsilon(1e-12));
  auto f3 = theta_density(3, 64);
  CHECK(f3.zeros.size() == 3);
}

TEST_CASE("theta density zeros and periodicity against the series") {
  for (int d = 1; d <= 3; ++d) {
    for (int k = 0; k < d; ++k) CHECK(theta_density_at(d, (2.0 * k + 1) / (2 * d), 0.5) < 1e-28);
    double worst = 0;
    for (int i = 0; i < 20; ++i) {
      double x = 0.037 * i + 0.01, y = 0.049 * i + 0.003;
      double w = theta_density_at(d, x, y);
      worst = std::max(worst, std::abs(theta_density_at(d, x + 1, y) - w));
      worst = std::max(worst, std::abs(theta_density_at(d, x, y + 1) - w));
    }
    CHECK(worst <= 1e-12);
  }
}

TEST_CASE("curvature of the theta metric") {
  for (int d : {1, 2, 3}) {
    auto f = theta_density(d, 128);
    CHECK(f.holomorphy_certificate < 1e-6);
  }
}

TEST_CASE("dihedral invariance") {
  CHECK(dihedral_invariant(1, 16));
  CHECK(dihedral_invariant(1, 12));
  CHECK(dihedral_invariant(0, 12));
  CHECK_FALSE(dihedral_invariant(2, 16));
}

TEST_CASE("product bundles") {
  auto t = trivial_factor(32);
  auto triv = product_bundle({t, t});
  CHECK((triv.density.values - 1).abs().maxCoeff() == 0);
  CHECK(constant_curvature_slope(triv.ref_curvature_coeffs) == 0);

  auto a = theta_density(1, 32), b = theta_density(2, 32);
  auto pb = product_bundle({a, b});
  double worst = 0;
  for (int p = 0; p < 32 * 32 * 32 * 32; p += 97) {
    int i1 = p / (32 * 32 * 32), j1 = (p / (32 * 32)) % 32, i2 = (p / 32) % 32, j2 = p % 32;
    worst = std::max(worst, std::abs(pb.density.values[p] - a.density[i1 * 32 + j1] * b.density[i2 * 32 + j2]));
  }
  CHECK(worst <= 1e-15);
  CHECK_THROWS_AS(constant_curvature_slope(pb.ref_curvature_coeffs), ConditionError);
  CHECK_THROWS_AS(product_bundle({a, theta_density(1, 64)}), DimensionError);

  auto c = theta_density(1, 32);
  auto p3 = product_density(*TorusGrid::cube(3, 8), {1, 1, 1});
  CHECK(p3.minCoeff() < 1e-28);
  CHECK(constant_curvature_slope({-kTwoPi, -kTwoPi, -kTwoPi}) == doctest::Approx(1));
  CHECK_THROWS_AS(constant_curvature_slope({-kTwoPi, -2 * kTwoPi, -kTwoPi}), ConditionError);
  CHECK_THROWS_AS(product_density(*SymmetricProductGrid::make(2, 16), {1, 2}), ValidationError);
  (void)c;
}

TEST_CASE("background potential") {
  auto g = TorusGrid::cube(2, 16);
  auto triv = background_potential(constant_curvature_form(g, {0, 0}));
  CHECK(triv.a0 == 0);
  CHECK(triv.f0.sup() == 0);

  auto th = background_potential(constant_curvature_form(g, {-2 * kTwoPi, -2 * kTwoPi}));
  CHECK(th.a0 == doctest::Approx(2).epsilon(1e-12));
  CHECK(th.f0.sup() < 1e-14);

  // Injected potential.
  ScalarField inj(g, g->sample([](auto& x) {
    return 0.3 * std::cos(kTwoPi * (x[0] + 2 * x[3])) + 0.1 * std::sin(kTwoPi * x[1]) * std::cos(kTwoPi * x[2]);
  }));
  auto F = constant_curvature_form(g, {-kTwoPi, -kTwoPi});
  auto h = ddbar_scalar(inj);
  for (auto& [key, v] : F.coeffs) v += 4.0 * h.at(key.first, key.second);
  auto bp = background_potential(F);
  CHECK(bp.a0 == doctest::Approx(1).epsilon(1e-12));
  CHECK((bp.f0.values - inj.values).abs().maxCoeff() <= 1e-10);
  CHECK(bp.residual <= 1e-10);

  CHECK_THROWS_AS(background_potential(constant_curvature_form(g, {-kTwoPi, -2 * kTwoPi})), ConditionError);
}
