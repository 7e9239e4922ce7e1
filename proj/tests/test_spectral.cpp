#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <random>

#include "swk/spectral.hpp"

using namespace swk;

namespace {

// Random real trigonometric polynomial with |k| <= kmax per axis.
Array band_limited(const TorusGrid& g, std::mt19937_64& rng, int kmax, int terms) {
  std::uniform_int_distribution<int> kd(-kmax, kmax);
  std::uniform_real_distribution<double> ad(-1, 1);
  std::vector<std::vector<int>> ks;
  std::vector<double> amp, phase;
  for (int t = 0; t < terms; ++t) {
    std::vector<int> k(std::size_t(g.axes()));
    for (auto& v : k) v = kd(rng);
    ks.push_back(k);
    amp.push_back(ad(rng));
    phase.push_back(kPi * ad(rng));
  }
  return g.sample([&](const std::vector<double>& x) {
    double s = 0;
    for (std::size_t t = 0; t < ks.size(); ++t) {
      double arg = phase[t];
      for (std::size_t a = 0; a < x.size(); ++a) arg += kTwoPi * ks[t][a] * x[a];
      s += amp[t] * std::cos(arg);
    }
    return s;
  });
}

double sup(const Array& a) { return a.abs().maxCoeff(); }

}  // namespace

TEST_CASE("grid construction") {
  CHECK_THROWS_AS(TorusGrid({6, 8}), DimensionError);
  CHECK_THROWS_AS(TorusGrid({8, 9}), DimensionError);
  CHECK_THROWS_AS(TorusGrid({8, 8, 8}), DimensionError);
  CHECK_THROWS_AS(TorusGrid({64, 64, 64, 64}, 1000), DimensionError);
  TorusGrid g({8, 12, 10, 8});
  CHECK(g.n() == 2);
  CHECK(g.size() == 7680);
  CHECK(g.coord(1, 3) == doctest::Approx(1.0 / 8));
}

TEST_CASE("laplacian") {
  auto g = TorusGrid::cube(1, 16);
  ScalarField u(g, g->sample([](auto& x) { return std::cos(kTwoPi * x[0]); }));
  CHECK(sup(laplacian(u).values - kTwoPi * kTwoPi * u.values) < 1e-10);
  CHECK(sup(laplacian(ScalarField::constant(g, 3.5)).values) < 1e-12);

  auto g4 = TorusGrid::cube(2, 8);
  ScalarField w(g4, g4->sample([](auto& x) { return std::cos(kTwoPi * x[0]) + std::cos(kTwoPi * x[3]); }));
  CHECK(sup(laplacian(w).values - kTwoPi * kTwoPi * w.values) < 1e-10);
}

TEST_CASE("ddbar of scalars") {
  auto g = TorusGrid::cube(2, 16);
  ScalarField u(g, g->sample([](auto& x) { return std::cos(kTwoPi * x[0]); }));
  auto h = ddbar_scalar(u);
  Array expect = -kPi * kPi * u.values;
  CHECK(sup(h.at(0, 0).real() - expect) < 1e-10);
  CHECK(sup(h.at(0, 0).imag()) < 1e-10);
  CHECK(h.at(0, 1).abs().maxCoeff() < 1e-10);
  CHECK(h.at(1, 1).abs().maxCoeff() < 1e-10);

  auto hc = ddbar_scalar(ScalarField::constant(g, 2));
  for (auto& [key, v] : hc.coeffs) CHECK(v.abs().maxCoeff() < 1e-12);

  std::mt19937_64 rng(7);
  ScalarField r(g, band_limited(*g, rng, 3, 12));
  auto hr = ddbar_scalar(r);
  Array tr = Array::Zero(r.values.size());
  for (int k = 0; k < 2; ++k) tr += hr.at(k, k).real();
  CHECK(sup(-4 * tr - laplacian(r).values) < 1e-12 * std::max(1.0, sup(laplacian(r).values)));
  for (int k = 0; k < 2; ++k) CHECK(hr.at(k, k).imag().abs().maxCoeff() < 1e-9);
  // Hermitian: H_kj = conj(H_jk) for real u.
  CHECK((hr.at(0, 1) - hr.at(1, 0).conjugate()).abs().maxCoeff() < 1e-9);
}

TEST_CASE("poisson solve") {
  auto g = TorusGrid::cube(1, 32);
  ScalarField f(g, g->sample([](auto& x) { return std::cos(kTwoPi * x[0]); }));
  CHECK(sup(poisson_solve(f).values - f.values / (kTwoPi * kTwoPi)) < 1e-14);
  CHECK(sup(poisson_solve(ScalarField::constant(g, 0)).values) == 0);
  ScalarField shifted(g, f.values + 0.25);
  CHECK_THROWS_AS(poisson_solve(shifted), ConditionError);

  std::mt19937_64 rng(11);
  Array v = band_limited(*g, rng, 6, 10);
  ScalarField u(g, v);
  auto back = poisson_solve(laplacian(u));
  CHECK(sup(back.values - (v - v.mean())) < 1e-12);
  CHECK(std::abs(back.mean()) < 1e-15);
}

TEST_CASE("kw constant cases") {
  auto g = TorusGrid::cube(1, 16);
  {
    KWProblem<TorusGrid> p{ScalarField::constant(g, 1), 1, 1};
    auto [u, d] = kw_solve(p);
    CHECK(u.sup() < 1e-12);
    CHECK(d.positive_operator);
  }
  {
    KWProblem<TorusGrid> p{ScalarField::constant(g, 2), 1, 1};
    auto [u, d] = kw_solve(p);
    CHECK(sup(u.values + std::log(2.0)) < 1e-12);
    KWOptions z;
    z.initial = "zero";
    auto [u0, d0] = kw_solve(p, z);
    CHECK(sup(u0.values + std::log(2.0)) < 1e-12);
    CHECK(d0.iterations > 0);
  }
  KWProblem<TorusGrid> neg{ScalarField::constant(g, -1), 1, 1};
  CHECK_THROWS_AS(kw_solve(neg), ValidationError);
  KWProblem<TorusGrid> badc{ScalarField::constant(g, 1), 1, -1};
  CHECK_THROWS_AS(kw_solve(badc), ConditionError);
  KWOptions tight;
  tight.max_iterations = 0;
  tight.initial = "zero";
  KWProblem<TorusGrid> hard{ScalarField::constant(g, 5), 1, 1};
  CHECK_THROWS_AS(kw_solve(hard, tight), ConvergenceError);
}

TEST_CASE("kw manufactured solution and uniqueness") {
  auto g = TorusGrid::cube(1, 64);
  Array ustar = g->sample([](auto& x) { return 0.01 * std::cos(kTwoPi * x[0]); });
  Array w = (1.0 - g->laplacian(ustar)) * (-ustar).exp();
  REQUIRE(w.minCoeff() > 0);
  KWProblem<TorusGrid> p{ScalarField(g, w), 1, 1};
  auto [u, d] = kw_solve(p);
  CHECK(sup(u.values - ustar) <= 1e-9);
  CHECK(d.residual_sup <= 1e-10);

  // Positive density with a genuinely nonlinear solution.
  Array w2 = g->sample([](auto& x) {
    return 1.5 + std::cos(kTwoPi * x[0]) * std::cos(kTwoPi * x[1]) + 0.3 * std::sin(kTwoPi * x[1]);
  });
  KWProblem<TorusGrid> q{ScalarField(g, w2), 3, 2};
  KWOptions za;
  za.initial = "zero";
  auto [ua, da] = kw_solve(q, za);
  auto [ub, db] = kw_solve(q);
  CHECK(sup(ua.values - ub.values) <= 1e-8);
  const double lo = std::log(q.c / w2.maxCoeff()) / q.kappa, hi = std::log(q.c / w2.minCoeff()) / q.kappa;
  CHECK(ua.values.minCoeff() >= lo - 1e-8);
  CHECK(ua.values.maxCoeff() <= hi + 1e-8);
  CHECK(da.positive_operator);

  // Refinement: 32 vs 64 per axis at shared points.
  auto g32 = TorusGrid::cube(1, 32);
  Array w32 = g32->sample([](auto& x) {
    return 1.5 + std::cos(kTwoPi * x[0]) * std::cos(kTwoPi * x[1]) + 0.3 * std::sin(kTwoPi * x[1]);
  });
  auto [uc, dc] = kw_solve(KWProblem<TorusGrid>{ScalarField(g32, w32), 3, 2});
  double diff = 0;
  for (int i = 0; i < 32; ++i)
    for (int j = 0; j < 32; ++j)
      diff = std::max(diff, std::abs(uc.values[i * 32 + j] - ub.values[(2 * i) * 64 + 2 * j]));
  CHECK(diff <= 1e-8);
}

TEST_CASE("kw with density zeros") {
  auto g = TorusGrid::cube(1, 32);
  Array w = g->sample([](auto& x) {
    double s = std::sin(kPi * x[0]), t = std::sin(kPi * x[1]);
    return s * s + t * t;
  });
  CHECK(w.minCoeff() == 0);
  auto [u, d] = kw_solve(KWProblem<TorusGrid>{ScalarField(g, w), 2, 1});
  CHECK(d.residual_sup <= 1e-10);
  CHECK(d.positive_operator);
  CHECK(d.q_min == 0);
}

TEST_CASE("jacobian check") {
  auto g = TorusGrid::cube(1, 32);
  KWProblem<TorusGrid> p{ScalarField::constant(g, 1), 1, 1};
  ScalarField zero = ScalarField::constant(g, 0);
  ScalarField v(g, g->sample([](auto& x) { return std::cos(kTwoPi * x[0]); }));
  auto rep = jacobian_check(p, zero, v);
  CHECK(rep.pass);
  CHECK(rep.analytic_norm == doctest::Approx(kTwoPi * kTwoPi + 1).epsilon(1e-12));
  auto rep0 = jacobian_check(p, zero, zero);
  CHECK(rep0.pass);
  CHECK(rep0.abs_error == 0);

  std::mt19937_64 rng(3);
  Array w = 2.0 + 0.5 * band_limited(*g, rng, 3, 4) / 4.0;
  KWProblem<TorusGrid> q{ScalarField(g, w.abs()), 2.5, 1.5};
  ScalarField ur(g, 0.2 * band_limited(*g, rng, 4, 6)), vr(g, band_limited(*g, rng, 4, 6));
  CHECK(jacobian_check(q, ur, vr).pass);
}

TEST_CASE("symmetric factor bookkeeping") {
  SymmetricFactor f12(12), f16(16), f8(8);
  CHECK(f12.modes() == 28);
  CHECK(f16.modes() == 45);
  CHECK(f8.modes() == 15);
  CHECK(f12.point_weights().sum() == 144);
  CHECK(f16.eval_weights().sum() == 256);
  CHECK(f12.eval_points().size() == 38);
  CHECK(f16.eval_points().size() == 66);
  auto p = SymmetricProductGrid::make(2, 12);
  CHECK(p->size() == 28u * 28u);
  CHECK(p->eval_weights().sum() == doctest::Approx(144.0 * 144.0));
}

TEST_CASE("symmetric grid agrees with the full grid") {
  const int N = 8;
  auto full = TorusGrid::cube(3, N);
  auto sym = SymmetricProductGrid::make(3, N);
  auto density = [](const std::vector<double>& x) {
    double w = 1;
    for (int j = 0; j < 3; ++j) {
      double cx = std::cos(kTwoPi * x[2 * j]), cy = std::cos(kTwoPi * x[2 * j + 1]);
      w *= 1.2 + 0.5 * (cx + cy) + 0.2 * cx * cy + 0.1 * std::cos(2 * kTwoPi * x[2 * j]) * std::cos(kTwoPi * x[2 * j + 1]) +
           0.1 * std::cos(kTwoPi * x[2 * j]) * std::cos(2 * kTwoPi * x[2 * j + 1]);
    }
    return w;
  };
  Array wf = full->sample(density), ws = sym->sample(density);
  CHECK(std::abs(full->mean(wf) - sym->mean(ws)) < 1e-12);

  KWProblem<TorusGrid> pf{ScalarField(full, wf), 6, 2};
  KWProblem<SymmetricProductGrid> ps{SymField(sym, ws), 6, 2};
  auto [uf, df] = kw_solve(pf);
  auto [us, ds] = kw_solve(ps);
  const auto& fac = sym->factor();
  double diff = 0;
  for (std::size_t p = 0; p < sym->size(); ++p) {
    auto idx = sym->factor_indices(p);
    std::size_t flat = 0;
    for (int j = 0; j < 3; ++j) {
      flat = flat * N + std::size_t(fac.point_reps()[idx[j]].first);
      flat = flat * N + std::size_t(fac.point_reps()[idx[j]].second);
    }
    diff = std::max(diff, std::abs(us.values[Eigen::Index(p)] - uf.values[Eigen::Index(flat)]));
  }
  CHECK(diff < 1e-11);

  // Derivatives at the evaluation points match full-grid spectral derivatives.
  for (std::vector<int> axes : {std::vector<int>{}, {0}, {1}, {0, 0}, {0, 1}, {1, 1}, {0, 2}, {1, 4}, {3, 4}, {5, 5}}) {
    Array es = sym->evaluate(us.values, axes);
    Array ef = full->evaluate(uf.values, axes);
    double err = 0;
    std::size_t e = 0;
    const auto& ep = fac.eval_points();
    for (std::size_t a = 0; a < ep.size(); ++a)
      for (std::size_t b = 0; b < ep.size(); ++b)
        for (std::size_t c = 0; c < ep.size(); ++c, ++e) {
          std::size_t flat = ((((std::size_t(ep[a].first) * N + ep[a].second) * N + ep[b].first) * N + ep[b].second) * N +
                              ep[c].first) * N + ep[c].second;
          err = std::max(err, std::abs(es[Eigen::Index(e)] - ef[Eigen::Index(flat)]));
        }
    CHECK(err < 1e-8);
  }
}

TEST_CASE("field dump round trip") {
  auto g = TorusGrid::cube(1, 8);
  Array v = g->sample([](auto& x) { return x[0] - 2 * x[1]; });
  const std::string path = "test_spectral_dump.bin";
  write_field_dump(path, g->dims(), v);
  auto d = read_field_dump(path);
  CHECK(d.dims == g->dims());
  CHECK(!d.complex);
  REQUIRE(d.data.size() == 64);
  for (int i = 0; i < 64; ++i) CHECK(d.data[std::size_t(i)] == v[i]);
  Eigen::ArrayXcd c = v.cast<std::complex<double>>() * std::complex<double>(0, 1);
  write_field_dump(path, g->dims(), c);
  auto dc = read_field_dump(path);
  CHECK(dc.complex);
  CHECK(dc.data[3] == v[1]);
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_field_dump(path), ValidationError);
}
