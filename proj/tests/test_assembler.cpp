#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "swk/assembler.hpp"
#include "swk/errors.hpp"

using namespace swk;

namespace {

AssembleConfig constant6(double r0 = 1, double r1 = 1) {
  AssembleConfig c;
  c.case_tag = "6d-perturbed";
  c.grid = {"full", 8};
  c.r0 = r0;
  c.r1 = r1;
  return c;
}

}  // namespace

TEST_CASE("6d constant case") {
  auto [t, r] = assemble_6d(constant6());
  CHECK(std::abs(t.phi2.maxCoeff() - 8 * M_PI) < 1e-12 * 8 * M_PI);
  CHECK(std::abs(t.phi2.minCoeff() - 8 * M_PI) < 1e-12 * 8 * M_PI);
  CHECK(std::abs(t.psi2.maxCoeff() - 8 * M_PI) < 1e-12 * 8 * M_PI);
  CHECK(r.total.sup < 1e-12);
  CHECK(r.dstar_paths_diff < 1e-9);
  CHECK(r.pass);
  MESSAGE("total " << r.total.sup);
}

TEST_CASE("6d theta case") {
  AssembleConfig c;
  c.case_tag = "6d-perturbed";
  c.grid = {"symmetric", 16};
  c.degrees0 = {1, 1, 1};
  c.degrees1 = {1, 1, 1};
  c.r0 = 3;
  c.r1 = 3;
  auto [t, r] = assemble_6d(c);
  MESSAGE("total " << r.total.sup << " dstar " << r.dstar_paths_diff << " dbeta " << r.dbeta_paths_diff
                   << " time " << r.runtimes["total"] << " solve " << r.runtimes["solve"]);
  for (auto& e : r.equations) {
    MESSAGE(e.name << " " << e.total.sup);
    for (auto& [k, v] : e.parts) MESSAGE("   " << k << " " << v.sup);
  }
  MESSAGE("phi2 " << r.scalars["|phi|^2 min"] << " " << r.scalars["|phi|^2 max"]);
  CHECK(r.total.sup < 1e-6);
}

TEST_CASE("8d theta case") {
  AssembleConfig c;
  c.case_tag = "8d-perturbed";
  c.grid = {"symmetric", 8};
  c.degrees0 = {1, 1, 1, 1};
  c.r0 = M_PI + 1;
  c.r1 = M_PI + 1;
  auto [t, r] = assemble_8d(c);
  MESSAGE("total " << r.total.sup << " dstar " << r.dstar_paths_diff << " dbeta " << r.dbeta_paths_diff
                   << " time " << r.runtimes["total"] << " solve " << r.runtimes["solve"]);
  for (auto& e : r.equations) {
    MESSAGE(e.name << " " << e.total.sup);
    for (auto& [k, v] : e.parts) MESSAGE("   " << k << " " << v.sup);
  }
  MESSAGE("a " << t.constants["a"].value);
  CHECK(r.total.sup < 1e-6);
}

TEST_CASE("unperturbed 6d on trivial bundles is infeasible") {
  AssembleConfig c = constant6(0, 0);
  c.case_tag = "6d";
  CHECK_THROWS_AS(assemble_6d(c), ConditionError);
  c = constant6(-1, 1);
  CHECK_THROWS_AS(assemble_6d(c), ConditionError);
  c = constant6(1, -1);
  CHECK_THROWS_AS(assemble_6d(c), ConditionError);
  c = constant6();
  c.degrees0 = {1, 2, 1};
  c.grid = {"full", 32};
  CHECK_THROWS_AS(assemble_6d(c), ConditionError);
}

TEST_CASE("zero tuple has zero residual") {
  auto [t, r] = assemble_6d(constant6());
  t.constants["r0"].value = 0;
  t.constants["r1"].value = 0;
  for (Array* f : {&t.re_f, &t.im_f, &t.lambda, &t.lambda_tilde, &t.W0, &t.W1}) f->setZero();
  ResidualReport z = residual_report(t);
  CHECK(z.total.sup == 0);
}

TEST_CASE("residual responds to a perturbation at first order") {
  const double r0 = 1, eps = 0.01;
  auto [t, r] = assemble_6d(constant6(r0, 1));
  t.re_f += t.grid->sample_fn([&](const std::vector<double>& x) { return eps * std::cos(2 * M_PI * x[0]); });
  ResidualReport p = residual_report(t);
  const double pi = M_PI;
  const double predicted =
      eps * std::sqrt(std::pow(8 * pi * r0, 2) + 2 * std::pow(8 * pi * pi + 8 * pi * r0, 2));
  CHECK(std::abs(p.total.sup - predicted) < 0.1 * predicted);
  CHECK(p.equations[1].total.sup < 1e-12);
}

TEST_CASE("8d constant cases") {
  AssembleConfig c;
  c.case_tag = "8d-perturbed";
  c.grid = {"symmetric", 8};
  c.degrees0 = {0, 0, 0, 0};
  c.r0 = c.r1 = 1;
  auto [t, r] = assemble_8d(c);
  CHECK(std::abs(t.phi2.maxCoeff() - 32) < 32e-12);
  CHECK(std::abs(t.phi2.minCoeff() - 32) < 32e-12);
  CHECK(r.total.sup < 1e-12);
  CHECK(r.feasible);
  CHECK(r.pass);

  c.r1 = 2;
  auto [t2, r2] = assemble_8d(c);
  CHECK_FALSE(r2.feasible);
  CHECK_FALSE(r2.pass);
  // Forced residual (r0 - r1) omega^2, |omega^2| = sqrt(24) in dimension 8.
  CHECK(std::abs(r2.total.sup - std::sqrt(24.0)) < 1e-12);
  CHECK(r2.equations[0].total.sup < 1e-12);

  c.r1 = 1;
  c.a_given = true;
  c.a = 0.5;
  CHECK_THROWS_AS(assemble_8d(c), ConditionError);
  c.a_given = false;
  c.case_tag = "8d";
  c.r0 = c.r1 = 0;
  CHECK_THROWS_AS(assemble_8d(c), ConditionError);
}

TEST_CASE("gauge scaling") {
  AssembleConfig c;
  c.case_tag = "6d-perturbed";
  c.grid = {"symmetric", 12};
  c.degrees0 = {1, 1, 1};
  c.degrees1 = {1, 1, 1};
  c.r0 = c.r1 = 3;
  auto [t, r] = assemble_6d(c);
  using C = std::complex<double>;
  for (auto [a, b] : {std::pair<C, C>{1, 1}, {2, 1}, {1, C(0, 1)}, {3, -2}}) {
    ScaleReport s = gauge_scale_equivalence(t, a, b);
    MESSAGE(a << " " << b << " inv " << s.invariant_diff << " re " << s.re_shift_error << " im " << s.im_shift_error);
    CHECK(s.pass);
  }
  CHECK_THROWS_AS(gauge_scale_equivalence(t, 0.0, 1.0), ArgumentError);
}

TEST_CASE("noncompact family") {
  MultiVector th = noncompact_theta();
  FamilyCertificate cert = family_certificate(th);
  CHECK(cert.theta_primitive);
  CHECK(cert.star_theta_kills_phi);
  CHECK(cert.theta_kills_psi);
  CHECK(cert.theta_closed);
  CHECK(cert.theta_coclosed);
  auto [t, r] = assemble_6d(constant6());
  FamilyReport f = noncompact_family_sweep(t, {0, 1, 10});
  MESSAGE("drift " << f.max_drift);
  CHECK(f.pass);
}

TEST_CASE("reduced systems") {
  auto g = TorusGrid::cube(1, 64);
  ReducedData d;
  d.grid = g;
  d.W = Array::Ones(Eigen::Index(g->size()));
  d.g = Array::Zero(Eigen::Index(g->size()));
  d.constant = 0.25;
  for (auto c : {ReducedCase::sigma_phi, ReducedCase::sigma_psi, ReducedCase::case1, ReducedCase::case3}) {
    auto [s, rep] = reduce_solve_2d(c, d);
    CHECK(rep.eq1_sup < 1e-12);
    CHECK(rep.eq2_sup < 1e-12);
    CHECK(rep.pass);
  }
  d.constant = -0.25;
  for (auto c : {ReducedCase::case2, ReducedCase::case4}) CHECK(reduce_solve_2d(c, d).second.pass);
  CHECK_THROWS_AS(reduce_solve_2d(ReducedCase::case1, d), ConditionError);

  auto g2 = TorusGrid::cube(1, 128);
  FactorBundle tb = theta_density(1, 128);
  d.grid = g2;
  d.W = tb.density;
  d.g = g2->sample([](const std::vector<double>& x) {
    return 3 * std::cos(2 * M_PI * x[0]) + 2 * std::sin(2 * M_PI * (x[0] + 2 * x[1]));
  });
  d.constant = 2;
  d.free_constant = 0.3;
  for (auto c : {ReducedCase::sigma_phi, ReducedCase::sigma_psi, ReducedCase::case1, ReducedCase::case3}) {
    auto [s, rep] = reduce_solve_2d(c, d);
    MESSAGE(to_string(c) << " " << rep.eq1_sup << " " << rep.eq2_sup << " " << rep.merge_sup);
    CHECK(rep.pass);
  }
  d.g += 0.01;
  CHECK_THROWS_AS(reduce_solve_2d(ReducedCase::case1, d), ConditionError);
}
