// Acceptance run: one PASS/FAIL line per criterion. Exit status is the number of failures.
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "swk/assembler.hpp"
#include "swk/clifford.hpp"
#include "swk/errors.hpp"
#include "swk/geometry.hpp"
#include "swk/kahlerid.hpp"
#include "swk/spectral.hpp"

using namespace swk;

namespace {

// Tolerances and runtime limits.
constexpr double kKwConstTol = 1e-12;
constexpr double kKwManufacturedTol = 1e-9;
constexpr double kKwTwoStartTol = 1e-8;
constexpr double kJacobianTol = 1e-6;
constexpr double kDigits12 = 1e-12;
constexpr double kConstResidualTol = 1e-12;
constexpr double kThetaResidualTol = 1e-6;
constexpr double kPathsTol = 1e-9;
constexpr double kDriftTol = 1e-10;
constexpr double kInvariantTol = 1e-10;
constexpr double kShiftTol = 1e-12;
constexpr double kReducedTol = 1e-8;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

double sup(const Array& a) { return a.abs().maxCoeff(); }

int failures = 0;

void criterion(int id, const std::string& name, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail << " [exception: " << e.what() << "]";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs >= limit_s) {
    o.pass = false;
    o.detail << " [runtime " << secs << " s over " << limit_s << " s]";
  }
  if (!o.pass) ++failures;
  std::printf("%s %2d %s (%.2f s)%s\n", o.pass ? "PASS" : "FAIL", id, name.c_str(), secs, o.detail.str().c_str());
  std::fflush(stdout);
}

void suite(Outcome& o, const IdentityReport& r) {
  if (const auto* f = r.first_failure()) o.require(false, r.suite + ": " + f->name);
  o.detail << " " << r.suite << "=" << r.checks.size();
}

AssembleConfig base(const std::string& tag, GridSpec grid, double r0, double r1) {
  AssembleConfig c;
  c.case_tag = tag;
  c.grid = grid;
  c.r0 = r0;
  c.r1 = r1;
  return c;
}

}  // namespace

int main() {
  criterion(1, "exact Clifford suite", 5, [](Outcome& o) {
    for (int dim : {5, 6, 8}) suite(o, verify_clifford_suite(dim));
    for (DiracCase c : all_dirac_cases()) {
      try {
        suite(o, verify_dirac_cancellation(c));
      } catch (const IdentityFailure& e) {
        o.require(false, e.what());
      }
    }
  });

  criterion(2, "exact Kahler identities, 200 random Hessians", 10, [](Outcome& o) {
    for (int n : {3, 4}) suite(o, verify_kahler_suite(n, 200, 20260101 + n));
  });

  criterion(3, "isomorphism ranks 15/15/63/15", 5, [](Outcome& o) {
    const int r6p = isomorphism_rank(6, Chirality::plus), r6m = isomorphism_rank(6, Chirality::minus);
    const int r8 = isomorphism_rank(8, Chirality::plus), r5 = isomorphism_rank(5, Chirality::none);
    o.detail << " ranks " << r6p << "/" << r6m << "/" << r8 << "/" << r5;
    o.require(r6p == 15 && r6m == 15 && r8 == 63 && r5 == 15, "rank values");
  });

  criterion(4, "Kazdan-Warner solver", 30, [](Outcome& o) {
    auto g16 = TorusGrid::cube(1, 16);
    auto [u1, d1] = kw_solve(KWProblem<TorusGrid>{ScalarField::constant(g16, 1), 1, 1});
    auto [u2, d2] = kw_solve(KWProblem<TorusGrid>{ScalarField::constant(g16, 2), 1, 1});
    const double ce = std::max(u1.sup(), sup(u2.values + std::log(2.0)));
    o.detail << " const " << ce;
    o.require(ce <= kKwConstTol, "constant cases");

    auto g = TorusGrid::cube(1, 64);
    Array ustar = g->sample([](auto& x) { return 0.01 * std::cos(kTwoPi * x[0]) + 0.005 * std::sin(kTwoPi * x[1]); });
    Array w = (1.0 - g->laplacian(ustar)) * (-ustar).exp();
    auto [um, dm] = kw_solve(KWProblem<TorusGrid>{ScalarField(g, w), 1, 1});
    const double me = sup(um.values - ustar);
    o.detail << " manufactured " << me;
    o.require(me <= kKwManufacturedTol, "manufactured recovery");

    Array w2 = g->sample([](auto& x) {
      return 1.5 + std::cos(kTwoPi * x[0]) * std::cos(kTwoPi * x[1]) + 0.3 * std::sin(kTwoPi * x[1]);
    });
    KWProblem<TorusGrid> q{ScalarField(g, w2), 3, 2};
    KWOptions zero;
    zero.initial = "zero";
    auto [ua, da] = kw_solve(q, zero);
    auto [ub, db] = kw_solve(q);
    const double te = sup(ua.values - ub.values);
    o.detail << " two-start " << te;
    o.require(te <= kKwTwoStartTol, "two-start agreement");

    ScalarField v(g, g->sample([](auto& x) { return std::cos(kTwoPi * (x[0] + 2 * x[1])); }));
    JacobianReport j = jacobian_check(q, ua, v, 1e-5, kJacobianTol);
    o.detail << " jacobian " << j.rel_error;
    o.require(j.pass, "jacobian finite difference");
  });

  criterion(5, "6d perturbed constant case", 60, [](Outcome& o) {
    auto [t, r] = assemble_6d(base("6d-perturbed", {"full", 8}, 1, 1));
    const double target = 8 * kPi;
    const double e = std::max({sup(t.phi2 - target), sup(t.psi2 - target)}) / target;
    o.detail << " |phi|^2,|psi|^2 rel " << e << " residual " << r.total.sup;
    o.require(e <= kDigits12, "densities = 8 pi");
    o.require(r.total.sup < kConstResidualTol, "residual");
  });

  criterion(6, "6d perturbed theta case, 16 samples/axis", 600, [](Outcome& o) {
    AssembleConfig c = base("6d-perturbed", {"symmetric", 16}, 3, 3);
    c.degrees0 = c.degrees1 = {1, 1, 1};
    auto [t, r] = assemble_6d(c);
    o.detail << " residual " << r.total.sup << " dstar paths " << r.dstar_paths_diff;
    o.require(r.feasible, "feasible");
    o.require(r.total.sup < kThetaResidualTol, "residual");
    o.require(r.dstar_paths_diff <= kPathsTol, "d*beta paths");
  });

  criterion(7, "8d constant and theta cases", 900, [](Outcome& o) {
    for (double r0 : {1.0, 2.5}) {
      AssembleConfig c = base("8d-perturbed", {"symmetric", 8}, r0, r0);
      c.degrees0 = {0, 0, 0, 0};
      auto [t, r] = assemble_8d(c);
      const double e = sup(t.phi2 - 32 * r0) / (32 * r0);
      o.detail << " r0=" << r0 << " rel " << e << " residual " << r.total.sup;
      o.require(e <= kDigits12 && r.feasible, "|phi|^2 = 32 r0");
      if (r0 == 1.0) o.require(r.total.sup < kConstResidualTol, "constant residual");
    }
    AssembleConfig cb = base("8d-perturbed", {"symmetric", 8}, 1, 2);
    cb.degrees0 = {0, 0, 0, 0};
    auto [tb, rb] = assemble_8d(cb);
    o.detail << " imbalance residual " << rb.total.sup;
    o.require(!rb.feasible && !rb.pass && rb.total.sup > 1, "r1 = r0 + a imbalance flagged");

    AssembleConfig c = base("8d-perturbed", {"symmetric", 12}, kPi + 1, kPi + 1);
    c.degrees0 = {1, 1, 1, 1};
    auto [t, r] = assemble_8d(c);
    o.detail << " a " << t.constants["a"].value << " theta residual " << r.total.sup;
    o.require(r.feasible && r.total.sup < kThetaResidualTol, "theta residual");
  });

  criterion(8, "noncompact family", 120, [](Outcome& o) {
    FamilyCertificate cert = family_certificate(noncompact_theta());
    o.require(cert.theta_primitive, "theta ^ omega = 0");
    o.require(cert.star_theta_kills_phi, "c(*theta) phi = 0");
    o.require(cert.theta_kills_psi, "c(theta) psi = 0");
    auto [t, r] = assemble_6d(base("6d-perturbed", {"full", 8}, 1, 1));
    FamilyReport f = noncompact_family_sweep(t, {0, 1, 10}, kDriftTol);
    o.detail << " drift " << f.max_drift;
    o.require(f.max_drift <= kDriftTol, "drift");
  });

  criterion(9, "gauge scaling", 120, [](Outcome& o) {
    AssembleConfig c = base("6d-perturbed", {"symmetric", 12}, 3, 3);
    c.degrees0 = c.degrees1 = {1, 1, 1};
    auto [t, r] = assemble_6d(c);
    using C = std::complex<double>;
    for (auto [a, b] : {std::pair<C, C>{2, 1}, {1, C(0, 1)}, {3, -2}}) {
      ScaleReport s = gauge_scale_equivalence(t, a, b, kInvariantTol);
      o.detail << " (" << a << "," << b << ") inv " << s.invariant_diff << " shift " << s.re_shift_error;
      o.require(s.invariant_diff <= kInvariantTol, "invariants");
      o.require(s.re_shift_error <= kShiftTol && s.im_shift_error <= kShiftTol, "Re f shift");
    }
  });

  criterion(10, "reduced 2d systems", 60, [](Outcome& o) {
    const std::vector<ReducedCase> pos{ReducedCase::sigma_phi, ReducedCase::sigma_psi, ReducedCase::case1,
                                       ReducedCase::case3};
    auto g = TorusGrid::cube(1, 64);
    ReducedData d;
    d.grid = g;
    d.W = Array::Ones(Eigen::Index(g->size()));
    d.g = Array::Zero(Eigen::Index(g->size()));
    d.constant = 0.25;
    double ce = 0;
    for (auto c : pos) {
      auto rep = reduce_solve_2d(c, d).second;
      ce = std::max({ce, rep.eq1_sup, rep.eq2_sup});
    }
    d.constant = -0.25;
    for (auto c : {ReducedCase::case2, ReducedCase::case4}) {
      auto rep = reduce_solve_2d(c, d).second;
      ce = std::max({ce, rep.eq1_sup, rep.eq2_sup});
    }
    o.detail << " constant " << ce;
    o.require(ce < kConstResidualTol, "constant balance");

    auto g2 = TorusGrid::cube(1, 128);
    d.grid = g2;
    d.W = theta_density(1, 128).density;
    d.g = g2->sample([](const std::vector<double>& x) {
      return 3 * std::cos(kTwoPi * x[0]) + 2 * std::sin(kTwoPi * (x[0] + 2 * x[1]));
    });
    d.constant = 2;
    d.free_constant = 0.3;
    d.tolerance = kReducedTol;
    double te = 0;
    for (auto c : pos) {
      auto rep = reduce_solve_2d(c, d).second;
      te = std::max({te, rep.eq1_sup, rep.eq2_sup, rep.merge_sup});
    }
    o.detail << " theta " << te;
    o.require(te <= kReducedTol, "pre-split equations at 128^2");

    int rejected = 0;
    ReducedData bad = d;
    bad.g += 0.01;
    try {
      reduce_solve_2d(ReducedCase::case1, bad);
    } catch (const ConditionError&) {
      ++rejected;
    }
    bad = d;
    bad.constant = -2;
    try {
      reduce_solve_2d(ReducedCase::sigma_phi, bad);
    } catch (const ConditionError&) {
      ++rejected;
    }
    o.detail << " rejected " << rejected << "/2";
    o.require(rejected == 2, "integrability violations");
  });

  return failures;
}
