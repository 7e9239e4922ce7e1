#include <cmath>

#include "common.hpp"
#include "swk/clifford.hpp"
#include "swk/errors.hpp"

namespace swk {

namespace {

double sup_diff(const Array& a, const Array& b) { return (a - b).abs().maxCoeff(); }

double sup_diff_mod_const(const Discretization& g, const Array& a, const Array& b) {
  return ((a - g.mean(a)) - (b - g.mean(b))).abs().maxCoeff();
}

double rel_diff(const Array& a, const Array& b) {
  if (a.size() == 0) return 0;
  return sup_diff(a, b) / std::max(1.0, a.abs().maxCoeff());
}

void compare_reports(const ResidualReport& x, const ResidualReport& y, std::map<std::string, double>& out) {
  out["residual total sup"] = std::abs(x.total.sup - y.total.sup);
  out["residual total l2"] = std::abs(x.total.l2 - y.total.l2);
  for (std::size_t e = 0; e < x.equations.size() && e < y.equations.size(); ++e) {
    const auto& ex = x.equations[e];
    const auto& ey = y.equations[e];
    out["residual " + ex.name + " sup"] = std::abs(ex.total.sup - ey.total.sup);
    for (const auto& [k, v] : ex.parts) {
      auto it = ey.parts.find(k);
      out["residual " + ex.name + " " + k] = it == ey.parts.end() ? INFINITY : std::abs(v.sup - it->second.sup);
    }
  }
  out["d*beta path difference"] = std::abs(x.dstar_paths_diff - y.dstar_paths_diff);
}

}  // namespace

ScaleReport gauge_scale_equivalence(const SolutionTuple& s, std::complex<double> a, std::complex<double> b,
                                    double tol) {
  if (a == 0.0 || b == 0.0) throw ArgumentError("scaling constants must be nonzero");
  if (s.dim != 6 && s.dim != 8) throw ArgumentError("scaling applies to assembled 6d or 8d tuples");
  ScaleReport rep;
  rep.a = a;
  rep.b = b;
  AssembleConfig cfg = s.config;
  cfg.scale0 *= a;
  if (s.dim == 6) cfg.scale1 *= b;
  Assembly scaled = assemble(cfg);
  const SolutionTuple& t = scaled.tuple;
  const Discretization& g = *s.grid;
  rep.base = residual_report(s);
  rep.scaled = scaled.report;

  const double la = std::log(std::abs(a)), lb = std::log(std::abs(b));
  Array re0, re1, im0, im1;
  if (s.dim == 6) {
    // Potentials relative to the original metrics after the final gauge change.
    re0 = s.re_f - s.lambda / 2;
    re1 = t.re_f - t.lambda / 2;
    im0 = s.im_f + s.lambda_tilde / 2;
    im1 = t.im_f + t.lambda_tilde / 2;
    rep.predicted_re_shift = la / 2;
    rep.predicted_im_shift = lb / 2;
    rep.phase0 = a / std::abs(a) * std::exp(std::complex<double>(0, -lb));
    rep.phase1 = b / std::abs(b) * std::exp(std::complex<double>(0, la));
  } else {
    re0 = s.re_f - s.lambda / 6;
    re1 = t.re_f - t.lambda / 6;
    im0 = s.im_f - s.lambda / 6;
    im1 = t.im_f - t.lambda / 6;
    rep.predicted_re_shift = la / 6;
    rep.predicted_im_shift = la / 6;
    rep.phase0 = a / std::abs(a);
    rep.phase1 = 1;
  }
  rep.re_shift_error = (re1 - re0 - rep.predicted_re_shift).abs().maxCoeff();
  rep.im_shift_error = (im1 - im0 - rep.predicted_im_shift).abs().maxCoeff();
  rep.phase_modulus_error = std::max(std::abs(std::abs(rep.phase0) - 1), std::abs(std::abs(rep.phase1) - 1));

  auto& d = rep.field_diffs;
  d["|phi|^2 (relative)"] = rel_diff(s.phi2, t.phi2);
  d["lambda mod constants"] = sup_diff_mod_const(g, s.lambda, t.lambda);
  d["Re f mod constants"] = sup_diff_mod_const(g, s.re_f, t.re_f);
  d["Im f mod constants"] = sup_diff_mod_const(g, s.im_f, t.im_f);
  if (s.dim == 6) {
    d["|psi|^2 (relative)"] = rel_diff(s.psi2, t.psi2);
    d["lambda~ mod constants"] = sup_diff_mod_const(g, s.lambda_tilde, t.lambda_tilde);
  }
  compare_reports(rep.base, rep.scaled, d);
  rep.invariant_diff = 0;
  for (const auto& [k, v] : d) rep.invariant_diff = std::max(rep.invariant_diff, v);
  rep.pass = rep.invariant_diff <= tol && rep.re_shift_error <= 1e-12 && rep.im_shift_error <= 1e-12 &&
             rep.phase_modulus_error <= 1e-15;
  return rep;
}

MultiVector noncompact_theta(const ExactScalar& s) {
  MultiVector t = wedge(wedge(MultiVector::dz(3, 1), MultiVector::dzbar(3, 2)), MultiVector::dzbar(3, 3));
  return s * (t + conj(t));
}

FamilyCertificate family_certificate(const MultiVector& theta) {
  if (theta.rdim() != 6) throw DimensionError("the family form lives on a complex 3-fold");
  FamilyCertificate c;
  c.theta_primitive = wedge(theta, MultiVector::omega(3)).is_zero();
  Spinor phi = Spinor::basis(6, Chirality::plus, 0);
  Spinor psi = Spinor::basis(6, Chirality::minus, 3);
  c.star_theta_kills_phi = clifford_form(hodge_star(theta), phi).is_zero();
  c.theta_kills_psi = clifford_form(theta, psi).is_zero();
  LinForm lt = LinForm::constant(theta);
  c.theta_closed = lt.d().term_count() == 0;
  c.theta_coclosed = lt.dstar().term_count() == 0;
  return c;
}

ResidualReport noncompact_family(const SolutionTuple& s, double t) {
  if (s.dim != 6) throw ArgumentError("the family needs a 6d tuple with phi in the degree-0 and psi in the (0,3) summand");
  SolutionTuple c = s;
  c.theta = noncompact_theta();
  c.theta_t = t;
  return residual_report(c);
}

FamilyReport noncompact_family_sweep(const SolutionTuple& s, const std::vector<double>& ts, double tol) {
  FamilyReport rep;
  rep.certificate = family_certificate(noncompact_theta());
  rep.t_values = ts;
  ResidualReport base = noncompact_family(s, 0);
  for (double t : ts) {
    rep.reports.push_back(t == 0 ? base : noncompact_family(s, t));
    std::map<std::string, double> d;
    compare_reports(base, rep.reports.back(), d);
    d["d beta path difference"] = std::abs(base.dbeta_paths_diff - rep.reports.back().dbeta_paths_diff);
    for (const auto& [k, v] : d) rep.max_drift = std::max(rep.max_drift, v);
  }
  const auto& c = rep.certificate;
  rep.pass = c.theta_primitive && c.star_theta_kills_phi && c.theta_kills_psi && c.theta_closed &&
             c.theta_coclosed && rep.max_drift <= tol;
  return rep;
}

}  // namespace swk
