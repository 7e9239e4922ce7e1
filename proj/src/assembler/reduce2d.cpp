#include <cmath>
#include <sstream>

#include "common.hpp"
#include "swk/errors.hpp"

namespace swk {

std::string to_string(ReducedCase c) {
  switch (c) {
    case ReducedCase::sigma_phi: return "sigma-c2-phi";
    case ReducedCase::sigma_psi: return "sigma-c2-psi";
    case ReducedCase::case1: return "5d-case1";
    case ReducedCase::case2: return "5d-case2";
    case ReducedCase::case3: return "5d-case3";
    case ReducedCase::case4: return "5d-case4";
  }
  return "?";
}

ReducedCase parse_reduced_case(const std::string& s) {
  for (auto c : {ReducedCase::sigma_phi, ReducedCase::sigma_psi, ReducedCase::case1, ReducedCase::case2,
                 ReducedCase::case3, ReducedCase::case4})
    if (to_string(c) == s) return c;
  throw ArgumentError("unknown reduced case: " + s);
}

namespace {

struct CaseShape {
  // s = 4 sigma U + tau Lambda with U the unknown real potential.
  double A_sign;
  bool five_d;
  bool lambda_tilde;
};

CaseShape shape(ReducedCase c) {
  switch (c) {
    case ReducedCase::sigma_phi: return {1, false, false};
    case ReducedCase::sigma_psi: return {1, false, true};
    case ReducedCase::case1: return {1, true, false};
    case ReducedCase::case2: return {-1, true, false};
    case ReducedCase::case3: return {1, true, true};
    case ReducedCase::case4: return {-1, true, true};
  }
  throw ArgumentError("unknown reduced case");
}

void check_data(const ReducedData& d) {
  if (!d.grid || d.grid->n() != 1) throw DimensionError("reduced systems live on a 2d torus grid");
  if (std::size_t(d.W.size()) != d.grid->size() || std::size_t(d.g.size()) != d.grid->size())
    throw DimensionError("reduced data fields do not match the grid");
}

}  // namespace

ReducedReport reduced_residual(const ReducedSolution& s, const ReducedData& d) {
  check_data(d);
  const TorusGrid& g = *d.grid;
  const Array G = s.A + d.g;
  const double k = s.constants.at("free constant").value;
  const Array& W = d.W;
  Array eq1, eq2, merge;
  const Array& x = s.re_f;
  const Array& y = s.im_f;
  const Array& l = s.lambda;
  switch (s.which) {
    case ReducedCase::sigma_phi: {
      Array E = 0.25 * (l - 4 * x).exp() * W;
      eq1 = 2 * g.laplacian(Array(-x)) + E - s.A;
      eq2 = g.laplacian(l) + E - G;
      merge = Array::Zero(x.size());
      break;
    }
    case ReducedCase::sigma_psi: {
      Array E = 0.25 * (-l - 4 * y).exp() * W;
      eq1 = 2 * g.laplacian(Array(-y)) + E - s.A;
      eq2 = g.laplacian(Array(-l)) + E - G;
      merge = Array::Zero(x.size());
      break;
    }
    case ReducedCase::case1:
    case ReducedCase::case2: {
      const double a = s.constants.at("a").value;
      Array E = 0.25 * (2 * (x - y) + l).exp() * W;
      eq1 = -2 * g.laplacian(y) + E - shape(s.which).A_sign * a;
      eq2 = g.laplacian(l) + 0.25 * std::exp(-2 * k) * (4 * x + l).exp() * W - G;
      merge = x + y - k;
      break;
    }
    case ReducedCase::case3:
    case ReducedCase::case4: {
      const double a = s.constants.at("a").value;
      Array E = 0.25 * (-2 * (x + y) - l).exp() * W;
      eq1 = -2 * g.laplacian(x) + E - shape(s.which).A_sign * a;
      eq2 = g.laplacian(Array(-l)) + 0.25 * std::exp(-2 * k) * (-4 * x - l).exp() * W - G;
      merge = x - y + k;
      break;
    }
  }
  ReducedReport r;
  r.which = to_string(s.which);
  switch (s.which) {
    case ReducedCase::sigma_phi:
      r.eq1_formula = "2 Delta(-Re f) + 1/4 e^{lambda - 4 Re f} |phi|^2 = r0";
      r.eq2_formula = "Delta(lambda) + 1/4 e^{lambda - 4 Re f} |phi|^2 = -i<2 F_A0 - F_K, omega>";
      r.merge_formula = "none";
      break;
    case ReducedCase::sigma_psi:
      r.eq1_formula = "2 Delta(-Im f) + 1/4 e^{-lambda~ - 4 Im f} |psi|^2 = r1";
      r.eq2_formula = "Delta(-lambda~) + 1/4 e^{-lambda~ - 4 Im f} |psi|^2 = i<2 F_B0 - F_K, omega>";
      r.merge_formula = "none";
      break;
    case ReducedCase::case1:
    case ReducedCase::case2:
      r.eq1_formula = std::string("-2 Delta(Im f) + 1/4 e^{2(Re f - Im f) + lambda} |phi|^2 = ") +
                      (s.which == ReducedCase::case1 ? "a" : "-a");
      r.eq2_formula = "Delta(lambda) + 1/4 e^{-2 k} e^{4 Re f + lambda} |phi|^2 = -i<2 F_A - F_K, omega>";
      r.merge_formula = "Re f + Im f = k";
      break;
    case ReducedCase::case3:
    case ReducedCase::case4:
      r.eq1_formula = std::string("-2 Delta(Re f) + 1/4 e^{-2(Re f + Im f) - lambda~} |psi|^2 = ") +
                      (s.which == ReducedCase::case3 ? "a" : "-a");
      r.eq2_formula = "Delta(-lambda~) + 1/4 e^{-2 k} e^{-4 Re f - lambda~} |psi|^2 = i<2 F_A - F_K, omega>";
      r.merge_formula = "Re f = Im f - k";
      break;
  }
  r.eq1_sup = eq1.abs().maxCoeff();
  r.eq2_sup = eq2.abs().maxCoeff();
  r.merge_sup = merge.abs().maxCoeff();
  r.linear_integral = g.mean(d.g);
  r.kw_integral = 3 * s.A;
  r.tolerance = d.tolerance;
  r.pass = r.eq1_sup <= d.tolerance && r.eq2_sup <= d.tolerance && r.merge_sup <= 1e-12;
  return r;
}

std::pair<ReducedSolution, ReducedReport> reduce_solve_2d(ReducedCase c, const ReducedData& d) {
  check_data(d);
  const auto& g = d.grid;
  const CaseShape sh = shape(c);
  ReducedSolution s;
  s.which = c;
  s.grid = g;
  s.A = sh.A_sign * d.constant;
  s.e0 = sh.five_d ? -2 * d.free_constant : 0.0;
  s.beta_ansatz = sh.five_d ? "pi_1^*(dbar f + d fbar) ^ pi_2^*(dx_1 ^ dx_2)" : "(dbar f + d fbar) ^ omega";
  s.constants[sh.five_d ? "a" : (sh.lambda_tilde ? "r1" : "r0")] = {d.constant, "config"};
  s.constants["free constant"] = {sh.five_d ? d.free_constant : 0.0, "free-constant"};

  const double lin = g->mean(d.g);
  if (std::abs(lin) > 1e-10) {
    std::ostringstream os;
    os.precision(17);
    os << "integrability violated: linear-side integral mean(G - A) = " << lin << " is not zero";
    throw ConditionError(os.str());
  }
  if (!(3 * s.A > 0)) {
    std::ostringstream os;
    os.precision(17);
    os << "integrability violated: KW-side integral mean(2A + G) = " << 3 * s.A << " is not positive";
    throw ConditionError(os.str());
  }
  // Delta p = G - A; the combined variable is s = s~ + p with a constant-rhs KW problem for s~.
  Array p = g->shifted_inverse(d.g, 0);
  KWProblem<TorusGrid> kw{ScalarField(g, Array(0.75 * std::exp(s.e0) * p.exp() * d.W)), 1, 3 * s.A};
  auto [st, diag] = kw_solve(kw, d.kw);
  s.kw = diag;
  Array sum = st.values + p;
  Array sigmaU = (sum - p) / 6;
  Array tauL = (sum + 2 * p) / 3;
  const double k = s.constants["free constant"].value;
  const Eigen::Index N = sum.size();
  switch (c) {
    case ReducedCase::sigma_phi:
      s.re_f = -sigmaU;
      s.im_f = Array::Zero(N);
      s.lambda = tauL;
      break;
    case ReducedCase::sigma_psi:
      s.im_f = -sigmaU;
      s.re_f = Array::Zero(N);
      s.lambda = -tauL;
      break;
    case ReducedCase::case1:
    case ReducedCase::case2:
      s.re_f = sigmaU;
      s.im_f = k - s.re_f;
      s.lambda = tauL;
      break;
    case ReducedCase::case3:
    case ReducedCase::case4:
      s.re_f = -sigmaU;
      s.im_f = s.re_f + k;
      s.lambda = -tauL;
      break;
  }
  s.constants["A"] = {s.A, "computed-from-integral"};
  return {s, reduced_residual(s, d)};
}

}  // namespace swk
