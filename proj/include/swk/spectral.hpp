#pragma once

#include <Eigen/Core>
#include <cmath>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "swk/errors.hpp"
#include "swk/symgrid.hpp"
#include "swk/torus_grid.hpp"

namespace swk {

template <class Disc>
struct BasicField {
  std::shared_ptr<const Disc> grid;
  Array values;

  BasicField() = default;
  BasicField(std::shared_ptr<const Disc> g, Array v) : grid(std::move(g)), values(std::move(v)) {
    if (std::size_t(values.size()) != grid->size()) throw DimensionError("field size does not match its grid");
  }
  static BasicField constant(std::shared_ptr<const Disc> g, double c) {
    auto s = g->size();
    return BasicField(std::move(g), Array::Constant(Eigen::Index(s), c));
  }
  double mean() const { return grid->mean(values); }
  double sup() const { return values.abs().maxCoeff(); }
};

using ScalarField = BasicField<TorusGrid>;
using SymField = BasicField<SymmetricProductGrid>;

// (1,1) coefficient grids H_{jk} = d^2 u / dz_j dzbar_k, keyed by (j, k), 0-based.
struct FormField {
  std::shared_ptr<const TorusGrid> grid;
  std::map<std::pair<int, int>, Eigen::ArrayXcd> coeffs;
  const Eigen::ArrayXcd& at(int j, int k) const { return coeffs.at({j, k}); }
};

ScalarField laplacian(const ScalarField& u);
FormField ddbar_scalar(const ScalarField& u);
// Zero-mean Poisson solve; throws ConditionError when mean(f) is not zero.
ScalarField poisson_solve(const ScalarField& f);

template <class Disc>
struct KWProblem {
  BasicField<Disc> W;
  double kappa = 1;
  double c = 1;
};

struct KWOptions {
  double tolerance = 1e-10;
  int max_iterations = 50;
  int max_cg_iterations = 500;
  double armijo = 1e-4;
  int max_halvings = 40;
  // "balance" starts from ln(c / mean W) / kappa, "zero" from u = 0.
  std::string initial = "balance";
};

struct KWDiagnostics {
  int iterations = 0;
  int cg_iterations = 0;
  double residual_sup = 0;
  double residual_l2 = 0;
  std::vector<double> history;
  // Newton operator Delta + q with q = kappa W e^{kappa u} >= 0 and mean(q) > 0 is positive.
  double q_min = 0;
  double q_mean = 0;
  bool positive_operator = false;
};

namespace detail {

template <class Disc>
Array kw_residual(const Disc& g, const KWProblem<Disc>& p, const Array& u) {
  return g.laplacian(u) + p.W.values * (p.kappa * u).exp() - p.c;
}

template <class Disc>
double weighted_norm(const Disc& g, const Array& r) {
  return std::sqrt(g.dot(r, r) / double(g.full_size()));
}

// Preconditioned CG for (Delta + q) x = b in the grid's weighted inner product.
template <class Disc>
Array pcg(const Disc& g, const Array& q, const Array& b, double sigma, double rtol, int max_it, int& used) {
  Array x = Array::Zero(b.size());
  Array r = b;
  Array z = g.shifted_inverse(r, sigma);
  Array d = z;
  double rz = g.dot(r, z);
  const double bnorm = std::sqrt(g.dot(b, b));
  used = 0;
  if (bnorm == 0) return x;
  for (int it = 0; it < max_it; ++it) {
    Array ad = g.laplacian(d) + q * d;
    double alpha = rz / g.dot(d, ad);
    x += alpha * d;
    r -= alpha * ad;
    ++used;
    if (std::sqrt(g.dot(r, r)) <= rtol * bnorm) break;
    z = g.shifted_inverse(r, sigma);
    double rz_new = g.dot(r, z);
    d = z + (rz_new / rz) * d;
    rz = rz_new;
  }
  return x;
}

}  // namespace detail

template <class Disc>
void validate(const KWProblem<Disc>& p) {
  if (!p.W.grid) throw ArgumentError("KW problem without a grid");
  if (!(p.kappa > 0)) throw ArgumentError("KW exponent rate must be positive");
  if (!p.W.values.allFinite()) throw ValidationError("KW density has non-finite samples");
  if (p.W.values.minCoeff() < 0) throw ValidationError("KW density is negative somewhere");
  if (!(p.W.mean() > 0)) throw ValidationError("KW density has zero integral");
  if (!(p.c > 0)) throw ConditionError("KW constant must be positive for solvability");
}

template <class Disc>
std::pair<BasicField<Disc>, KWDiagnostics> kw_solve(const KWProblem<Disc>& p, const KWOptions& opts = {}) {
  validate(p);
  const Disc& g = *p.W.grid;
  Array u;
  if (opts.initial == "zero") {
    u = Array::Zero(Eigen::Index(g.size()));
  } else if (opts.initial == "balance") {
    u = Array::Constant(Eigen::Index(g.size()), std::log(p.c / p.W.mean()) / p.kappa);
  } else {
    throw ArgumentError("unknown KW initial guess: " + opts.initial);
  }
  KWDiagnostics diag;
  Array r = detail::kw_residual(g, p, u);
  double norm = detail::weighted_norm(g, r);
  diag.history.push_back(r.abs().maxCoeff());
  for (int it = 0;; ++it) {
    if (r.abs().maxCoeff() <= opts.tolerance) break;
    if (it >= opts.max_iterations) {
      std::ostringstream os;
      os << "KW Newton did not converge; residual history:";
      for (double h : diag.history) os << ' ' << h;
      throw ConvergenceError(os.str());
    }
    Array q = p.kappa * p.W.values * (p.kappa * u).exp();
    int used = 0;
    double sigma = std::max(g.mean(q), 1e-300);
    Array step = detail::pcg(g, q, Array(-r), sigma, 1e-13, opts.max_cg_iterations, used);
    diag.cg_iterations += used;
    double t = 1;
    Array trial, rt;
    double nt = 0;
    int halvings = 0;
    for (;; ++halvings) {
      trial = u + t * step;
      rt = detail::kw_residual(g, p, trial);
      nt = detail::weighted_norm(g, rt);
      if (std::isfinite(nt) && nt <= (1 - opts.armijo * t) * norm) break;
      if (halvings >= opts.max_halvings) break;
      t *= 0.5;
    }
    if (!std::isfinite(nt) || (halvings >= opts.max_halvings && nt > norm)) {
      std::ostringstream os;
      os << "KW line search failed; residual history:";
      for (double h : diag.history) os << ' ' << h;
      throw ConvergenceError(os.str());
    }
    u = trial;
    r = rt;
    norm = nt;
    diag.iterations = it + 1;
    diag.history.push_back(r.abs().maxCoeff());
  }
  Array q = p.kappa * p.W.values * (p.kappa * u).exp();
  diag.residual_sup = r.abs().maxCoeff();
  diag.residual_l2 = norm;
  diag.q_min = q.minCoeff();
  diag.q_mean = g.mean(q);
  diag.positive_operator = diag.q_min >= 0 && diag.q_mean > 0;
  return {BasicField<Disc>(p.W.grid, u), diag};
}

struct JacobianReport {
  double analytic_norm = 0;
  double fd_norm = 0;
  double abs_error = 0;
  double rel_error = 0;
  bool pass = false;
};

template <class Disc>
JacobianReport jacobian_check(const KWProblem<Disc>& p, const BasicField<Disc>& u, const BasicField<Disc>& v,
                              double h = 1e-5, double rtol = 1e-6) {
  const Disc& g = *p.W.grid;
  Array jv = g.laplacian(v.values) + p.kappa * p.W.values * (p.kappa * u.values).exp() * v.values;
  Array fd = (detail::kw_residual(g, p, Array(u.values + h * v.values)) -
              detail::kw_residual(g, p, Array(u.values - h * v.values))) /
             (2 * h);
  JacobianReport rep;
  rep.analytic_norm = jv.abs().maxCoeff();
  rep.fd_norm = fd.abs().maxCoeff();
  rep.abs_error = (jv - fd).abs().maxCoeff();
  rep.rel_error = rep.analytic_norm > 0 ? rep.abs_error / rep.analytic_norm : rep.abs_error;
  rep.pass = rep.analytic_norm == 0 ? rep.abs_error == 0 : rep.rel_error <= rtol;
  return rep;
}

// Flat binary dump: "SWKFIELD", u32 version, u32 axis count, u32 per axis, u8 complex flag, float64 row-major.
void write_field_dump(const std::string& path, const std::vector<int>& dims, const Array& values);
void write_field_dump(const std::string& path, const std::vector<int>& dims, const Eigen::ArrayXcd& values);
struct FieldDump {
  std::vector<int> dims;
  bool complex = false;
  std::vector<double> data;
};
FieldDump read_field_dump(const std::string& path);

}  // namespace swk
