#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

#include "common.hpp"
#include "swk/errors.hpp"

namespace swk {

namespace detail {

FactorInfo factor_info(int degree) {
  static std::mutex mu;
  static std::map<int, FactorInfo> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(degree);
  if (it != cache.end()) return it->second;
  FactorInfo info;
  if (degree > 0) {
    FactorBundle b = theta_density(degree, 64);
    info.degree_integral = b.degree_integral;
    info.certificate = b.holomorphy_certificate;
  }
  return cache.emplace(degree, info).first->second;
}

Array section_density(const Discretization& g, const std::vector<int>& degrees, double scale2) {
  if (auto t = dynamic_cast<const TorusGrid*>(&g)) return scale2 * product_density(*t, degrees);
  if (auto s = dynamic_cast<const SymmetricProductGrid*>(&g)) return scale2 * product_density(*s, degrees);
  throw ArgumentError("unsupported discretization");
}

std::vector<double> chern_coeffs(const std::vector<int>& degrees, double sign, double& certificate) {
  std::vector<double> c;
  for (int d : degrees) {
    FactorInfo f = factor_info(d);
    certificate = std::max(certificate, f.certificate);
    c.push_back(sign * kTwoPi * f.degree_integral);
  }
  return c;
}

double slope_or_throw(const std::vector<double>& coeffs, const std::string& clause) {
  try {
    return constant_curvature_slope(coeffs);
  } catch (const ConditionError&) {
    throw ConditionError("curvature not proportional to omega; violated: " + clause);
  }
}

void check_degrees(const std::vector<int>& degrees, int n, const std::string& which) {
  if (int(degrees.size()) != n) throw ArgumentError(which + " needs one degree per T^2 factor");
  for (int d : degrees)
    if (d < 0) throw ConditionError(which + " has negative degree on a factor: no holomorphic section");
}

}  // namespace detail

std::shared_ptr<const Discretization> make_grid(const GridSpec& spec, int n) {
  if (spec.kind == "full") return TorusGrid::cube(n, spec.samples);
  if (spec.kind == "symmetric") return SymmetricProductGrid::make(n, spec.samples);
  throw ArgumentError("unknown grid kind: " + spec.kind);
}

namespace {

KWDiagnostics solve_kw(std::shared_ptr<const Discretization> g, const Array& W, double kappa, double c,
                       const KWOptions& opts, Array& out) {
  KWProblem<Discretization> p{BasicField<Discretization>(g, W), kappa, c};
  auto [u, diag] = kw_solve(p, opts);
  out = u.values;
  return diag;
}

void require_strict(bool ok, const std::string& clause, double lhs, double rhs) {
  if (ok) return;
  std::ostringstream os;
  os.precision(17);
  os << "feasibility clause violated: " << clause << " (" << lhs + 0.0 << " vs " << rhs + 0.0 << ")";
  throw ConditionError(os.str());
}

}  // namespace

Assembly assemble_6d(const AssembleConfig& cfg) {
  detail::Stopwatch sw;
  const bool perturbed = cfg.case_tag == "6d-perturbed";
  if (!perturbed && cfg.case_tag != "6d") throw ArgumentError("not a 6d case tag: " + cfg.case_tag);
  if (!perturbed && (cfg.r0 != 0 || cfg.r1 != 0)) throw ArgumentError("the unperturbed 6d case has r0 = r1 = 0");
  if (cfg.scale0 == 0.0 || cfg.scale1 == 0.0) throw ArgumentError("section scale must be nonzero");
  detail::check_degrees(cfg.degrees0, 3, "L0 section bundle");
  detail::check_degrees(cfg.degrees1, 3, "K (x) L1^-1 section bundle");

  SolutionTuple s;
  s.case_tag = cfg.case_tag;
  s.dim = 6;
  s.config = cfg;
  s.theta = MultiVector(3);
  s.beta_ansatz = "(dbar f + d fbar) ^ omega";

  double cert = 0;
  // F_A lives on K^-1 L0^2 (K trivial); F_B on L1 = dual of the section bundle.
  auto cA = detail::chern_coeffs(cfg.degrees0, -2, cert);
  auto cB = detail::chern_coeffs(cfg.degrees1, 2, cert);
  s.holomorphy_certificate = cert;
  const double a0 = detail::slope_or_throw(cA, "c1(K^-1 L0^2) proportional to [omega]");
  const double a1 = detail::slope_or_throw(cB, "c1(L1) proportional to [omega]");
  s.constants["a0"] = {a0, "computed-from-integral"};
  s.constants["a1"] = {a1, "computed-from-integral"};
  s.constants["r0"] = {cfg.r0, "config"};
  s.constants["r1"] = {cfg.r1, "config"};
  s.constants["F_A coefficient"] = {cA[0], "computed-from-integral"};
  s.constants["F_B coefficient"] = {cB[0], "computed-from-integral"};
  if (perturbed) {
    require_strict(a0 < cfg.r0, "a0 < r0", a0, cfg.r0);
    require_strict(a1 > -cfg.r1, "a1 > -r1", a1, -cfg.r1);
  } else {
    require_strict(a0 < 0, "a0 < 0", a0, 0);
    require_strict(a1 > 0, "a1 > 0", a1, 0);
  }

  s.grid = make_grid(cfg.grid, 3);
  const auto& g = *s.grid;
  s.W0 = detail::section_density(g, cfg.degrees0, std::norm(cfg.scale0));
  s.W1 = detail::section_density(g, cfg.degrees1, std::norm(cfg.scale1));
  // Constant curvature: the background potentials vanish.
  s.f0 = Array::Zero(Eigen::Index(g.size()));
  s.f1 = s.f0;
  for (int d : cfg.degrees0) s.bundle_notes.push_back("L0 factor: " + (d ? "theta degree " + std::to_string(d) : std::string("trivial")));
  for (int d : cfg.degrees1)
    s.bundle_notes.push_back("K (x) L1^-1 factor: " + (d ? "theta degree " + std::to_string(d) : std::string("trivial")));

  const double c_phi = kPi * (cfg.r0 - a0);
  const double c_psi = kPi * (a1 + cfg.r1);
  s.constants["kw rhs phi"] = {c_phi, "computed-from-integral"};
  s.constants["kw rhs psi"] = {c_psi, "computed-from-integral"};

  Array U, V;
  s.kw0 = solve_kw(s.grid, Array((2 * s.f0).exp() * s.W0 / 8), 6, c_phi, cfg.kw, U);
  s.kw1 = solve_kw(s.grid, Array((-2 * s.f1).exp() * s.W1 / 8), 6, c_psi, cfg.kw, V);
  s.re_f = -U;
  s.lambda = s.f0 + U;
  s.im_f = -V;
  s.lambda_tilde = s.f1 - V;
  s.phi2 = (2 * s.lambda - 4 * s.re_f).exp() * s.W0;
  s.psi2 = (-4 * s.im_f - 2 * s.lambda_tilde).exp() * s.W1;
  const double t_solve = sw.seconds();

  Assembly out{s, residual_report(s)};
  out.report.runtimes["solve"] = t_solve;
  out.report.runtimes["total"] = sw.seconds();
  return out;
}

Assembly assemble_8d(const AssembleConfig& cfg) {
  detail::Stopwatch sw;
  const bool perturbed = cfg.case_tag == "8d-perturbed";
  if (!perturbed && cfg.case_tag != "8d") throw ArgumentError("not an 8d case tag: " + cfg.case_tag);
  if (!perturbed && (cfg.r0 != 0 || cfg.r1 != 0)) throw ArgumentError("the unperturbed 8d case has r0 = r1 = 0");
  if (cfg.scale0 == 0.0) throw ArgumentError("section scale must be nonzero");
  detail::check_degrees(cfg.degrees0, 4, "L section bundle");

  SolutionTuple s;
  s.case_tag = cfg.case_tag;
  s.dim = 8;
  s.config = cfg;
  s.theta = MultiVector(4);
  s.beta_ansatz = "(dbar f + d fbar) ^ omega";

  double cert = 0;
  auto cA = detail::chern_coeffs(cfg.degrees0, -2, cert);
  s.holomorphy_certificate = cert;
  const double slope = detail::slope_or_throw(cA, "c1(K^-1 L^2) proportional to [omega]");
  // F_A = 4 ddbar f0 - 4 a i omega, i.e. c1(K^-1 L^2) = (2a/pi)[omega].
  const double a = kPi / 2 * slope;
  if (cfg.a_given && std::abs(cfg.a - a) > 1e-10)
    throw ConditionError("feasibility clause violated: c1(K^-1 L^2) = (2a/pi)[omega] with configured a");
  s.constants["a"] = {a, "computed-from-integral"};
  s.constants["r0"] = {cfg.r0, "config"};
  s.constants["r1"] = {cfg.r1, "config"};
  s.constants["c0"] = {0.0, "free-constant"};
  s.constants["F_A coefficient"] = {cA[0], "computed-from-integral"};
  if (perturbed) {
    require_strict(cfg.r0 > a, "r0 > a", cfg.r0, a);
    if (cfg.r0 != cfg.r1) {
      s.feasible = false;
      std::ostringstream os;
      os.precision(17);
      os << "r0 = r1 balance fails (r0 - r1 = " << cfg.r0 - cfg.r1 << "); omega^2 residual is forced";
      s.infeasibility = os.str();
    }
  } else {
    require_strict(-2 * a > 0, "-2a > 0", -2 * a, 0);
  }

  s.grid = make_grid(cfg.grid, 4);
  const auto& g = *s.grid;
  s.W0 = detail::section_density(g, cfg.degrees0, std::norm(cfg.scale0));
  s.W1 = Array::Zero(Eigen::Index(g.size()));
  s.f0 = s.W1;
  s.f1 = s.W1;
  for (int d : cfg.degrees0) s.bundle_notes.push_back("L factor: " + (d ? "theta degree " + std::to_string(d) : std::string("trivial")));

  const double c0 = 0;
  const double c = 2 * (cfg.r0 - a);
  s.constants["kw rhs"] = {c, "computed-from-integral"};
  Array U;
  s.kw0 = solve_kw(s.grid, Array((2 * s.f0 + 6 * c0).exp() * s.W0 / 16), 14, c, cfg.kw, U);
  s.re_f = -U;
  s.im_f = s.re_f - c0;
  s.lambda = s.f0 - s.re_f;
  s.lambda_tilde = s.W1;
  s.phi2 = (2 * s.lambda - 6 * (s.re_f + s.im_f)).exp() * s.W0;
  s.psi2 = s.W1;
  const double t_solve = sw.seconds();

  Assembly out{s, residual_report(s)};
  out.report.runtimes["solve"] = t_solve;
  out.report.runtimes["total"] = sw.seconds();
  return out;
}

Assembly assemble(const AssembleConfig& cfg) {
  if (cfg.case_tag == "6d" || cfg.case_tag == "6d-perturbed") return assemble_6d(cfg);
  if (cfg.case_tag == "8d" || cfg.case_tag == "8d-perturbed") return assemble_8d(cfg);
  throw ArgumentError("unknown assembly case: " + cfg.case_tag);
}

}  // namespace swk
