#pragma once

#include <complex>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "swk/discretization.hpp"
#include "swk/exalg.hpp"
#include "swk/geometry.hpp"
#include "swk/gridforms.hpp"
#include "swk/spectral.hpp"

namespace swk {

struct ConstantValue {
  double value = 0;
  // "computed-from-integral", "config", "solved" or "free-constant".
  std::string provenance;
};

struct GridSpec {
  // "full" or "symmetric".
  std::string kind = "symmetric";
  int samples = 16;
};

// Inputs of the 6d and 8d assemblies. Degrees list the section bundle per T^2 factor
// (0 = trivial bundle with the constant section).
struct AssembleConfig {
  std::string case_tag = "6d-perturbed";
  GridSpec grid;
  std::vector<int> degrees0{0, 0, 0};
  std::vector<int> degrees1{0, 0, 0};
  double r0 = 0, r1 = 0;
  bool a_given = false;
  double a = 0;
  // Scales applied to the sections (phi, psi); densities pick up |scale|^2.
  std::complex<double> scale0 = 1, scale1 = 1;
  KWOptions kw;
  double tolerance = 1e-6;
};

struct SolutionTuple {
  std::string case_tag;
  int dim = 6;
  std::shared_ptr<const Discretization> grid;
  AssembleConfig config;
  // Unknowns on the grid. For 8d lambda_tilde and f1 are unused.
  Array re_f, im_f, lambda, lambda_tilde, f0, f1;
  // Section densities |phi_0|^2, |psi_0|^2 in the reference metrics.
  Array W0, W1;
  // Derived densities |phi|^2 and |psi|^2 after the conformal change.
  Array phi2, psi2;
  std::map<std::string, ConstantValue> constants;
  // Constant-coefficient 3-form added to beta.
  MultiVector theta{3};
  double theta_t = 0;
  // Ansatz: beta = (dbar f + d fbar) ^ omega.
  std::string beta_ansatz;
  KWDiagnostics kw0, kw1;
  bool feasible = true;
  std::string infeasibility;
  // Bundle descriptors and holomorphy certificates of the section densities.
  std::vector<std::string> bundle_notes;
  double holomorphy_certificate = 0;
};

struct ComponentNorms {
  double sup = 0;
  double l2 = 0;
};

struct EquationReport {
  std::string name;
  std::string formula;
  ComponentNorms total;
  // Keys such as "(1,1)", "(2,0)+(0,2)", "omega-trace", "omega^2", "remainder", "anti-self-dual".
  std::map<std::string, ComponentNorms> parts;
};

struct ResidualReport {
  std::string case_tag;
  std::string grid;
  std::size_t unknowns = 0;
  std::size_t grid_points = 0;
  std::vector<EquationReport> equations;
  ComponentNorms total;
  // Two independent evaluations of d*beta and of the relevant d beta piece.
  double dstar_paths_diff = 0;
  double dbeta_paths_diff = 0;
  bool feasible = true;
  std::string infeasibility;
  double tolerance = 0;
  bool pass = false;
  std::map<std::string, double> scalars;
  std::map<std::string, double> runtimes;
};

struct Assembly {
  SolutionTuple tuple;
  ResidualReport report;
};

std::shared_ptr<const Discretization> make_grid(const GridSpec& spec, int n);

Assembly assemble_6d(const AssembleConfig& cfg);
Assembly assemble_8d(const AssembleConfig& cfg);
Assembly assemble(const AssembleConfig& cfg);

ResidualReport residual_report(const SolutionTuple& s);

struct ScaleReport {
  std::complex<double> a, b;
  double predicted_re_shift = 0, predicted_im_shift = 0;
  double re_shift_error = 0, im_shift_error = 0;
  // Max difference over densities, curvature-level fields and residual norms.
  double invariant_diff = 0;
  std::map<std::string, double> field_diffs;
  std::complex<double> phase0, phase1;
  double phase_modulus_error = 0;
  ResidualReport base, scaled;
  bool pass = false;
};

ScaleReport gauge_scale_equivalence(const SolutionTuple& s, std::complex<double> a, std::complex<double> b,
                                    double tol = 1e-10);

struct FamilyCertificate {
  bool theta_primitive = false;
  bool star_theta_kills_phi = false;
  bool theta_kills_psi = false;
  bool theta_closed = false;
  bool theta_coclosed = false;
};

// s (dz1^dzbar2^dzbar3 + conjugate).
MultiVector noncompact_theta(const ExactScalar& s = 1);
FamilyCertificate family_certificate(const MultiVector& theta);

struct FamilyReport {
  FamilyCertificate certificate;
  std::vector<double> t_values;
  std::vector<ResidualReport> reports;
  double max_drift = 0;
  bool pass = false;
};

ResidualReport noncompact_family(const SolutionTuple& s, double t);
FamilyReport noncompact_family_sweep(const SolutionTuple& s, const std::vector<double>& ts, double tol = 1e-10);

// ---- reduced 2d systems ----

enum class ReducedCase { sigma_phi, sigma_psi, case1, case2, case3, case4 };
std::string to_string(ReducedCase c);
ReducedCase parse_reduced_case(const std::string& s);

struct ReducedData {
  std::shared_ptr<const TorusGrid> grid;
  // |phi|^2 or |psi|^2 in the reference metric.
  Array W;
  // Zero-mean fluctuation of the curvature trace field: G = A + g.
  Array g;
  // r0, r1 or a depending on the case.
  double constant = 0;
  // Free integration constant (a_1..a_4); 0 by default.
  double free_constant = 0;
  KWOptions kw{1e-9};
  double tolerance = 1e-8;
};

struct ReducedSolution {
  ReducedCase which;
  std::shared_ptr<const TorusGrid> grid;
  Array re_f, im_f, lambda;
  // A and the exponent shift e0 of the combined equation.
  double A = 0, e0 = 0;
  std::map<std::string, ConstantValue> constants;
  KWDiagnostics kw;
  std::string beta_ansatz;
};

struct ReducedReport {
  std::string which;
  // Original pre-split pair and the merge relation.
  double eq1_sup = 0, eq2_sup = 0, merge_sup = 0;
  std::string eq1_formula, eq2_formula, merge_formula;
  double linear_integral = 0, kw_integral = 0;
  double tolerance = 0;
  bool pass = false;
};

std::pair<ReducedSolution, ReducedReport> reduce_solve_2d(ReducedCase c, const ReducedData& data);
ReducedReport reduced_residual(const ReducedSolution& s, const ReducedData& data);

}  // namespace swk
