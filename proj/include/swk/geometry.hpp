#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "swk/spectral.hpp"

namespace swk {

// |Theta_d(z)|^2 e^{-2 pi d y^2} for modulus i; degree 0 is the trivial bundle (density 1).
double theta_density_at(int degree, double x, double y);
// Bound on the dropped series terms relative to the leading term.
double theta_tail_bound(int degree);

struct FactorBundle {
  int degree = 0;
  std::shared_ptr<const TorusGrid> grid;
  Array density;
  // F = c i dx^dy on the factor; c = -2 pi d.
  double curvature_coeff = 0;
  // (i/2pi) times the integral of F over the factor.
  double degree_integral = 0;
  // sup |-1/2 Delta log W - c| where W > 1e-3 max W.
  double holomorphy_certificate = 0;
  // Grid local minima of W below 1e-3 max W.
  std::vector<std::pair<double, double>> zeros;
};

FactorBundle theta_density(int degree, int samples);
FactorBundle trivial_factor(int samples);

struct LineBundleData {
  std::vector<int> factor_degrees;
  ScalarField density;
  std::vector<double> ref_curvature_coeffs;
  double holomorphy_certificate = 0;
};

LineBundleData product_bundle(const std::vector<FactorBundle>& factors);

// Product densities sampled directly on solver grids.
Array product_density(const TorusGrid& g, const std::vector<int>& degrees);
// Throws ValidationError unless every factor density is invariant under the square's symmetries.
Array product_density(const SymmetricProductGrid& g, const std::vector<int>& degrees);
bool dihedral_invariant(int degree, int samples, double tol = 1e-12);

// Splits F = 4 ddbar f0 - 2 pi i a0 omega; F given by its (1,1) coefficient grids F_{j kbar}.
struct BackgroundPotential {
  ScalarField f0;
  double a0 = 0;
  double residual = 0;
};
BackgroundPotential background_potential(const FormField& F, double tol = 1e-10);
// Constant curvature F = sum_j c_j i dx_j^dy_j: f0 = 0 and a0 = -c/(2 pi) when all c_j agree.
double constant_curvature_slope(const std::vector<double>& coeffs, double tol = 1e-10);
// (1,1) coefficient grids of sum_j c_j i dx_j^dy_j.
FormField constant_curvature_form(std::shared_ptr<const TorusGrid> g, const std::vector<double>& coeffs);

}  // namespace swk
